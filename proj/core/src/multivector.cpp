#include "exalg/multivector.hpp"

#include <cmath>
#include <stdexcept>

namespace exalg {

Multivector::Multivector(int ambient, Field field, double tol)
    : ambient_(ambient), field_(field), tol_(tol) {
  if (ambient < 1 || ambient > kDimensionCap)
    throw std::invalid_argument("Multivector: ambient dimension out of range");
}

Multivector Multivector::zero(int ambient, Field field) {
  return Multivector(ambient, field);
}

Multivector Multivector::scalar(int ambient, Scalar value, Field field) {
  Multivector m(ambient, field);
  m.add_term(0u, value);
  return m;
}

Multivector Multivector::basis(const MultiIndex& i, Field field) {
  Multivector m(i.ambient(), field);
  m.add_term(i.bits(), Scalar(1.0));
  return m;
}

Multivector Multivector::from_vector(const std::vector<Scalar>& coords,
                                     int ambient, Field field) {
  if (static_cast<int>(coords.size()) != ambient)
    throw std::invalid_argument("from_vector: expected " +
                                std::to_string(ambient) + " coordinates, got " +
                                std::to_string(coords.size()));
  Multivector m(ambient, field);
  for (int k = 0; k < ambient; ++k) m.add_term(1u << k, coords[k]);
  return m;
}

Scalar Multivector::coeff(std::uint32_t bits) const {
  auto it = terms_.find(bits);
  return it == terms_.end() ? Scalar(0.0) : it->second;
}

void Multivector::add_term(std::uint32_t bits, Scalar value) {
  if (ambient_ < 32 && (bits >> ambient_) != 0)
    throw std::invalid_argument("add_term: index set exceeds ambient dimension");
  if (field_ == Field::Real) {
    if (std::abs(value.imag()) > tol_)
      throw std::domain_error(
          "real field: rejected coefficient with nonzero imaginary part");
    value = Scalar(value.real(), 0.0);
  }
  auto [it, inserted] = terms_.try_emplace(bits, value);
  if (!inserted) it->second += value;
  if (std::abs(it->second) <= tol_) terms_.erase(it);
}

double Multivector::norm_squared() const {
  double s = 0;
  for (const auto& [bits, c] : terms_) s += std::norm(c);
  return s;
}

double Multivector::norm() const { return std::sqrt(norm_squared()); }

std::optional<int> Multivector::bottom_grade() const {
  std::optional<int> best;
  for (const auto& [bits, c] : terms_) {
    int g = std::popcount(bits);
    if (!best || g < *best) best = g;
  }
  return best;
}

std::optional<int> Multivector::top_grade() const {
  std::optional<int> best;
  for (const auto& [bits, c] : terms_) {
    int g = std::popcount(bits);
    if (!best || g > *best) best = g;
  }
  return best;
}

bool Multivector::is_homogeneous() const {
  auto b = bottom_grade();
  return !b || *b == *top_grade();
}

std::vector<Scalar> Multivector::vector_coords() const {
  std::vector<Scalar> out(ambient_, Scalar(0.0));
  for (const auto& [bits, c] : terms_)
    if (std::popcount(bits) == 1) out[std::countr_zero(bits)] = c;
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [bits, c] : out.terms_) c = -c;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  check_compatible(*this, other);
  for (const auto& [bits, c] : other.terms_) add_term(bits, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  check_compatible(*this, other);
  for (const auto& [bits, c] : other.terms_) add_term(bits, -c);
  return *this;
}

Multivector& Multivector::operator*=(Scalar s) {
  Multivector out(ambient_, field_, tol_);
  for (const auto& [bits, c] : terms_) out.add_term(bits, c * s);
  *this = std::move(out);
  return *this;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Coefficient in a form the expression grammar can read back.
std::string format_coeff(Scalar c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "i";
  std::string out = "(" + format_double(c.real());
  if (c.imag() >= 0) out += "+";
  return out + format_double(c.imag()) + "i)";
}

}  // namespace

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  // Terms in lexicographic order of their index lists.
  std::vector<std::pair<std::vector<int>, Scalar>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [bits, c] : terms_)
    sorted.emplace_back(MultiIndex(bits, ambient_).indices(), c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::string out;
  bool first = true;
  for (const auto& [ix, c] : sorted) {
    Scalar v = c;
    if (first) {
      first = false;
    } else if (v.imag() == 0.0 && v.real() < 0) {
      out += " - ";
      v = -v;
    } else {
      out += " + ";
    }
    std::string basis =
        ix.empty() ? "" : MultiIndex::from_indices(ix, ambient_).to_string();
    if (basis.empty()) {
      out += format_coeff(v);
    } else if (v == Scalar(1.0)) {
      out += basis;
    } else if (v == Scalar(-1.0)) {
      out += "-" + basis;
    } else {
      out += format_coeff(v) + "*" + basis;
    }
  }
  return out;
}

void check_compatible(const Multivector& a, const Multivector& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ambient dimension mismatch: " +
                                std::to_string(a.ambient()) + " vs " +
                                std::to_string(b.ambient()));
  if (a.field() != b.field())
    throw std::invalid_argument("field mismatch (real vs complex)");
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_compatible(a, b);
  Multivector out(a.ambient(), a.field(), std::max(a.tol(), b.tol()));
  for (const auto& [i, c] : a.terms()) {
    for (const auto& [j, d] : b.terms()) {
      if (i & j) continue;
      int sign = (pairs_bits(i, j) & 1) ? -1 : 1;
      out.add_term(i | j, static_cast<double>(sign) * c * d);
    }
  }
  return out;
}

Scalar inner(const Multivector& a, const Multivector& b) {
  check_compatible(a, b);
  Scalar s(0.0);
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  auto ia = ta.begin();
  auto ib = tb.begin();
  while (ia != ta.end() && ib != tb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

Multivector contract_left(const Multivector& contractor,
                          const Multivector& contractee) {
  check_compatible(contractor, contractee);
  Multivector out(contractor.ambient(), contractor.field(),
                  std::max(contractor.tol(), contractee.tol()));
  for (const auto& [i, c] : contractor.terms()) {
    for (const auto& [j, d] : contractee.terms()) {
      if (i & ~j) continue;  // i not a subset of j
      std::uint32_t rem = j & ~i;
      int sign = (pairs_bits(i, rem) & 1) ? -1 : 1;
      out.add_term(rem, static_cast<double>(sign) * std::conj(c) * d);
    }
  }
  return out;
}

Multivector contract_right(const Multivector& contractee,
                           const Multivector& contractor) {
  check_compatible(contractee, contractor);
  Multivector out(contractee.ambient(), contractee.field(),
                  std::max(contractee.tol(), contractor.tol()));
  for (const auto& [j, d] : contractee.terms()) {
    for (const auto& [i, c] : contractor.terms()) {
      if (i & ~j) continue;
      std::uint32_t rem = j & ~i;
      int sign = (pairs_bits(rem, i) & 1) ? -1 : 1;
      out.add_term(rem, static_cast<double>(sign) * std::conj(c) * d);
    }
  }
  return out;
}

Multivector involution(const Multivector& m, Involution kind) {
  Multivector out(m.ambient(), m.field(), m.tol());
  for (const auto& [bits, c] : m.terms()) {
    int p = std::popcount(bits);
    int sign = 1;
    switch (kind) {
      case Involution::Grade:
        sign = (p & 1) ? -1 : 1;
        break;
      case Involution::Reversion:
        sign = ((p * (p - 1) / 2) & 1) ? -1 : 1;
        break;
      case Involution::Clifford:
        sign = zeta(p);
        break;
      case Involution::Check:
        // n+1 grade involutions: identity for odd n, grade involution for even.
        sign = (m.ambient() % 2 == 0 && (p & 1)) ? -1 : 1;
        break;
    }
    out.add_term(bits, static_cast<double>(sign) * c);
  }
  return out;
}

Multivector grade_involution_power(const Multivector& m, int k) {
  return (k % 2 == 0) ? m : involution(m, Involution::Grade);
}

Multivector grade_project(const Multivector& m, int p) {
  Multivector out(m.ambient(), m.field(), m.tol());
  if (p < 0 || p > m.ambient()) return out;
  for (const auto& [bits, c] : m.terms())
    if (std::popcount(bits) == p) out.add_term(bits, c);
  return out;
}

Multivector convention_contract(ContractionConvention conv,
                                const Multivector& a, const Multivector& b) {
  switch (conv) {
    case ContractionConvention::ILeft:
      return contract_left(a, b);
    case ContractionConvention::IRight:
      return contract_right(a, b);
    case ContractionConvention::IILeft:
      return contract_right(b, a);
    case ContractionConvention::IIRight:
      return contract_left(b, a);
    case ContractionConvention::IIILeft:
      return contract_left(involution(a, Involution::Reversion), b);
    case ContractionConvention::IIIRight:
      return contract_right(a, involution(b, Involution::Reversion));
    case ContractionConvention::Hestenes: {
      if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::invalid_argument(
            "Hestenes product requires homogeneous operands");
      int p = a.top_grade().value_or(0);
      int q = b.top_grade().value_or(0);
      return p <= q ? convention_contract(ContractionConvention::IIILeft, a, b)
                    : convention_contract(ContractionConvention::IIIRight, a, b);
    }
  }
  throw std::logic_error("unknown contraction convention");
}

}  // namespace exalg
