#include "exalg/fock.hpp"

#include <stdexcept>

namespace exalg {

FockOperator FockOperator::exterior(Multivector m) {
  FockOperator op;
  op.kind_ = Kind::Exterior;
  op.ambient_ = m.ambient();
  op.payload_ = std::move(m);
  return op;
}

FockOperator FockOperator::interior(Multivector m) {
  FockOperator op;
  op.kind_ = Kind::Interior;
  op.ambient_ = m.ambient();
  op.payload_ = std::move(m);
  return op;
}

FockOperator FockOperator::creation(IndexSeq r) {
  FockOperator op;
  op.kind_ = Kind::Creation;
  op.ambient_ = r.ambient();
  op.seq_ = std::move(r);
  return op;
}

FockOperator FockOperator::annihilation(IndexSeq r) {
  FockOperator op;
  op.kind_ = Kind::Annihilation;
  op.ambient_ = r.ambient();
  op.seq_ = std::move(r);
  return op;
}

FockOperator FockOperator::occupancy(MultiIndex i) {
  FockOperator op;
  op.kind_ = Kind::Occupancy;
  op.ambient_ = i.ambient();
  op.index_ = i;
  return op;
}

FockOperator FockOperator::vacancy(MultiIndex i) {
  FockOperator op;
  op.kind_ = Kind::Vacancy;
  op.ambient_ = i.ambient();
  op.index_ = i;
  return op;
}

FockOperator FockOperator::composed(std::vector<FockOperator> ops) {
  if (ops.empty())
    throw std::invalid_argument("FockOperator::composed: empty composition");
  FockOperator op;
  op.kind_ = Kind::Composed;
  op.ambient_ = ops.front().ambient();
  for (const auto& o : ops)
    if (o.ambient() != op.ambient_)
      throw std::invalid_argument("FockOperator::composed: ambient mismatch");
  op.children_ = std::move(ops);
  return op;
}

namespace {

// Signed basis blade for a possibly unsorted sequence: a_[r] = eps_r a_r.
Multivector signed_basis(const IndexSeq& r, Field field) {
  Sign s = epsilon(r);
  Multivector m(r.ambient(), field);
  if (s.zero) return m;
  m.add_term(MultiIndex::from_indices(r.seq(), r.ambient()),
             Scalar(static_cast<double>(s.value)));
  return m;
}

}  // namespace

Multivector FockOperator::apply(const Multivector& m) const {
  if (m.ambient() != ambient_)
    throw std::invalid_argument("FockOperator::apply: ambient mismatch");
  switch (kind_) {
    case Kind::Exterior:
      return wedge(payload_, m);
    case Kind::Interior:
      return contract_left(payload_, m);
    case Kind::Creation:
      return wedge(signed_basis(seq_, m.field()), m);
    case Kind::Annihilation:
      return contract_left(signed_basis(seq_, m.field()), m);
    case Kind::Occupancy: {
      Multivector e = Multivector::basis(index_, m.field());
      return wedge(e, contract_left(e, m));
    }
    case Kind::Vacancy: {
      Multivector e = Multivector::basis(index_, m.field());
      return contract_left(e, wedge(e, m));
    }
    case Kind::Composed: {
      Multivector acc = m;
      for (auto it = children_.rbegin(); it != children_.rend(); ++it)
        acc = it->apply(acc);
      return acc;
    }
  }
  throw std::logic_error("unknown Fock operator kind");
}

std::optional<int> FockOperator::parity() const {
  switch (kind_) {
    case Kind::Exterior:
    case Kind::Interior: {
      if (payload_.is_zero()) return 0;
      if (!payload_.is_homogeneous()) return std::nullopt;
      return *payload_.top_grade() % 2;
    }
    case Kind::Creation:
    case Kind::Annihilation:
      return seq_.size() % 2;
    case Kind::Occupancy:
    case Kind::Vacancy:
      return 0;
    case Kind::Composed: {
      int total = 0;
      for (const auto& c : children_) {
        auto p = c.parity();
        if (!p) return std::nullopt;
        total += *p;
      }
      return total % 2;
    }
  }
  return std::nullopt;
}

Eigen::MatrixXcd dense_operator(
    const std::function<Multivector(const Multivector&)>& op, int ambient,
    Field field) {
  const auto basis = all_indices(ambient);
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Multivector image = op(Multivector::basis(basis[c], field));
    for (const auto& [bits, coef] : image.terms()) mat(bits, c) = coef;
  }
  return mat;
}

Eigen::MatrixXcd FockOperator::dense() const {
  return dense_operator([this](const Multivector& m) { return apply(m); },
                        ambient_);
}

Multivector supercommutator_direct(const MultiIndex& i, const MultiIndex& j,
                                   const Multivector& m) {
  Multivector ei = Multivector::basis(i, m.field());
  Multivector ej = Multivector::basis(j, m.field());
  Multivector first = wedge(ei, contract_left(ej, m));
  Multivector second = contract_left(ej, wedge(ei, m));
  int sign = ((i.grade() * j.grade()) & 1) ? -1 : 1;
  return first - static_cast<double>(sign) * second;
}

SignedIndex supercommutator_closed(const MultiIndex& i, const MultiIndex& j,
                                   const MultiIndex& k) {
  const int n = i.ambient();
  if (j.ambient() != n || k.ambient() != n)
    throw std::invalid_argument("supercommutator_closed: ambient mismatch");
  const std::uint32_t ib = i.bits(), jb = j.bits(), kb = k.bits();
  const std::uint32_t x = jb & ~(ib | kb);
  const std::uint32_t y = (ib & kb) & ~jb;
  const std::uint32_t c = ib & jb & kb;
  const std::uint32_t d = (ib & jb) & ~kb;
  const std::uint32_t a = ib & ~jb;
  const std::uint32_t b = (jb & kb) & ~ib;
  const std::uint32_t e = kb & ~(ib | jb);

  SignedIndex out;
  out.index = MultiIndex(a | c | e, n);
  const bool d_empty = d == 0, c_empty = c == 0;
  if ((x | y) != 0 || d_empty == c_empty) {
    out.zero = true;
    return out;
  }
  int parity = std::popcount(d) + pairs_bits(a | b, d | e);
  out.sign = (d_empty ? 1 : -1) * ((parity & 1) ? -1 : 1);
  return out;
}

double leibniz_supercommutator_residual(const Blade& b, const Multivector& m) {
  const auto& vs = b.vectors();
  const int p = static_cast<int>(vs.size());
  if (p == 0)
    throw std::invalid_argument(
        "leibniz_supercommutator_residual: blade must have positive grade");
  const int n = m.ambient();
  if (b.ambient() != n)
    throw std::invalid_argument(
        "leibniz_supercommutator_residual: ambient mismatch");
  Field field = m.field();

  // [[iota_B, eps_M]] = iota_B eps_M - eps_{M^(p)} iota_B, linearly extended
  // over the parity split of M.
  Multivector m_inv = grade_involution_power(m, p);
  auto lhs = [&](const Multivector& x) {
    return contract_left(b.mv(), wedge(m, x)) -
           wedge(m_inv, contract_left(b.mv(), x));
  };

  // eps_{B -| M} plus the strictly intermediate Leibniz layers.
  auto subblade = [&](std::uint32_t sel) {
    std::vector<Eigen::VectorXcd> chosen;
    for (std::uint32_t t = sel; t;) {
      chosen.push_back(vs[std::countr_zero(t)]);
      t &= t - 1;
    }
    return wedge_vectors(chosen, n, field);
  };
  auto rhs = [&](const Multivector& x) {
    Multivector acc = wedge(contract_left(b.mv(), m), x);
    for (std::uint32_t sel = 1; sel + 1 < (1u << p); ++sel) {
      int k = std::popcount(sel);
      if (k == 0 || k == p) continue;
      int norm = 0;
      for (std::uint32_t t = sel; t;) {
        norm += std::countr_zero(t) + 1;
        t &= t - 1;
      }
      int eps = zeta(k) * ((norm & 1) ? -1 : 1);
      Multivector bi = subblade(sel);
      Multivector bic = subblade(~sel & ((1u << p) - 1u));
      Multivector term =
          wedge(contract_left(bic, grade_involution_power(m, k)),
                contract_left(bi, x));
      acc += static_cast<double>(eps) * term;
    }
    return acc;
  };

  Eigen::MatrixXcd dl = dense_operator(lhs, n, field);
  Eigen::MatrixXcd dr = dense_operator(rhs, n, field);
  return (dl - dr).cwiseAbs().maxCoeff();
}

}  // namespace exalg
