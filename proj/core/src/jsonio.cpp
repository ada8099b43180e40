#include "exalg/jsonio.hpp"

#include <algorithm>

#include <json.hpp>

namespace exalg {

namespace {

using nlohmann::json;

json terms_to_json(const Multivector& m) {
  std::vector<std::pair<std::vector<int>, Scalar>> sorted;
  sorted.reserve(m.terms().size());
  for (const auto& [bits, c] : m.terms())
    sorted.emplace_back(MultiIndex(bits, m.ambient()).indices(), c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json terms = json::array();
  for (const auto& [ix, c] : sorted)
    terms.push_back({{"indices", ix}, {"re", c.real()}, {"im", c.imag()}});
  return terms;
}

}  // namespace

std::string to_json_string(const Value& v, const SessionConfig& cfg) {
  json out;
  out["dimension"] = cfg.dimension;
  out["field"] = cfg.field == Field::Real ? "real" : "complex";
  if (const auto* m = std::get_if<Multivector>(&v)) {
    out["terms"] = terms_to_json(*m);
  } else {
    const auto& basis = std::get<SubspaceBasis>(v);
    json vectors = json::array();
    for (int k = 0; k < basis.dim(); ++k) {
      json col = json::array();
      for (int r = 0; r < basis.ambient; ++r)
        col.push_back({{"re", basis.columns(r, k).real()},
                       {"im", basis.columns(r, k).imag()}});
      vectors.push_back(col);
    }
    out["subspace"] = {{"dim", basis.dim()}, {"vectors", vectors}};
  }
  return out.dump();
}

Multivector multivector_from_json(const std::string& text) {
  json in = json::parse(text);
  int n = in.at("dimension").get<int>();
  Field field =
      in.at("field").get<std::string>() == "real" ? Field::Real : Field::Complex;
  Multivector m(n, field);
  for (const auto& term : in.at("terms")) {
    std::vector<int> ix = term.at("indices").get<std::vector<int>>();
    m.add_term(MultiIndex::from_indices(ix, n),
               Scalar(term.at("re").get<double>(), term.at("im").get<double>()));
  }
  return m;
}

}  // namespace exalg
