#include "parcomp/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace parcomp {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(std::span<const Rational> v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

RatVector rational_vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  RatVector v;
  for (const auto& e : j) {
    if (e.is_string()) {
      v.push_back(Rational::parse(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      v.emplace_back(e.get<long long>());
    } else {
      throw std::invalid_argument("expected rational string, got " + e.dump());
    }
  }
  return v;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

json to_json(const RootSystem& rs) {
  json simple = json::array();
  for (const auto& a : rs.simple_roots()) simple.push_back({{"name", a.name}, {"coeffs", to_json(a.coeffs)}});
  return {
      {"label", rs.label()},
      {"rank", rs.rank()},
      {"model", std::string(to_string(rs.model().kind))},
      {"simple_roots", simple},
      {"cartan_matrix", to_json(rs.cartan_matrix())},
      {"positive_root_count", rs.positive_roots().size()},
  };
}

json to_json(const SymmetricPair& pair) {
  const PairFamily& f = pair.family;
  json params = json::object();
  switch (f.kind) {
    case FamilyKind::SlSoOdd:
    case FamilyKind::SlSoEven:
    case FamilyKind::SlSp: params["n"] = f.n; break;
    case FamilyKind::SoSoOddOdd:
      params["m"] = f.m;
      params["n"] = f.n;
      break;
    case FamilyKind::Diagonal: params["base"] = f.base.name(); break;
    case FamilyKind::EqualRank:
      params["host"] = f.base.name();
      if (!f.subalgebra.empty()) params["name"] = f.subalgebra;
      break;
    default: break;
  }
  return {
      {"family", std::string(tag(f.kind))},
      {"params", params},
      {"host", pair.host.label()},
      {"hprime_dim", pair.hprime_dim},
      {"classes", pair.classes},
  };
}

json to_json(const StrictSystem& sys) {
  json eq = json::array();
  json gt = json::array();
  for (const auto& l : sys.equalities) eq.push_back(to_json(l));
  for (const auto& l : sys.strict_positives) gt.push_back(to_json(l));
  return {{"eq", eq}, {"gt", gt}};
}

json to_json(const CompatibilityResult& result) {
  json j = {{"pi", result.pi.indices()}, {"compatible", result.compatible}};
  if (result.witness) j["witness"] = to_json(*result.witness);
  if (result.embedded_witness) j["embedded_witness"] = to_json(*result.embedded_witness);
  return j;
}

json to_json(const Classification& c) {
  json compatible = json::array();
  for (const auto& r : c.results) {
    if (!r.compatible) continue;
    compatible.push_back({{"pi", r.pi.indices()},
                          {"witness", to_json(*r.witness)},
                          {"embedded_witness", to_json(*r.embedded_witness)}});
  }
  return {{"pair", to_json(c.pair)}, {"total", c.total()}, {"compatible", compatible}, {"count", c.compatible_count}};
}

json to_json(const CrossCheckReport& report) {
  json mismatches = json::array();
  for (const auto& pi : report.mismatches) mismatches.push_back(pi.indices());
  return {{"total", report.total},
          {"oracle_compatible", report.oracle_compatible},
          {"predicate_compatible", report.predicate_compatible},
          {"mismatches", mismatches}};
}

std::string to_csv(const Classification& c) {
  std::ostringstream os;
  os << "pi;compatible;witness\n";
  for (const auto& r : c.results) {
    for (std::size_t k = 0; k < r.pi.indices().size(); ++k) os << (k ? "," : "") << r.pi.indices()[k];
    os << ';' << (r.compatible ? "true" : "false") << ';';
    if (r.witness) {
      for (std::size_t k = 0; k < r.witness->size(); ++k) os << (k ? "," : "") << (*r.witness)[k];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace parcomp
