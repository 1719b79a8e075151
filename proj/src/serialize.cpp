#include "seshadri/serialize.hpp"

#include <sstream>

namespace seshadri {

namespace {

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an integer array");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = j[k].get<std::int64_t>();
  return v;
}

}  // namespace

Json integer_to_json(const Integer& n) {
  if (n <= Integer(INT64_MAX) && n >= Integer(INT64_MIN)) return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

Json rational_to_json(const Rational& q) {
  return Json{{"num", integer_to_json(numerator(q))}, {"den", integer_to_json(denominator(q))}};
}

Json to_json(const CartanData& cd) {
  Json rows = Json::array();
  for (int i = 0; i < cd.rank(); ++i) rows.push_back(vector_json(cd.matrix().row(i).transpose()));
  return Json{{"type", cd.type()}, {"rank", cd.rank()}, {"cartan", rows}};
}

CartanData cartan_from_json(const Json& j) {
  try {
    const Json& rows = j.at("cartan");
    const auto n = static_cast<Eigen::Index>(rows.size());
    IntMatrix c(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      IntVector row = vector_from_json(rows.at(static_cast<std::size_t>(i)));
      if (row.size() != n) throw ValidationError("cartan matrix is not square");
      c.row(i) = row.transpose();
    }
    if (j.contains("rank") && j.at("rank").get<Eigen::Index>() != n) throw ValidationError("rank mismatch");
    return CartanData::from_matrix(c, j.value("type", std::string("custom")));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed cartan json: ") + e.what());
  }
}

Json to_json(const StratPoset& p) {
  Json vertices = Json::array();
  for (VertexId v = 0; v < p.size(); ++v) vertices.push_back(p.label(v));
  Json edges = Json::array();
  for (const auto& e : p.edges())
    edges.push_back(Json{{"lower", p.label(e.lower)}, {"upper", p.label(e.upper)}, {"beta", vector_json(e.beta)},
                         {"bond", e.bond}});
  return Json{{"cartan", to_json(p.cartan())}, {"lambda", vector_json(p.lambda())},
              {"tau", p.label(p.top())},       {"qset", p.qset()},
              {"extended", p.extended()},      {"vertices", vertices},
              {"edges", edges}};
}

StratPoset poset_from_json(const Json& j) {
  try {
    CartanData cd = cartan_from_json(j.at("cartan"));
    Weight lambda = vector_from_json(j.at("lambda"));
    auto qset = j.at("qset").get<QSet>();
    StratPoset p = StratPoset::build(cd, lambda, j.at("tau").get<std::string>(), qset, j.value("extended", false));
    Json rebuilt = to_json(p);
    if (rebuilt.at("vertices") != j.at("vertices")) throw ValidationError("stored vertices do not match the poset");
    if (rebuilt.at("edges") != j.at("edges")) throw ValidationError("stored edges do not match the poset");
    return p;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed poset json: ") + e.what());
  }
}

Json to_json(const Chain& chain, const StratPoset& p) {
  Json vertices = Json::array();
  for (VertexId v : chain.elems) vertices.push_back(p.label(v));
  return Json{{"vertices", vertices}, {"bonds", chain.bonds}, {"bond_product", integer_to_json(bond_product(chain))}};
}

Json to_json(const StratPoset& p, const FanElement& a) {
  Json coeffs = Json::array();
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    Json term = rational_to_json(it->second);
    term["vertex"] = p.label(it->first);
    coeffs.push_back(term);
  }
  return Json{{"coeffs", coeffs}, {"degree", rational_to_json(a.degree())}};
}

Json to_json(const StratPoset& p, const LSPath& path) {
  Json sigmas = Json::array();
  for (VertexId v : path.sigmas) sigmas.push_back(p.label(v));
  Json ds = Json::array();
  for (const auto& d : path.ds) ds.push_back(rational_to_json(d));
  return Json{{"sigmas", sigmas}, {"ds", ds}};
}

Json to_json(const Character& chi) {
  Json out = Json::array();
  for (const auto& [mu, mult] : chi.terms()) out.push_back(Json{{"weight", vector_json(mu)}, {"mult", mult}});
  return out;
}

Json to_json(const DividedPowerMonomial& mono) {
  Json factors = Json::array();
  for (const auto& f : mono.factors) factors.push_back(Json{{"index", f.index}, {"exponent", f.exponent}});
  return Json{{"factors", factors}, {"shape", mono.shape}, {"text", to_string(mono)}};
}

Json nok_to_json(const StratPoset& p, const std::vector<std::int64_t>& ms) {
  Json chains = Json::array();
  for (const auto& c : maximal_chains(p)) chains.push_back(to_json(c, p));
  Json hilbert = Json::array();
  auto counts = hilbert_counts(p, ms);
  for (std::size_t k = 0; k < ms.size(); ++k)
    hilbert.push_back(Json{{"m", ms[k]}, {"count", integer_to_json(counts[k])}});
  return Json{{"chains", chains}, {"degree", integer_to_json(degree(p))}, {"hilbert", hilbert}};
}

std::string fan_to_csv(const StratPoset& p, const std::vector<FanElement>& elements) {
  std::ostringstream os;
  for (VertexId v = 0; v < p.size(); ++v) os << (v ? "," : "") << p.label(v);
  os << '\n';
  for (const auto& a : elements) {
    for (VertexId v = 0; v < p.size(); ++v) os << (v ? "," : "") << to_string(a.coeff(v));
    os << '\n';
  }
  return os.str();
}

std::string character_to_csv(const Character& chi) {
  std::ostringstream os;
  os << "weight,mult\n";
  for (const auto& [mu, mult] : chi.terms()) {
    os << '"';
    for (Eigen::Index k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu(k);
    os << "\"," << mult << '\n';
  }
  return os.str();
}

}  // namespace seshadri
