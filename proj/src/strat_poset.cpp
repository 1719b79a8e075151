#include "seshadri/strat_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace seshadri {

bool Chain::contains(VertexId v) const { return std::find(elems.begin(), elems.end(), v) != elems.end(); }

StratPoset StratPoset::build(const CartanData& cd, const Weight& lambda, const CosetElement& tau, bool extended) {
  if (lambda.size() != cd.rank()) throw ValidationError("lambda has the wrong number of coordinates");
  if (!is_dominant(lambda)) throw ValidationError("lambda must be dominant");
  if (lambda.isZero()) throw ValidationError("lambda must be nonzero");
  const QSet zeros = zero_set(lambda);
  if (!std::includes(zeros.begin(), zeros.end(), tau.qset().begin(), tau.qset().end()))
    throw ValidationError("qset must consist of indices where lambda vanishes");

  StratPoset p(cd);
  p.lambda_ = lambda;
  p.extended_ = extended;
  p.vertices_ = enumerate_lower_cosets(cd, tau);
  const std::size_t n = p.vertices_.size();
  for (VertexId v = 0; v < n; ++v) p.index_.emplace(p.vertices_[v].key(), v);
  p.weights_.reserve(n);
  for (const auto& v : p.vertices_) p.weights_.push_back(act(cd, v.word(), lambda));

  // Bruhat order from the subword criterion, one interval at a time.
  p.order_.assign(n * n, 0);
  for (VertexId b = 0; b < n; ++b) {
    for (const auto& below : enumerate_lower_cosets(cd, p.vertices_[b])) {
      auto a = p.find(below);
      if (!a) throw InvariantError("lower interval escapes A_tau");
      p.order_[*a * n + b] = 1;
    }
  }

  p.edge_lookup_.assign(n * n, -1);
  p.below_.assign(n, {});
  p.above_.assign(n, {});
  for (VertexId upper = 0; upper < n; ++upper) {
    for (VertexId lower = 0; lower < n; ++lower) {
      if (p.length(upper) != p.length(lower) + 1 || !p.leq(lower, upper)) continue;
      auto beta = covering_root(cd, p.vertices_[lower], p.vertices_[upper]);
      if (!beta) throw InvariantError("length-one Bruhat relation is not a cover");
      std::int64_t bond = pairing(cd, p.weights_[lower], *beta);
      if (bond < 1)
        throw ValidationError("non-positive bond on " + p.label(lower) + " -> " + p.label(upper) +
                              "; qset does not match lambda");
      p.edge_lookup_[lower * n + upper] = static_cast<std::ptrdiff_t>(p.edges_.size());
      p.below_[upper].push_back(p.edges_.size());
      p.above_[lower].push_back(p.edges_.size());
      p.edges_.push_back({lower, upper, *beta, bond});
    }
  }

  // Graded: every vertex but id has a lower cover, every vertex but tau an upper one.
  for (VertexId v = 0; v < n; ++v) {
    if (v != p.bottom() && p.below_[v].empty()) throw InvariantError("vertex without lower cover");
    if (v != p.top() && p.above_[v].empty()) throw InvariantError("vertex without upper cover");
  }
  return p;
}

StratPoset StratPoset::build(const CartanData& cd, const Weight& lambda, std::string_view tau,
                             std::optional<QSet> qset, bool extended) {
  QSet q = qset ? *qset : zero_set(lambda);
  return build(cd, lambda, parse_coset(cd, q, tau), extended);
}

std::optional<VertexId> StratPoset::find(const CosetElement& c) const {
  if (c.qset() != qset()) return std::nullopt;
  return find_key(c.key());
}

std::optional<VertexId> StratPoset::find_key(const Weight& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> StratPoset::find_label(std::string_view word) const {
  Word w = parse_word(word);
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].word() == w) return v;
  // Accept any reduced word of a vertex, not only the canonical one.
  for (int i : w)
    if (i < 1 || i > cartan_.rank()) return std::nullopt;
  Weight key = act(cartan_, w, rho_q(cartan_, qset()));
  auto v = find_key(key);
  if (v && static_cast<int>(w.size()) == length(*v)) return v;
  return std::nullopt;
}

const PosetEdge* StratPoset::edge(VertexId lower, VertexId upper) const {
  auto idx = edge_lookup_[lower * size() + upper];
  return idx < 0 ? nullptr : &edges_[static_cast<std::size_t>(idx)];
}

namespace {

void collect_chains(const StratPoset& p, VertexId lower, Chain& current, std::vector<Chain>& out,
                    bool first_only) {
  VertexId v = current.elems.back();
  if (v == lower) {
    out.push_back(current);
    return;
  }
  for (std::size_t e : p.edges_below(v)) {
    const auto& edge = p.edges()[e];
    if (!p.leq(lower, edge.lower)) continue;
    current.elems.push_back(edge.lower);
    current.bonds.push_back(edge.bond);
    collect_chains(p, lower, current, out, first_only);
    current.elems.pop_back();
    current.bonds.pop_back();
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<Chain> saturated_chains(const StratPoset& p, VertexId upper, VertexId lower) {
  if (!p.leq(lower, upper)) throw ValidationError("saturated chain requested between incomparable vertices");
  Chain current{{upper}, {}};
  std::vector<Chain> out;
  collect_chains(p, lower, current, out, false);
  return out;
}

Chain saturated_chain(const StratPoset& p, VertexId upper, VertexId lower) {
  if (!p.leq(lower, upper)) throw ValidationError("saturated chain requested between incomparable vertices");
  Chain current{{upper}, {}};
  std::vector<Chain> out;
  collect_chains(p, lower, current, out, true);
  return out.front();
}

std::vector<Chain> maximal_chains(const StratPoset& p) {
  auto chains = saturated_chains(p, p.top(), p.bottom());
  for (const auto& c : chains)
    if (c.rank() != p.tau().length()) throw InvariantError("A_tau is not graded");
  return chains;
}

std::vector<Chain> maximal_chains_through(const StratPoset& p, const std::vector<VertexId>& vertices) {
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end(), [&](VertexId a, VertexId b) { return p.length(a) > p.length(b); });
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
    if (!p.leq(sorted[k + 1], sorted[k])) return {};
  // Stops: tau, the given vertices (descending), id.
  std::vector<VertexId> stops{p.top()};
  for (VertexId v : sorted)
    if (v != stops.back()) stops.push_back(v);
  if (stops.back() != p.bottom()) stops.push_back(p.bottom());

  std::vector<Chain> result{Chain{{p.top()}, {}}};
  for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
    auto segments = saturated_chains(p, stops[k], stops[k + 1]);
    std::vector<Chain> next;
    for (const auto& prefix : result) {
      for (const auto& seg : segments) {
        Chain c = prefix;
        c.elems.insert(c.elems.end(), seg.elems.begin() + 1, seg.elems.end());
        c.bonds.insert(c.bonds.end(), seg.bonds.begin(), seg.bonds.end());
        next.push_back(std::move(c));
      }
    }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end(), [](const Chain& a, const Chain& b) { return a.elems < b.elems; });
  return result;
}

std::int64_t lcm_bonds(const StratPoset& p) {
  std::int64_t n = 1;
  for (const auto& e : p.edges()) n = std::lcm(n, e.bond);
  return n;
}

bool bond_translation_check(const StratPoset& p) {
  const auto& cd = p.cartan();
  for (const auto& e : p.edges()) {
    const auto& sigma = p.vertex(e.upper);
    const auto& kappa = p.vertex(e.lower);
    for (int i = 1; i <= cd.rank(); ++i) {
      if (sigma.key()(i - 1) >= 0) continue;  // need s_i sigma < sigma
      auto s_sigma = p.find(left_multiply(cd, i, sigma));
      if (!s_sigma) return false;
      if (*s_sigma == e.lower) continue;
      if (kappa.key()(i - 1) >= 0) return false;  // s_i kappa < kappa must hold
      auto s_kappa = p.find(left_multiply(cd, i, kappa));
      if (!s_kappa) return false;
      const PosetEdge* image = p.edge(*s_kappa, *s_sigma);
      if (image == nullptr || image->bond != e.bond) return false;
    }
  }
  return true;
}

std::string to_dot(const StratPoset& p) {
  std::ostringstream os;
  os << "digraph A_tau {\n";
  os << "  rankdir=BT;\n";
  for (VertexId v = 0; v < p.size(); ++v) os << "  \"" << p.label(v) << "\" [label=\"" << p.label(v) << "\"];\n";
  if (p.extended()) os << "  \"tau_-1\" [label=\"tau_-1\"];\n";
  for (const auto& e : p.edges())
    os << "  \"" << p.label(e.lower) << "\" -> \"" << p.label(e.upper) << "\" [label=\"b=" << e.bond << "\"];\n";
  if (p.extended()) os << "  \"tau_-1\" -> \"id\" [label=\"b=" << p.extended_bottom_bond() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace seshadri
