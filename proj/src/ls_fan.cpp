#include "seshadri/ls_fan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace seshadri {

// ---------------------------------------------------------------------------
// FanElement

FanElement::FanElement(std::map<VertexId, Rational> coeffs) {
  for (auto& [v, c] : coeffs) {
    if (c < 0) throw ValidationError("fan elements have nonnegative coefficients");
    if (c == 0) continue;
    degree_ += c;
    coeffs_.emplace(v, std::move(c));
  }
}

FanElement FanElement::basis(VertexId v, Rational c) { return FanElement({{v, std::move(c)}}); }

Rational FanElement::coeff(VertexId v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<VertexId> FanElement::support() const {
  std::vector<VertexId> out;
  out.reserve(coeffs_.size());
  for (const auto& entry : coeffs_) out.push_back(entry.first);
  return out;
}

FanElement FanElement::operator+(const FanElement& other) const {
  std::map<VertexId, Rational> sum = coeffs_;
  for (const auto& [v, c] : other.coeffs_) sum[v] += c;
  return FanElement(std::move(sum));
}

FanElement FanElement::scaled(const Rational& factor) const {
  std::map<VertexId, Rational> out;
  for (const auto& [v, c] : coeffs_) out.emplace(v, c * factor);
  return FanElement(std::move(out));
}

// ---------------------------------------------------------------------------
// Support predicates and lattice membership

bool is_chain_support(const StratPoset& p, const FanElement& a) {
  auto supp = a.support();
  for (std::size_t k = 0; k + 1 < supp.size(); ++k)
    if (!p.less(supp[k], supp[k + 1])) return false;
  return true;
}

bool is_thin(const StratPoset& p, const FanElement& a) {
  auto supp = a.support();
  for (std::size_t k = 0; k + 1 < supp.size(); ++k)
    if (p.length(supp[k]) == p.length(supp[k + 1])) return false;
  return true;
}

bool is_d_chain(const StratPoset& p, VertexId kappa, VertexId sigma, const Rational& d, std::int64_t m) {
  if (!p.leq(sigma, kappa)) throw ValidationError("is_d_chain: vertices are incomparable");
  if (d <= 0 || d > 1) throw ValidationError("is_d_chain: d must lie in (0, 1]");
  if (kappa == sigma) return true;
  Chain c = saturated_chain(p, kappa, sigma);
  for (std::int64_t bond : c.bonds)
    if (!is_integral(d * Rational(m * bond))) return false;
  return true;
}

bool in_fan_on_chain(const StratPoset& p, const Chain& chain, const FanElement& a) {
  (void)p;
  std::size_t matched = 0;
  Rational partial = 0;
  for (std::size_t k = 0; k < chain.elems.size(); ++k) {
    auto it = a.coeffs().find(chain.elems[k]);
    if (it != a.coeffs().end()) {
      partial += it->second;
      ++matched;
    }
    // bonds[k] sits between elems[k] and elems[k+1]; the partial sum runs from the top to elems[k].
    const Rational scaled = k < chain.bonds.size() ? partial * Rational(chain.bonds[k]) : partial;
    if (!is_integral(scaled)) return false;
  }
  return matched == a.coeffs().size();
}

Chain chain_through_support(const StratPoset& p, const FanElement& a) {
  if (!is_chain_support(p, a)) throw ValidationError("support is not a chain");
  std::vector<VertexId> stops{p.top()};
  auto supp = a.support();
  for (auto it = supp.rbegin(); it != supp.rend(); ++it)
    if (*it != stops.back()) stops.push_back(*it);
  if (stops.back() != p.bottom()) stops.push_back(p.bottom());
  Chain out{{p.top()}, {}};
  for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
    Chain seg = saturated_chain(p, stops[k], stops[k + 1]);
    out.elems.insert(out.elems.end(), seg.elems.begin() + 1, seg.elems.end());
    out.bonds.insert(out.bonds.end(), seg.bonds.begin(), seg.bonds.end());
  }
  return out;
}

bool in_fan(const StratPoset& p, const FanElement& a) {
  for (const auto& entry : a.coeffs())
    if (entry.first >= p.size()) return false;
  if (!is_chain_support(p, a)) return false;
  return in_fan_on_chain(p, chain_through_support(p, a), a);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using CompactTerms = std::vector<std::pair<VertexId, std::int64_t>>;

struct TermsHash {
  std::size_t operator()(const CompactTerms& terms) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, c] : terms) {
      h = (h ^ v) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    }
    return h;
  }
};

// Partial sums s_0 <= s_1 <= ... <= s_r = total along the chain (top first),
// with s_k a multiple of denom / bonds[k]. Coefficients are numerators over denom.
void walk_chain(const Chain& chain, std::int64_t denom, std::int64_t total,
                const std::function<void(const CompactTerms&)>& emit) {
  const std::size_t r = chain.bonds.size();
  std::vector<std::int64_t> sums(r + 1, 0);
  CompactTerms terms;
  std::function<void(std::size_t, std::int64_t)> step = [&](std::size_t k, std::int64_t prev) {
    if (k == r) {
      sums[r] = total;
      terms.clear();
      for (std::size_t j = r + 1; j-- > 0;) {
        std::int64_t c = sums[j] - (j > 0 ? sums[j - 1] : 0);
        if (c > 0) terms.emplace_back(chain.elems[j], c);
      }
      emit(terms);
      return;
    }
    const std::int64_t stride = denom / chain.bonds[k];
    for (std::int64_t s = (prev + stride - 1) / stride * stride; s <= total; s += stride) {
      sums[k] = s;
      step(k + 1, s);
    }
  };
  step(0, 0);
}

bool compact_greater(const CompactTerms& a, const CompactTerms& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != a.rend() && ib == b.rend();
}

FanElement from_compact(const CompactTerms& terms, std::int64_t denom) {
  std::map<VertexId, Rational> coeffs;
  for (const auto& [v, c] : terms) coeffs.emplace(v, Rational(c, denom));
  return FanElement(std::move(coeffs));
}

void check_degree(std::int64_t m) {
  if (m < 1) throw ValidationError("degree m must be a positive integer");
}

}  // namespace

std::vector<FanElement> enumerate_fan_on_chain(const StratPoset& p, const Chain& chain, std::int64_t m) {
  check_degree(m);
  const std::int64_t denom = lcm_bonds(p);
  std::vector<CompactTerms> found;
  walk_chain(chain, denom, m * denom, [&](const CompactTerms& t) { found.push_back(t); });
  std::sort(found.begin(), found.end(), compact_greater);
  std::vector<FanElement> out;
  out.reserve(found.size());
  for (const auto& t : found) out.push_back(from_compact(t, denom));
  return out;
}

static std::vector<std::int64_t> bond_gcd_matrix(const StratPoset& p) {
  const std::size_t n = p.size();
  // gcd of the bonds along a saturated chain from upper down to lower; 0 on the diagonal.
  std::vector<std::int64_t> g(n * n, 0);
  for (VertexId upper = 0; upper < n; ++upper) {
    for (VertexId lower = 0; lower < upper; ++lower) {
      if (!p.less(lower, upper)) continue;
      for (std::size_t e : p.edges_below(upper)) {
        const auto& edge = p.edges()[e];
        if (!p.leq(lower, edge.lower)) continue;
        g[upper * n + lower] = std::gcd(edge.bond, g[edge.lower * n + lower]);
        break;
      }
    }
  }

  return g;
}

FanTable enumerate_fan_table(const StratPoset& p, std::int64_t m) {
  check_degree(m);
  FanTable table;
  table.denominator = lcm_bonds(p);
  const std::int64_t denom = table.denominator;
  const std::int64_t total = m * denom;
  const std::size_t n = p.size();
  const auto g = bond_gcd_matrix(p);
  std::vector<std::vector<VertexId>> lower_of(n);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < v; ++w)
      if (p.less(w, v)) lower_of[v].push_back(w);

  // Support read top-down; s is the partial sum down to and including v.
  CompactTerms terms;
  std::function<void(VertexId, std::int64_t)> descend = [&](VertexId v, std::int64_t s) {
    if (s == total) {
      table.elements.emplace_back(terms.rbegin(), terms.rend());
      return;
    }
    for (VertexId w : lower_of[v]) {
      if ((g[v * n + w] * s) % denom != 0) continue;
      for (std::int64_t next = s + 1; next <= total; ++next) {
        terms.emplace_back(w, next - s);
        descend(w, next);
        terms.pop_back();
      }
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    for (std::int64_t s = 1; s <= total; ++s) {
      terms.assign(1, {v, s});
      descend(v, s);
    }
  }
  std::sort(table.elements.begin(), table.elements.end(), compact_greater);
  return table;
}

FanTable enumerate_fan_by_chains(const StratPoset& p, std::int64_t m) {
  check_degree(m);
  FanTable table;
  table.denominator = lcm_bonds(p);
  std::unordered_set<CompactTerms, TermsHash> seen;
  for (const auto& chain : maximal_chains(p))
    walk_chain(chain, table.denominator, m * table.denominator, [&](const CompactTerms& t) { seen.insert(t); });
  table.elements.assign(seen.begin(), seen.end());
  std::sort(table.elements.begin(), table.elements.end(), compact_greater);
  return table;
}

FanElement to_fan_element(const FanTable& table, std::size_t index) {
  return from_compact(table.elements.at(index), table.denominator);
}

std::vector<FanElement> enumerate_fan(const StratPoset& p, std::int64_t m) {
  FanTable table = enumerate_fan_table(p, m);
  std::vector<FanElement> out;
  out.reserve(table.elements.size());
  for (const auto& t : table.elements) out.push_back(from_compact(t, table.denominator));
  return out;
}

Integer count_fan(const StratPoset& p, std::int64_t m) {
  if (m < 0) throw ValidationError("degree must be nonnegative");
  if (m == 0) return Integer(1);
  const std::size_t n = p.size();
  const std::int64_t denom = lcm_bonds(p);
  const std::int64_t total = m * denom;

  const auto g = bond_gcd_matrix(p);

  // ways[v][s]: completions below v when v is a support vertex whose partial
  // sum (from the top, including v) is s / denom. tail[v][s] = sum over s' > s.
  std::vector<std::vector<Integer>> ways(n, std::vector<Integer>(total + 1, 0));
  std::vector<std::vector<Integer>> tail(n, std::vector<Integer>(total + 2, 0));
  Integer count = 0;
  for (VertexId v = 0; v < n; ++v) {
    ways[v][total] = 1;
    for (std::int64_t s = 1; s < total; ++s) {
      Integer acc = 0;
      for (VertexId lower = 0; lower < v; ++lower) {
        if (!p.less(lower, v)) continue;
        if ((g[v * n + lower] * s) % denom != 0) continue;
        acc += tail[lower][s + 1];
      }
      ways[v][s] = acc;
    }
    for (std::int64_t s = total; s >= 1; --s) tail[v][s] = tail[v][s + 1] + ways[v][s];
    count += tail[v][1];
  }
  return count;
}

// ---------------------------------------------------------------------------
// Weights and paths

RationalWeight weight_of(const StratPoset& p, const FanElement& a) {
  RationalWeight w = RationalWeight::Zero(p.cartan().rank());
  for (const auto& [v, c] : a.coeffs()) w += p.vertex_weight(v).cast<Rational>() * c;
  return w;
}

Weight integral_weight_of(const StratPoset& p, const FanElement& a) {
  RationalWeight w = weight_of(p, a);
  Weight out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(i) = to_int64(w(i));
  return out;
}

namespace {

bool monotone(const StratPoset& p, const LSPath& path) {
  if (path.sigmas.empty() || path.sigmas.size() != path.ds.size()) return false;
  for (VertexId v : path.sigmas)
    if (v >= p.size()) return false;
  for (std::size_t k = 0; k + 1 < path.sigmas.size(); ++k)
    if (!p.less(path.sigmas[k + 1], path.sigmas[k])) return false;
  if (path.ds.front() <= 0 || path.ds.back() != 1) return false;
  for (std::size_t k = 0; k + 1 < path.ds.size(); ++k)
    if (path.ds[k] >= path.ds[k + 1]) return false;
  return true;
}

FanElement theta_unchecked(const LSPath& path, std::int64_t m) {
  std::map<VertexId, Rational> coeffs;
  Rational previous = 0;
  for (std::size_t k = 0; k < path.sigmas.size(); ++k) {
    coeffs[path.sigmas[k]] = (path.ds[k] - previous) * Rational(m);
    previous = path.ds[k];
  }
  return FanElement(std::move(coeffs));
}

}  // namespace

bool is_ls_path(const StratPoset& p, const LSPath& path, std::int64_t m) {
  check_degree(m);
  return monotone(p, path) && in_fan(p, theta_unchecked(path, m));
}

FanElement theta(const StratPoset& p, const LSPath& path, std::int64_t m) {
  if (!is_ls_path(p, path, m)) throw ValidationError("not an LS-path of shape m*lambda");
  return theta_unchecked(path, m);
}

LSPath theta_inv(const StratPoset& p, const FanElement& a, std::int64_t m) {
  check_degree(m);
  if (a.degree() != m) throw ValidationError("theta_inv: degree mismatch");
  if (!in_fan(p, a)) throw ValidationError("theta_inv: element is not in the fan of monoids");
  LSPath path;
  Rational partial = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    partial += it->second;
    path.sigmas.push_back(it->first);
    path.ds.push_back(partial / Rational(m));
  }
  return path;
}

// ---------------------------------------------------------------------------
// Orders, decompositions, products

TriangleOrder triangle_cmp(const StratPoset& p, const FanElement& a, const FanElement& b) {
  if (!is_thin(p, a) || !is_thin(p, b)) throw ValidationError("triangle_cmp needs thin elements");
  if (a.degree() != b.degree()) throw ValidationError("triangle_cmp needs elements of equal degree");
  auto ia = a.coeffs().rbegin();
  auto ib = b.coeffs().rbegin();
  for (; ia != a.coeffs().rend() && ib != b.coeffs().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      if (p.less(ib->first, ia->first)) return TriangleOrder::Greater;
      if (p.less(ia->first, ib->first)) return TriangleOrder::Less;
      return TriangleOrder::Incomparable;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? TriangleOrder::Greater : TriangleOrder::Less;
  }
  // Equal degrees: one support cannot outlast the other after equal prefixes.
  return TriangleOrder::Equal;
}

bool canonical_fan_greater(const FanElement& a, const FanElement& b) {
  auto ia = a.coeffs().rbegin();
  auto ib = b.coeffs().rbegin();
  for (; ia != a.coeffs().rend() && ib != b.coeffs().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != a.coeffs().rend() && ib == b.coeffs().rend();
}

std::vector<FanElement> standard_decompose(const StratPoset& p, const FanElement& a) {
  if (!is_integral(a.degree()) || a.degree() < 1)
    throw ValidationError("standard_decompose needs a positive integral degree");
  if (!in_fan(p, a)) throw ValidationError("standard_decompose: element is not in the fan of monoids");
  const std::int64_t m = to_int64(a.degree());

  // Vertex sigma occupies the interval (S_prev, S] of [0, m]; slice i is [i-1, i].
  std::vector<std::map<VertexId, Rational>> slices(static_cast<std::size_t>(m));
  Rational start = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    Rational end = start + it->second;
    for (std::int64_t i = 1; i <= m; ++i) {
      Rational lo = std::max(start, Rational(i - 1));
      Rational hi = std::min(end, Rational(i));
      if (hi > lo) slices[static_cast<std::size_t>(i - 1)][it->first] += hi - lo;
    }
    start = end;
  }
  std::vector<FanElement> out;
  out.reserve(slices.size());
  for (auto& s : slices) out.emplace_back(std::move(s));

  FanElement total;
  for (const auto& piece : out) {
    if (piece.degree() != 1 || !in_fan(p, piece)) throw InvariantError("standard slice is not in LS^+(1)");
    total = total + piece;
  }
  if (!(total == a) || !is_standard_monomial(p, out)) throw InvariantError("standard decomposition failed");
  return out;
}

bool is_standard_monomial(const StratPoset& p, const std::vector<FanElement>& seq) {
  for (const auto& a : seq)
    if (a.degree() != 1) throw ValidationError("standard monomials are built from degree-1 elements");
  for (std::size_t j = 0; j + 1 < seq.size(); ++j)
    if (!p.leq(seq[j + 1].top(), seq[j].bottom())) return false;
  return true;
}

FanProduct fan_multiply(const StratPoset& p, const FanElement& a, const FanElement& b) {
  if (!in_fan(p, a) || !in_fan(p, b)) throw ValidationError("fan_multiply: factors must lie in the fan of monoids");
  FanElement sum = a + b;
  if (!is_chain_support(p, sum)) return FanZero{};
  if (!in_fan(p, sum)) throw InvariantError("fan_multiply: monoid closure failed");
  return sum;
}

FanElement transport(const StratPoset& from, const StratPoset& to, const FanElement& a) {
  if (from.qset() != to.qset() || from.lambda() != to.lambda())
    throw ValidationError("transport needs posets for the same lambda and qset");
  std::map<VertexId, Rational> coeffs;
  for (const auto& [v, c] : a.coeffs()) {
    auto target = to.find_key(from.vertex(v).key());
    if (!target) throw ValidationError("vertex " + from.label(v) + " is not in the target poset");
    coeffs.emplace(*target, c);
  }
  return FanElement(std::move(coeffs));
}

FanElement parse_fan_element(const StratPoset& p, std::string_view text) {
  std::map<VertexId, Rational> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of(";,", pos);
    if (end == std::string_view::npos) end = text.size();
    auto term = text.substr(pos, end - pos);
    pos = end + 1;
    while (!term.empty() && term.front() == ' ') term.remove_prefix(1);
    while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
    if (term.empty()) continue;
    auto colon = term.find(':');
    if (colon == std::string_view::npos) throw ValidationError("fan term '" + std::string(term) + "' needs word:coeff");
    auto v = p.find_label(term.substr(0, colon));
    if (!v) throw ValidationError("'" + std::string(term.substr(0, colon)) + "' is not a vertex of A_tau");
    coeffs[*v] += parse_rational(term.substr(colon + 1));
  }
  return FanElement(std::move(coeffs));
}

std::string to_string(const StratPoset& p, const FanElement& a) {
  std::string out;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    if (!out.empty()) out += ';';
    out += p.label(it->first) + ":" + to_string(it->second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace seshadri
