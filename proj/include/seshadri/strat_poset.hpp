#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/weyl.hpp"

namespace seshadri {

using VertexId = std::size_t;

/// Covering edge lower < upper = s_beta(lower), with bond <lower(lambda), beta^vee>.
struct PosetEdge {
  VertexId lower;
  VertexId upper;
  Root beta;
  std::int64_t bond;
};

/*
  A chain tau_r > ... > tau_0 of vertices, stored top first. bonds[k] is the
  bond of the cover elems[k+1] < elems[k], so bond(j) below is b_j, the bond
  between tau_j and tau_{j-1}.
*/
struct Chain {
  std::vector<VertexId> elems;
  std::vector<std::int64_t> bonds;

  int rank() const { return static_cast<int>(elems.size()) - 1; }
  /// tau_j, j = 0..rank().
  VertexId at(int j) const { return elems[elems.size() - 1 - static_cast<std::size_t>(j)]; }
  /// b_j, j = 1..rank().
  std::int64_t bond(int j) const { return bonds[bonds.size() - static_cast<std::size_t>(j)]; }
  bool contains(VertexId v) const;

  bool operator==(const Chain&) const = default;
};

/*
  The Bruhat interval A_tau = {sigma <= tau} in W/W_Q with its covering edges,
  covering roots and bonds. Vertices are sorted by (length, word), so vertex 0
  is the identity and the last vertex is tau.
*/
class StratPoset {
 public:
  /// qset defaults to the zero set of lambda. An explicit qset must be
  /// contained in it, and every bond must come out positive.
  static StratPoset build(const CartanData& cd, const Weight& lambda, const CosetElement& tau,
                          bool extended = false);
  static StratPoset build(const CartanData& cd, const Weight& lambda, std::string_view tau,
                          std::optional<QSet> qset = std::nullopt, bool extended = false);

  const CartanData& cartan() const { return cartan_; }
  const Weight& lambda() const { return lambda_; }
  const CosetElement& tau() const { return vertices_.back(); }
  const QSet& qset() const { return tau().qset(); }
  bool extended() const { return extended_; }
  /// Bond of the extra edge from the added bottom element to id.
  std::int64_t extended_bottom_bond() const { return 1; }

  std::size_t size() const { return vertices_.size(); }
  VertexId bottom() const { return 0; }
  VertexId top() const { return vertices_.size() - 1; }
  const std::vector<CosetElement>& vertices() const { return vertices_; }
  const CosetElement& vertex(VertexId v) const { return vertices_[v]; }
  int length(VertexId v) const { return vertices_[v].length(); }
  std::string label(VertexId v) const { return word_to_string(vertices_[v].word()); }
  /// kappa(lambda).
  const Weight& vertex_weight(VertexId v) const { return weights_[v]; }
  std::optional<VertexId> find(const CosetElement& c) const;
  std::optional<VertexId> find_key(const Weight& key) const;
  std::optional<VertexId> find_label(std::string_view word) const;

  const std::vector<PosetEdge>& edges() const { return edges_; }
  /// Edge indices with the given upper endpoint, ordered by lower vertex.
  const std::vector<std::size_t>& edges_below(VertexId v) const { return below_[v]; }
  const std::vector<std::size_t>& edges_above(VertexId v) const { return above_[v]; }
  const PosetEdge* edge(VertexId lower, VertexId upper) const;

  bool leq(VertexId a, VertexId b) const { return order_[a * size() + b] != 0; }
  bool less(VertexId a, VertexId b) const { return a != b && leq(a, b); }
  bool comparable(VertexId a, VertexId b) const { return leq(a, b) || leq(b, a); }

 private:
  StratPoset(CartanData cd) : cartan_(std::move(cd)) {}

  CartanData cartan_;
  Weight lambda_;
  bool extended_ = false;
  std::vector<CosetElement> vertices_;
  std::vector<Weight> weights_;
  std::vector<PosetEdge> edges_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> above_;
  std::vector<char> order_;
  std::vector<std::ptrdiff_t> edge_lookup_;
  std::map<Weight, VertexId, LexLess> index_;
};

/// All maximal chains tau > ... > id, in lexicographic order of vertex ids.
std::vector<Chain> maximal_chains(const StratPoset& p);

/// The lexicographically first saturated chain from upper down to lower.
Chain saturated_chain(const StratPoset& p, VertexId upper, VertexId lower);
/// Every saturated chain from upper down to lower.
std::vector<Chain> saturated_chains(const StratPoset& p, VertexId upper, VertexId lower);

/// Maximal chains passing through every vertex of the given set.
std::vector<Chain> maximal_chains_through(const StratPoset& p, const std::vector<VertexId>& vertices);

/// l.c.m. of all bonds; 1 without edges.
std::int64_t lcm_bonds(const StratPoset& p);

/// For every cover kappa < sigma and simple i with s_i sigma < sigma and
/// s_i sigma != kappa: s_i kappa < s_i sigma is again a cover with the same bond.
bool bond_translation_check(const StratPoset& p);

/// DOT rendering; edges point lower -> upper and are labeled "b=<bond>".
std::string to_dot(const StratPoset& p);

}  // namespace seshadri
