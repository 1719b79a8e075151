#pragma once

#include <vector>

#include "seshadri/ls_fan.hpp"

namespace seshadri {

/// Order complex of A_tau; the facets are the maximal chains.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<Chain> facets;

  /// Common facet dimension; throws InvariantError if the complex is not homogeneous.
  int dimension() const;
  /// True if the vertex set (in any order) lies in some facet.
  bool is_face(const std::vector<VertexId>& vertices) const;
};

SimplicialComplex newton_okounkov_complex(const StratPoset& p);

/// Images of e_{tau_0}, ..., e_{tau_r} under the Dehy map of a maximal chain:
/// e_{tau_j} -> sum_{k <= j} b_k e_k.
std::vector<IntVector> dehy_vertex_images(const Chain& chain);

/// Affine image of a barycentric point on the chain; coordinate k is b_k (a_k + ... + a_r).
RationalVector dehy_embed(const Chain& chain, const FanElement& point);

/// Delta_C(m) = {a / m : a in LS_{C,lambda}^+(m)}; m >= 1.
std::vector<FanElement> lattice_points(const StratPoset& p, const Chain& chain, std::int64_t m);

/// {v in Delta_C : m i(v) integral}, scanned over a grid fine enough to contain every such v.
std::vector<FanElement> lattice_points_by_integrality(const StratPoset& p, const Chain& chain, std::int64_t m);

/// Points of Delta_C(m) supported on the face spanned by the given chain vertices.
std::vector<FanElement> face_lattice_points(const StratPoset& p, const Chain& chain,
                                            const std::vector<VertexId>& face, std::int64_t m);

/// Product of the bonds along the chain (1 for the empty chain).
Integer bond_product(const Chain& chain);

/// sum over maximal chains of the bond products.
Integer degree(const StratPoset& p);

/// Counts dimension(p, m) for each requested m.
std::vector<Integer> hilbert_counts(const StratPoset& p, const std::vector<std::int64_t>& ms);

/*
  r! times the leading coefficient of the polynomial of degree r through
  (ms[k], counts[k]), by exact divided differences. Needs at least r + 1
  distinct samples; any divided difference of order > r must vanish, else
  InvariantError ("non-polynomial data").
*/
Integer degree_from_counts(int r, const std::vector<std::int64_t>& ms, const std::vector<Integer>& counts);

/// degree_from_counts on dimension(p, m) for the given samples.
Integer degree_via_hilbert(const StratPoset& p, const std::vector<std::int64_t>& ms);
/// Default samples m = 0, ..., r + 1.
Integer degree_via_hilbert(const StratPoset& p);

}  // namespace seshadri
