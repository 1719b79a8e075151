#pragma once

#include <compare>
#include <map>
#include <variant>
#include <vector>

#include "seshadri/strat_poset.hpp"

namespace seshadri {

/*
  A nonnegative rational vector on the vertices of A_tau, stored sparsely.
  Zero coefficients are never stored; the empty element is the degree-0
  identity of the fan algebra.
*/
class FanElement {
 public:
  FanElement() = default;
  explicit FanElement(std::map<VertexId, Rational> coeffs);
  /// c * e_v.
  static FanElement basis(VertexId v, Rational c = Rational(1));

  const std::map<VertexId, Rational>& coeffs() const { return coeffs_; }
  const Rational& degree() const { return degree_; }
  Rational coeff(VertexId v) const;
  bool empty() const { return coeffs_.empty(); }
  /// Support in increasing vertex id (hence increasing length).
  std::vector<VertexId> support() const;
  /// Largest / smallest support vertex; the support must be nonempty.
  VertexId top() const { return coeffs_.rbegin()->first; }
  VertexId bottom() const { return coeffs_.begin()->first; }

  FanElement operator+(const FanElement& other) const;
  FanElement scaled(const Rational& factor) const;

  bool operator==(const FanElement& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::map<VertexId, Rational> coeffs_;
  Rational degree_ = 0;
};

/// Distinguished zero of the fan algebra: x_a x_b = 0.
struct FanZero {
  bool operator==(const FanZero&) const = default;
};
using FanProduct = std::variant<FanZero, FanElement>;

/*
  LS-path (sigma_p > ... > sigma_1 ; 0 < d_p < ... < d_1 = 1). Both sequences
  are stored top first, so ds.back() == 1.
*/
struct LSPath {
  std::vector<VertexId> sigmas;
  std::vector<Rational> ds;

  bool operator==(const LSPath&) const = default;
};

/// Support totally ordered in the Bruhat order.
bool is_chain_support(const StratPoset& p, const FanElement& a);
/// At most one support vertex of each length.
bool is_thin(const StratPoset& p, const FanElement& a);

/*
  Some saturated chain from kappa down to sigma has d * m * bond integral at
  every cover (shape m * lambda). kappa == sigma holds vacuously; kappa not
  above sigma is a ValidationError.
*/
bool is_d_chain(const StratPoset& p, VertexId kappa, VertexId sigma, const Rational& d, std::int64_t m = 1);

/// The lattice conditions on a fixed maximal chain:
///   b_r a_r, b_{r-1}(a_r + a_{r-1}), ..., b_1(a_r + ... + a_1), a_r + ... + a_0  all integral,
/// plus nonnegativity and supp a contained in the chain.
bool in_fan_on_chain(const StratPoset& p, const Chain& chain, const FanElement& a);

/// Membership in LS_lambda^+, checked on one maximal chain through supp a.
bool in_fan(const StratPoset& p, const FanElement& a);

/// A maximal chain containing the support (which must be a chain).
Chain chain_through_support(const StratPoset& p, const FanElement& a);

/// LS_lambda^+(m), deduplicated across maximal chains, sorted by canonical_fan_greater.
std::vector<FanElement> enumerate_fan(const StratPoset& p, std::int64_t m);

/// Members of LS_{C,lambda}^+(m) for one maximal chain.
std::vector<FanElement> enumerate_fan_on_chain(const StratPoset& p, const Chain& chain, std::int64_t m);

/*
  Compact form of LS_lambda^+(m): coefficient numerators over a common
  denominator, sparse and sorted by vertex id. Used by the heavy pipelines.
*/
struct FanTable {
  std::int64_t denominator = 1;
  std::vector<std::vector<std::pair<VertexId, std::int64_t>>> elements;
};
/// Walks support chains top-down, so every element is produced once.
FanTable enumerate_fan_table(const StratPoset& p, std::int64_t m);
/// Same set, built as the union of the per-maximal-chain monoids with deduplication.
FanTable enumerate_fan_by_chains(const StratPoset& p, std::int64_t m);
FanElement to_fan_element(const FanTable& table, std::size_t index);

/// |LS_lambda^+(m)| counted over support chains without enumeration; m >= 0.
Integer count_fan(const StratPoset& p, std::int64_t m);

/// sum_kappa a_kappa kappa(lambda).
RationalWeight weight_of(const StratPoset& p, const FanElement& a);
/// weight_of, required to be integral.
Weight integral_weight_of(const StratPoset& p, const FanElement& a);

/// Monotonicity of both sequences plus membership of theta(pi) in the fan.
bool is_ls_path(const StratPoset& p, const LSPath& path, std::int64_t m);
/// sum_j (d_j - d_{j+1}) m e_{sigma_j}, d_{p+1} = 0.
FanElement theta(const StratPoset& p, const LSPath& path, std::int64_t m);
/// d_i = (a_{sigma_p} + ... + a_{sigma_i}) / m.
LSPath theta_inv(const StratPoset& p, const FanElement& a, std::int64_t m);

enum class TriangleOrder { Less, Equal, Greater, Incomparable };

/// The order a |> b on thin elements of equal degree: walk both supports by
/// decreasing length, comparing vertices in the Bruhat order and then coefficients.
TriangleOrder triangle_cmp(const StratPoset& p, const FanElement& a, const FanElement& b);

/// Total order used for output: supports read top-down, compared by vertex id
/// and then coefficient. Refines triangle_cmp.
bool canonical_fan_greater(const FanElement& a, const FanElement& b);

/// The unique a = a^1 + ... + a^m with a^i in LS^+(1) and supp a^1 >= ... >= supp a^m.
std::vector<FanElement> standard_decompose(const StratPoset& p, const FanElement& a);

/// min supp a^j >= max supp a^{j+1} for all j; each entry must have degree 1.
bool is_standard_monomial(const StratPoset& p, const std::vector<FanElement>& seq);

/// x_a x_b: a + b when supp a and supp b lie on a common chain, FanZero otherwise.
FanProduct fan_multiply(const StratPoset& p, const FanElement& a, const FanElement& b);

/// Moves an element between posets built for the same (lambda, qset) by vertex key.
FanElement transport(const StratPoset& from, const StratPoset& to, const FanElement& a);

/// "2.1:1/2,id:1/2" against the vertex labels of p.
FanElement parse_fan_element(const StratPoset& p, std::string_view text);
std::string to_string(const StratPoset& p, const FanElement& a);

}  // namespace seshadri
