#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

/// Coordinates in the fundamental-weight basis (omega_1, ..., omega_n).
using Weight = IntVector;
using RationalWeight = RationalVector;
/// Coordinates in the simple-root basis (alpha_1, ..., alpha_n).
using Root = IntVector;

/*
  Finite-type Cartan data.

  Convention (used by every formula in the library):

      C(i, j) = < alpha_j , alpha_i^vee >

  so column j of C is alpha_j written in fundamental weights, and row i of C
  evaluates alpha_i^vee on a root given in simple-root coordinates. The
  symmetrizer d satisfies d_i C(i, j) = d_j C(j, i), i.e. d_i = (alpha_i, alpha_i) / 2
  up to a common factor.

  Simple indices are 1-based at every public entry point.
*/
class CartanData {
 public:
  /// "A1".."An", "B2".., "C2".., "D4".., "G2".
  static CartanData named(std::string_view name);
  /// Rejects anything that is not a finite-type Cartan matrix.
  static CartanData from_matrix(IntMatrix cartan, std::string type = "custom");

  int rank() const { return static_cast<int>(cartan_.rows()); }
  const std::string& type() const { return type_; }
  const IntMatrix& matrix() const { return cartan_; }
  const IntVector& symmetrizer() const { return symmetrizer_; }
  /// Sorted by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// The root beta as a weight.
  Weight root_weight(const Root& beta) const { return cartan_ * beta; }
  /// beta^vee in simple-coroot coordinates.
  IntVector coroot(const Root& beta) const;
  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight::Ones(rank()); }
  Root simple_root(int i) const;

  bool operator==(const CartanData& other) const { return cartan_ == other.cartan_; }

 private:
  CartanData(IntMatrix cartan, std::string type);

  IntMatrix cartan_;
  IntVector symmetrizer_;
  std::string type_;
  std::vector<Root> positive_roots_;
};

/// Positive roots, closure of the simple roots under the simple reflections.
const std::vector<Root>& positive_roots(const CartanData& cd);

/// <lambda, beta^vee>.
std::int64_t pairing(const CartanData& cd, const Weight& lambda, const Root& beta);
Rational pairing(const CartanData& cd, const RationalWeight& lambda, const Root& beta);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight reflect_weight(const CartanData& cd, int i, const Weight& lambda);
/// s_i(beta) for a root in simple-root coordinates.
Root reflect_root(const CartanData& cd, int i, const Root& beta);
/// s_beta(lambda) = lambda - <lambda, beta^vee> beta.
Weight reflect_weight_by_root(const CartanData& cd, const Root& beta, const Weight& lambda);

bool is_dominant(const Weight& lambda);

/// Lexicographic order on integer vectors; used for map keys and output order.
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace seshadri
