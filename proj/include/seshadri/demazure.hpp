#pragma once

#include <map>
#include <string>
#include <vector>

#include "seshadri/ls_fan.hpp"

namespace seshadri {

/// Element of Z[Lambda]: finitely many weights with integer multiplicities.
/// Zero multiplicities are never stored.
class Character {
 public:
  using Terms = std::map<Weight, std::int64_t, LexLess>;

  Character() = default;
  /// mult * e^mu.
  static Character monomial(const Weight& mu, std::int64_t mult = 1);

  void add(const Weight& mu, std::int64_t mult);
  const Terms& terms() const { return terms_; }
  std::int64_t multiplicity(const Weight& mu) const;
  /// Sum of all multiplicities.
  std::int64_t total() const;
  bool nonnegative() const;

  bool operator==(const Character& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

/// D_i on the group ring, no sign restriction.
Character demazure_op_signed(const CartanData& cd, int i, const Character& chi);
/// D_i; throws InvariantError ("negative multiplicity") if the result has a negative entry.
Character demazure_op(const CartanData& cd, int i, const Character& chi);

/// D_{i_1} o ... o D_{i_r} e^{m lambda} for a reduced word i_1 ... i_r.
Character demazure_character(const CartanData& cd, const Weight& lambda, std::int64_t m, const Word& word);
/// Same, for the canonical reduced word of tau.
Character demazure_character(const StratPoset& p, std::int64_t m);

/// sum over LS_lambda^+(m) of e^{weight(a)}.
Character path_character(const StratPoset& p, std::int64_t m);

/// |LS_lambda^+(m)| = dim V(m lambda)_tau; m >= 0.
Integer dimension(const StratPoset& p, std::int64_t m);

/// Number of standard sequences a^1, ..., a^m of LS^+(1) elements.
Integer count_standard_monomials(const StratPoset& p, std::int64_t m);

/// One step (n_k, alpha_{i_k}) of the sequence S(a, sigma).
struct SStep {
  int index;
  std::int64_t exponent;
  bool operator==(const SStep&) const = default;
};

/*
  The sequence S(a, sigma) for a in LS^+(s) and a reduced word of the
  largest support vertex. Each step strips the first letter i of the word:

    j  = largest support position with s_i tau_j > tau_j (0 if none),
    a' = coefficients of tau_h, h > j, moved to s_i tau_h (merging into
         tau_j when s_i tau_{j+1} = tau_j), the rest kept,
    n  = sum_{h > j} a_{tau_h} |<tau_h(lambda), alpha_i^vee>|,

  and the process ends at s * e_id.
*/
std::vector<SStep> s_sequence(const StratPoset& p, const FanElement& a, const Word& word);

/// X_{-i_1}^{(n_1)} ... X_{-i_t}^{(n_t)} v_{m lambda}, kept symbolic.
struct DividedPowerMonomial {
  std::vector<SStep> factors;
  std::int64_t shape = 1;
  bool operator==(const DividedPowerMonomial&) const = default;
};

DividedPowerMonomial v_monomial(const StratPoset& p, const FanElement& a, const Word& word);

/// m lambda - sum n_k alpha_{i_k}.
Weight monomial_weight(const CartanData& cd, const Weight& lambda, const DividedPowerMonomial& mono);

/// "X(-1)^(1) X(-2)^(3) v(m=2)".
std::string to_string(const DividedPowerMonomial& mono);

/// Exponents (n_1, ..., n_r) of the extremal weight vector for a reduced word:
/// n_r = <lambda, alpha_{i_r}^vee>, n_k = <s_{i_{k+1}} ... s_{i_r}(lambda), alpha_{i_k}^vee>.
std::vector<std::int64_t> extremal_cascade(const CartanData& cd, const Weight& lambda, const Word& word);

}  // namespace seshadri
