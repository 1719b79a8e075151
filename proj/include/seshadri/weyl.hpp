#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seshadri/root_system.hpp"

namespace seshadri {

/// Sequence of 1-based simple indices; s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
using Word = std::vector<int>;
/// Sorted 1-based simple indices generating the parabolic subgroup W_Q.
using QSet = std::vector<int>;

/// "1.2.1" (or "id" for the empty word).
std::string word_to_string(const Word& word);
/// Accepts '.' or ',' separators; "id" and "" give the empty word.
Word parse_word(std::string_view text);

/// Applies s_{w[0]} ... s_{w[k-1]} to lambda (rightmost letter first).
Weight act(const CartanData& cd, const Word& word, const Weight& lambda);

/// Sum of fundamental weights outside Q; its stabilizer is exactly W_Q.
Weight rho_q(const CartanData& cd, const QSet& qset);
/// {i : lambda_i = 0}.
QSet zero_set(const Weight& lambda);

/*
  An element of W, keyed by w(rho). The stored word is reduced and canonical:
  repeatedly strip the smallest left descent.
*/
class WeylElement {
 public:
  static WeylElement identity(const CartanData& cd);
  /// Any word (not necessarily reduced); the element it evaluates to.
  static WeylElement from_word(const CartanData& cd, const Word& word);
  static WeylElement from_rho_image(const CartanData& cd, Weight rho_image);
  static WeylElement longest(const CartanData& cd);

  const Word& word() const { return word_; }
  const Weight& rho_image() const { return rho_image_; }
  int length() const { return static_cast<int>(word_.size()); }

  bool operator==(const WeylElement& other) const { return rho_image_ == other.rho_image_; }

 private:
  Word word_;
  Weight rho_image_;
};

int length(const WeylElement& w);

/// All of W, sorted by (length, word).
std::vector<WeylElement> enumerate_group(const CartanData& cd);

/*
  A coset wW_Q, represented by its minimal-length representative. The key
  rep(rho_Q) identifies the coset.
*/
class CosetElement {
 public:
  static CosetElement from_orbit_point(const CartanData& cd, QSet qset, const Weight& point);
  static CosetElement identity(const CartanData& cd, QSet qset);
  /// The coset of w0.
  static CosetElement longest(const CartanData& cd, QSet qset);

  const WeylElement& rep() const { return rep_; }
  const QSet& qset() const { return qset_; }
  const Weight& key() const { return key_; }
  int length() const { return rep_.length(); }
  const Word& word() const { return rep_.word(); }

  bool operator==(const CosetElement& other) const { return qset_ == other.qset_ && key_ == other.key_; }

 private:
  WeylElement rep_;
  QSet qset_;
  Weight key_;
};

int length(const CosetElement& c);

/// Parses a word or "w0" into the corresponding coset.
CosetElement parse_coset(const CartanData& cd, const QSet& qset, std::string_view text);

/// Minimal representative of wW_Q.
CosetElement min_coset_rep(const CartanData& cd, const WeylElement& w, const QSet& qset);

/// s_i * c.
CosetElement left_multiply(const CartanData& cd, int i, const CosetElement& c);

/// Bruhat order via the subword criterion on the reduced word of rep(v).
bool bruhat_leq(const CartanData& cd, const CosetElement& u, const CosetElement& v);

/// The positive root beta with s_beta kappa = sigma when kappa is covered by
/// sigma; nullopt otherwise ("not a cover").
std::optional<Root> covering_root(const CartanData& cd, const CosetElement& kappa, const CosetElement& sigma);

/// {sigma : sigma <= tau}, sorted by (length, word).
std::vector<CosetElement> enumerate_lower_cosets(const CartanData& cd, const CosetElement& tau);

/// Every reduced word of the minimal representative of c.
std::vector<Word> reduced_words(const CartanData& cd, const CosetElement& c);

/// True iff word is a reduced word of rep(c).
bool is_reduced_word_of(const CartanData& cd, const Word& word, const CosetElement& c);

/// Deterministic vertex order: length, then word lexicographically.
bool canonical_less(const CosetElement& a, const CosetElement& b);

}  // namespace seshadri
