#include "seshadri/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace seshadri {

namespace {

void check_index(const CartanData& cd, int i) {
  if (i < 1 || i > cd.rank())
    throw ValidationError("simple index " + std::to_string(i) + " out of range for " + cd.type());
}

void check_qset(const CartanData& cd, const QSet& qset) {
  for (int i : qset) check_index(cd, i);
  if (!std::is_sorted(qset.begin(), qset.end()) || std::adjacent_find(qset.begin(), qset.end()) != qset.end())
    throw ValidationError("qset must be sorted without repetitions");
}

// Walks an orbit point back to the dominant chamber, stripping the smallest
// descent each time. Returns the word w with point = w(dominant).
Word descend_to_dominant(const CartanData& cd, Weight point) {
  Word word;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < cd.rank(); ++i) {
      if (point(i) < 0) {
        descent = i + 1;
        break;
      }
    }
    if (descent < 0) break;
    point = reflect_weight(cd, descent, point);
    word.push_back(descent);
  }
  return word;
}

}  // namespace

std::string word_to_string(const Word& word) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(word[k]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  if (text.empty() || text == "id" || text == "e") return word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(".,", pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1)
      throw ValidationError("malformed word '" + std::string(text) + "'");
    word.push_back(value);
    pos = end + 1;
  }
  return word;
}

Weight act(const CartanData& cd, const Word& word, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_index(cd, *it);
    out = reflect_weight(cd, *it, out);
  }
  return out;
}

Weight rho_q(const CartanData& cd, const QSet& qset) {
  Weight w = cd.rho();
  for (int i : qset) w(i - 1) = 0;
  return w;
}

QSet zero_set(const Weight& lambda) {
  QSet q;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) == 0) q.push_back(static_cast<int>(i) + 1);
  return q;
}

WeylElement WeylElement::identity(const CartanData& cd) { return from_rho_image(cd, cd.rho()); }

WeylElement WeylElement::from_word(const CartanData& cd, const Word& word) {
  return from_rho_image(cd, act(cd, word, cd.rho()));
}

WeylElement WeylElement::from_rho_image(const CartanData& cd, Weight rho_image) {
  WeylElement w;
  w.word_ = descend_to_dominant(cd, rho_image);
  w.rho_image_ = std::move(rho_image);
  if (act(cd, w.word_, cd.rho()) != w.rho_image_) throw InvariantError("not a W-image of rho");
  return w;
}

WeylElement WeylElement::longest(const CartanData& cd) { return from_rho_image(cd, -cd.rho()); }

int length(const WeylElement& w) { return w.length(); }

std::vector<WeylElement> enumerate_group(const CartanData& cd) {
  std::set<Weight, LexLess> seen{cd.rho()};
  std::vector<Weight> frontier{cd.rho()};
  while (!frontier.empty()) {
    Weight mu = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= cd.rank(); ++i) {
      Weight image = reflect_weight(cd, i, mu);
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (const auto& mu : seen) out.push_back(WeylElement::from_rho_image(cd, mu));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return out;
}

CosetElement CosetElement::from_orbit_point(const CartanData& cd, QSet qset, const Weight& point) {
  check_qset(cd, qset);
  CosetElement c;
  Word word = descend_to_dominant(cd, point);
  if (act(cd, word, rho_q(cd, qset)) != point) throw ValidationError("point is not in the W-orbit of rho_Q");
  c.rep_ = WeylElement::from_word(cd, word);
  if (c.rep_.length() != static_cast<int>(word.size()))
    throw InvariantError("coset representative word is not reduced");
  c.qset_ = std::move(qset);
  c.key_ = point;
  return c;
}

CosetElement CosetElement::identity(const CartanData& cd, QSet qset) {
  Weight point = rho_q(cd, qset);
  return from_orbit_point(cd, std::move(qset), point);
}

CosetElement CosetElement::longest(const CartanData& cd, QSet qset) {
  return min_coset_rep(cd, WeylElement::longest(cd), qset);
}

int length(const CosetElement& c) { return c.length(); }

CosetElement parse_coset(const CartanData& cd, const QSet& qset, std::string_view text) {
  if (text == "w0") return CosetElement::longest(cd, qset);
  Word word = parse_word(text);
  for (int i : word) check_index(cd, i);
  return min_coset_rep(cd, WeylElement::from_word(cd, word), qset);
}

CosetElement min_coset_rep(const CartanData& cd, const WeylElement& w, const QSet& qset) {
  check_qset(cd, qset);
  return CosetElement::from_orbit_point(cd, qset, act(cd, w.word(), rho_q(cd, qset)));
}

CosetElement left_multiply(const CartanData& cd, int i, const CosetElement& c) {
  check_index(cd, i);
  return CosetElement::from_orbit_point(cd, c.qset(), reflect_weight(cd, i, c.key()));
}

namespace {

// Orbit points x(rho_Q) over all subword products x of the given word.
std::set<Weight, LexLess> subword_points(const CartanData& cd, const Word& word, const QSet& qset) {
  std::set<Weight, LexLess> points{rho_q(cd, qset)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<Weight> fresh;
    for (const auto& mu : points) fresh.push_back(reflect_weight(cd, *it, mu));
    points.insert(fresh.begin(), fresh.end());
  }
  return points;
}

void check_same_qset(const CosetElement& u, const CosetElement& v) {
  if (u.qset() != v.qset()) throw ValidationError("cosets belong to different quotients W/W_Q");
}

}  // namespace

bool bruhat_leq(const CartanData& cd, const CosetElement& u, const CosetElement& v) {
  check_same_qset(u, v);
  if (u.length() > v.length()) return false;
  if (u.length() == v.length()) return u == v;
  return subword_points(cd, v.word(), v.qset()).count(u.key()) > 0;
}

std::optional<Root> covering_root(const CartanData& cd, const CosetElement& kappa, const CosetElement& sigma) {
  check_same_qset(kappa, sigma);
  if (sigma.length() != kappa.length() + 1) return std::nullopt;
  if (!bruhat_leq(cd, kappa, sigma)) return std::nullopt;
  for (const auto& beta : cd.positive_roots())
    if (reflect_weight_by_root(cd, beta, kappa.key()) == sigma.key()) return beta;
  throw InvariantError("Bruhat cover without a covering reflection");
}

std::vector<CosetElement> enumerate_lower_cosets(const CartanData& cd, const CosetElement& tau) {
  std::vector<CosetElement> out;
  for (const auto& mu : subword_points(cd, tau.word(), tau.qset()))
    out.push_back(CosetElement::from_orbit_point(cd, tau.qset(), mu));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Word> reduced_words(const CartanData& cd, const CosetElement& c) {
  if (c.length() == 0) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= cd.rank(); ++i) {
    if (c.key()(i - 1) >= 0) continue;
    CosetElement shorter = left_multiply(cd, i, c);
    for (auto& tail : reduced_words(cd, shorter)) {
      Word w{i};
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

bool is_reduced_word_of(const CartanData& cd, const Word& word, const CosetElement& c) {
  if (static_cast<int>(word.size()) != c.length()) return false;
  for (int i : word)
    if (i < 1 || i > cd.rank()) return false;
  return act(cd, word, rho_q(cd, c.qset())) == c.key();
}

bool canonical_less(const CosetElement& a, const CosetElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

}  // namespace seshadri
