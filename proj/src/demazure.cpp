#include "seshadri/demazure.hpp"

#include <algorithm>
#include <cstdlib>

namespace seshadri {

Character Character::monomial(const Weight& mu, std::int64_t mult) {
  Character c;
  c.add(mu, mult);
  return c;
}

void Character::add(const Weight& mu, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, 0);
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t Character::multiplicity(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Character::total() const {
  std::int64_t sum = 0;
  for (const auto& entry : terms_) sum += entry.second;
  return sum;
}

bool Character::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& e) { return e.second > 0; });
}

Character demazure_op_signed(const CartanData& cd, int i, const Character& chi) {
  if (i < 1 || i > cd.rank()) throw ValidationError("simple index out of range");
  const Weight alpha = cd.matrix().col(i - 1);
  Character out;
  for (const auto& [mu, mult] : chi.terms()) {
    const std::int64_t k = mu(i - 1);
    if (k >= 0) {
      for (std::int64_t j = 0; j <= k; ++j) out.add(mu - j * alpha, mult);
    } else {
      for (std::int64_t j = 1; j <= -k - 1; ++j) out.add(mu + j * alpha, -mult);
    }
  }
  return out;
}

Character demazure_op(const CartanData& cd, int i, const Character& chi) {
  Character out = demazure_op_signed(cd, i, chi);
  if (!out.nonnegative()) throw InvariantError("negative multiplicity");
  return out;
}

Character demazure_character(const CartanData& cd, const Weight& lambda, std::int64_t m, const Word& word) {
  if (m < 0) throw ValidationError("degree must be nonnegative");
  for (int i : word)
    if (i < 1 || i > cd.rank()) throw ValidationError("simple index out of range");
  if (WeylElement::from_word(cd, word).length() != static_cast<int>(word.size()))
    throw ValidationError("word " + word_to_string(word) + " is not reduced");
  Character chi = Character::monomial(m * lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) chi = demazure_op(cd, *it, chi);
  return chi;
}

Character demazure_character(const StratPoset& p, std::int64_t m) {
  return demazure_character(p.cartan(), p.lambda(), m, p.tau().word());
}

Character path_character(const StratPoset& p, std::int64_t m) {
  if (m == 0) return Character::monomial(Weight::Zero(p.cartan().rank()));
  FanTable table = enumerate_fan_table(p, m);
  Character chi;
  const std::int64_t denom = table.denominator;
  for (const auto& terms : table.elements) {
    Weight w = Weight::Zero(p.cartan().rank());
    for (const auto& [v, c] : terms) w += c * p.vertex_weight(v);
    for (Eigen::Index k = 0; k < w.size(); ++k) {
      if (w(k) % denom != 0) throw InvariantError("fan element with non-integral weight");
      w(k) /= denom;
    }
    chi.add(w, 1);
  }
  return chi;
}

Integer dimension(const StratPoset& p, std::int64_t m) { return count_fan(p, m); }

Integer count_standard_monomials(const StratPoset& p, std::int64_t m) {
  if (m < 0) throw ValidationError("degree must be nonnegative");
  if (m == 0) return Integer(1);
  FanTable degree_one = enumerate_fan_table(p, 1);
  const std::size_t n = degree_one.elements.size();
  // Standard sequences read a^1, a^2, ...: a^{j+1} may follow a^j iff max supp a^{j+1} <= min supp a^j.
  std::vector<VertexId> top(n), bottom(n);
  for (std::size_t k = 0; k < n; ++k) {
    top[k] = degree_one.elements[k].back().first;
    bottom[k] = degree_one.elements[k].front().first;
  }
  std::vector<Integer> ways(n, 1);
  for (std::int64_t len = 2; len <= m; ++len) {
    std::vector<Integer> next(n, 0);
    for (std::size_t first = 0; first < n; ++first)
      for (std::size_t rest = 0; rest < n; ++rest)
        if (p.leq(top[rest], bottom[first])) next[first] += ways[rest];
    ways = std::move(next);
  }
  Integer total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

std::vector<SStep> s_sequence(const StratPoset& p, const FanElement& a, const Word& word) {
  if (a.empty()) throw ValidationError("s_sequence needs a nonzero element");
  if (!in_fan(p, a)) throw ValidationError("s_sequence: element is not in the fan of monoids");
  if (!is_reduced_word_of(p.cartan(), word, p.vertex(a.top())))
    throw ValidationError("word " + word_to_string(word) + " is not a reduced word of " + p.label(a.top()));
  const auto& cd = p.cartan();

  std::vector<SStep> steps;
  FanElement current = a;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const int i = word[pos];
    // Support top first: tau_q > ... > tau_1.
    std::vector<VertexId> supp = current.support();
    std::reverse(supp.begin(), supp.end());
    // First position from the top whose vertex goes up under s_i; the positions above it are reflected.
    std::size_t split = supp.size();
    for (std::size_t h = 0; h < supp.size(); ++h) {
      if (p.vertex(supp[h]).key()(i - 1) > 0) {
        split = h;
        break;
      }
    }

    Rational exponent = 0;
    std::map<VertexId, Rational> next;
    for (std::size_t h = 0; h < supp.size(); ++h) {
      const Rational& c = current.coeffs().at(supp[h]);
      if (h < split) {
        exponent += c * Rational(std::abs(p.vertex_weight(supp[h])(i - 1)));
        auto image = p.find(left_multiply(cd, i, p.vertex(supp[h])));
        if (!image) throw InvariantError("s_i tau_h left A_tau");
        next[*image] += c;
      } else {
        next[supp[h]] += c;
      }
    }
    if (!is_integral(exponent) || exponent < 0) throw InvariantError("integrality violation in s_sequence");
    steps.push_back({i, to_int64(exponent)});

    current = FanElement(std::move(next));
    const Word rest(word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word.end());
    if (!in_fan(p, current)) throw InvariantError("s_sequence step left the fan of monoids");
    if (!is_reduced_word_of(cd, rest, p.vertex(current.top())))
      throw InvariantError("s_sequence: shortened word does not match the new top vertex");
  }
  if (!(current == FanElement::basis(p.bottom(), a.degree())))
    throw InvariantError("s_sequence did not terminate at deg(a) * e_id");
  return steps;
}

DividedPowerMonomial v_monomial(const StratPoset& p, const FanElement& a, const Word& word) {
  DividedPowerMonomial mono;
  mono.shape = to_int64(a.degree());
  mono.factors = a.empty() && word.empty() ? std::vector<SStep>{} : s_sequence(p, a, word);
  if (monomial_weight(p.cartan(), p.lambda(), mono) != integral_weight_of(p, a))
    throw InvariantError("v_monomial weight does not match weight(a)");
  return mono;
}

Weight monomial_weight(const CartanData& cd, const Weight& lambda, const DividedPowerMonomial& mono) {
  Weight w = mono.shape * lambda;
  for (const auto& f : mono.factors) w -= f.exponent * cd.matrix().col(f.index - 1);
  return w;
}

std::string to_string(const DividedPowerMonomial& mono) {
  std::string out;
  for (const auto& f : mono.factors)
    out += "X(-" + std::to_string(f.index) + ")^(" + std::to_string(f.exponent) + ") ";
  return out + "v(m=" + std::to_string(mono.shape) + ")";
}

std::vector<std::int64_t> extremal_cascade(const CartanData& cd, const Weight& lambda, const Word& word) {
  std::vector<std::int64_t> out(word.size());
  Weight mu = lambda;
  for (std::size_t k = word.size(); k-- > 0;) {
    out[k] = mu(word[k] - 1);
    mu = reflect_weight(cd, word[k], mu);
  }
  return out;
}

}  // namespace seshadri
