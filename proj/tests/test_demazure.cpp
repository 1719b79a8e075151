#include "doctest.h"
#include "oracles.hpp"
#include "seshadri/demazure.hpp"

using namespace seshadri;

namespace {

Weight w1(std::int64_t a) { return Weight::Constant(1, a); }

Weight w2(std::int64_t a, std::int64_t b) {
  Weight w(2);
  w << a, b;
  return w;
}

StratPoset poset(const char* type, std::vector<std::int64_t> lambda, const char* tau = "w0") {
  Weight w = Weight::Map(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
  return StratPoset::build(CartanData::named(type), w, tau);
}

}  // namespace

TEST_CASE("Demazure operator in A1") {
  CartanData a1 = CartanData::named("A1");
  Character expected;
  expected.add(w1(1), 1);
  expected.add(w1(-1), 1);
  CHECK(demazure_op(a1, 1, Character::monomial(w1(1))) == expected);
  CHECK(demazure_op(a1, 1, Character::monomial(w1(-1))).terms().empty());
  CHECK(demazure_op(a1, 1, Character::monomial(w1(0))) == Character::monomial(w1(0)));
  Character signed_result = demazure_op_signed(a1, 1, Character::monomial(w1(-3)));
  Character minus;
  minus.add(w1(-1), -1);
  minus.add(w1(1), -1);
  CHECK(signed_result == minus);
  CHECK_THROWS_AS(demazure_op(a1, 1, Character::monomial(w1(-3))), InvariantError);
}

TEST_CASE("Demazure operator agrees with the defining quotient") {
  // (e^{mu+rho} - e^{s(mu+rho)}) / (1 - e^{-alpha}) e^{-rho}; multiplying back by
  // (1 - e^{-alpha}) must recover the numerator.
  CartanData cd = CartanData::named("B2");
  for (int i = 1; i <= 2; ++i)
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t b = -4; b <= 4; ++b) {
        Weight mu = w2(a, b);
        Character d = demazure_op_signed(cd, i, Character::monomial(mu));
        Character lhs;
        const Weight alpha = cd.matrix().col(i - 1);
        for (const auto& [nu, mult] : d.terms()) {
          lhs.add(nu + cd.rho(), mult);
          lhs.add(nu + cd.rho() - alpha, -mult);
        }
        Character rhs;
        rhs.add(mu + cd.rho(), 1);
        rhs.add(reflect_weight(cd, i, mu + cd.rho()), -1);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("Demazure operators are idempotent") {
  CartanData cd = CartanData::named("G2");
  Character chi = demazure_character(cd, w2(1, 1), 1, {2, 1});
  for (int i = 1; i <= 2; ++i) {
    Character once = demazure_op(cd, i, chi);
    CHECK(demazure_op(cd, i, once) == once);
  }
}

TEST_CASE("Demazure character examples") {
  CartanData a1 = CartanData::named("A1");
  Character chi = demazure_character(a1, w1(2), 1, {1});
  CHECK(chi == oracle::a1_string(2));
  CartanData a2 = CartanData::named("A2");
  Character std_rep = demazure_character(a2, w2(1, 0), 1, {2, 1});
  CHECK(std_rep.terms().size() == 3);
  CHECK(std_rep.total() == 3);
  CHECK(demazure_character(a2, w2(3, 1), 1, {}) == Character::monomial(w2(3, 1)));
  CHECK_THROWS_AS(demazure_character(a2, w2(1, 1), 1, {1, 1}), ValidationError);
}

TEST_CASE("characters do not depend on the reduced word") {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    CartanData cd = CartanData::named(type);
    Weight lambda = Weight::Ones(cd.rank());
    CosetElement w0 = CosetElement::longest(cd, {});
    auto words = reduced_words(cd, w0);
    REQUIRE(words.size() >= 2);
    Character first = demazure_character(cd, lambda, 2, words.front());
    for (const auto& w : words) CHECK(demazure_character(cd, lambda, 2, w) == first);
  }
}

TEST_CASE("path character equals the Demazure character") {
  for (auto p : {poset("A1", {2}, "1"), poset("A2", {1, 0}), poset("A2", {1, 1}), poset("B2", {0, 1}),
                 poset("G2", {1, 0}, "2.1"), poset("A3", {1, 0, 1}, "1.2.3")}) {
    for (std::int64_t m = 0; m <= 2; ++m) {
      Character chi = demazure_character(p, m);
      CHECK(path_character(p, m) == chi);
      CHECK(dimension(p, m) == chi.total());
    }
  }
}

TEST_CASE("full Demazure modules have the Weyl dimension") {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    CartanData cd = CartanData::named(type);
    oracle::Group g(cd.matrix());
    for (Weight lambda : {Weight(Weight::Ones(cd.rank())), Weight(Weight::Unit(cd.rank(), 0))}) {
      StratPoset p = StratPoset::build(cd, lambda, "w0");
      for (std::int64_t m = 1; m <= 3; ++m) CHECK(dimension(p, m) == oracle::weyl_dimension(g, m * lambda));
    }
  }
}

TEST_CASE("dimension examples") {
  StratPoset a1 = poset("A1", {2}, "1");
  for (std::int64_t m = 0; m <= 5; ++m) CHECK(dimension(a1, m) == 2 * m + 1);
  CHECK(dimension(poset("A2", {1, 1}), 1) == 8);
  StratPoset point = poset("B2", {2, 1}, "id");
  for (std::int64_t m = 0; m <= 3; ++m) CHECK(dimension(point, m) == 1);
}

TEST_CASE("standard monomials count the dimension") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 1}), poset("G2", {0, 1}), poset("A1", {2}, "1")})
    for (std::int64_t m = 0; m <= 3; ++m) CHECK(count_standard_monomials(p, m) == dimension(p, m));
}

TEST_CASE("s-sequence examples") {
  StratPoset a1 = poset("A1", {2}, "1");
  FanElement half = parse_fan_element(a1, "1:1/2,id:1/2");
  auto steps = s_sequence(a1, half, {1});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0] == SStep{1, 1});
  DividedPowerMonomial mono = v_monomial(a1, half, {1});
  CHECK(to_string(mono) == "X(-1)^(1) v(m=1)");
  CHECK(monomial_weight(a1.cartan(), a1.lambda(), mono) == w1(0));

  CHECK(s_sequence(a1, FanElement::basis(0, 3), {}).empty());
  DividedPowerMonomial trivial = v_monomial(a1, FanElement::basis(0, 2), {});
  CHECK(to_string(trivial) == "v(m=2)");
  CHECK(monomial_weight(a1.cartan(), a1.lambda(), trivial) == w1(4));

  CHECK_THROWS_AS(s_sequence(a1, half, {}), ValidationError);
  StratPoset small = poset("A1", {1}, "1");
  CHECK_THROWS_AS(s_sequence(small, parse_fan_element(small, "1:1/2,id:1/2"), {1}), ValidationError);
}

TEST_CASE("extremal elements follow the cascade") {
  StratPoset adj = poset("A2", {1, 1});
  CartanData cd = adj.cartan();
  for (const auto& word : reduced_words(cd, adj.tau())) {
    auto steps = s_sequence(adj, FanElement::basis(adj.top()), word);
    auto cascade = extremal_cascade(cd, adj.lambda(), word);
    REQUIRE(steps.size() == cascade.size());
    for (std::size_t k = 0; k < steps.size(); ++k) {
      CHECK(steps[k].index == word[k]);
      CHECK(steps[k].exponent == cascade[k]);
    }
    DividedPowerMonomial mono = v_monomial(adj, FanElement::basis(adj.top()), word);
    CHECK(monomial_weight(cd, adj.lambda(), mono) == act(cd, adj.tau().word(), adj.lambda()));
  }
}

TEST_CASE("s-sequences are integral and weights do not depend on the word") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 1}), poset("G2", {1, 0}), poset("A3", {1, 0, 1})}) {
    for (std::int64_t s = 1; s <= 2; ++s)
      for (const auto& a : enumerate_fan(p, s)) {
        for (const auto& word : reduced_words(p.cartan(), p.vertex(a.top()))) {
          DividedPowerMonomial mono = v_monomial(p, a, word);
          CHECK(mono.shape == s);
          for (const auto& f : mono.factors) CHECK(f.exponent >= 0);
          CHECK(monomial_weight(p.cartan(), p.lambda(), mono) == integral_weight_of(p, a));
        }
      }
  }
}
