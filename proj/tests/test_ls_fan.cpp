#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seshadri/ls_fan.hpp"

using namespace seshadri;

namespace {

StratPoset poset(const char* type, std::vector<std::int64_t> lambda, const char* tau = "w0") {
  Weight w = Weight::Map(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
  return StratPoset::build(CartanData::named(type), w, tau);
}

FanElement el(const StratPoset& p, const char* text) { return parse_fan_element(p, text); }

}  // namespace

TEST_CASE("d-chains in A1") {
  StratPoset two = poset("A1", {2}, "1");
  StratPoset one = poset("A1", {1}, "1");
  CHECK(is_d_chain(two, 1, 0, Rational(1, 2)));
  CHECK_FALSE(is_d_chain(one, 1, 0, Rational(1, 2)));
  CHECK(is_d_chain(one, 1, 1, Rational(1, 3)));
  CHECK(is_d_chain(one, 1, 0, Rational(1, 2), 2));
  CHECK_THROWS_AS(is_d_chain(one, 0, 1, Rational(1, 2)), ValidationError);
  CHECK_THROWS_AS(is_d_chain(one, 1, 0, Rational(3, 2)), ValidationError);
}

TEST_CASE("fan membership examples") {
  StratPoset two = poset("A1", {2}, "1");
  StratPoset one = poset("A1", {1}, "1");
  CHECK(in_fan(two, el(two, "1:1/2,id:1/2")));
  CHECK_FALSE(in_fan(one, el(one, "1:1/2,id:1/2")));
  StratPoset adj = poset("A2", {1, 1});
  for (VertexId v = 0; v < adj.size(); ++v) CHECK(in_fan(adj, FanElement::basis(v)));
  CHECK_FALSE(in_fan(adj, el(adj, "1:1/2,2:1/2")));
  CHECK(in_fan(adj, el(adj, "2.1:1/2,1:1/2")));
  CHECK_FALSE(in_fan(adj, el(adj, "1.2:1/2,1:1/2")));
}

TEST_CASE("enumeration examples") {
  StratPoset two = poset("A1", {2}, "1");
  auto ls = enumerate_fan(two, 1);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == FanElement::basis(1));
  CHECK(ls[1] == el(two, "1:1/2,id:1/2"));
  CHECK(ls[2] == FanElement::basis(0));

  StratPoset std_rep = poset("A2", {1, 0});
  auto std_ls = enumerate_fan(std_rep, 1);
  CHECK(std_ls.size() == 3);
  for (const auto& a : std_ls) CHECK(a.coeffs().size() == 1);

  for (const char* type : {"A2", "B2", "G2"}) {
    StratPoset p = poset(type, {1, 1});
    auto ls1 = enumerate_fan(p, 1);
    CHECK(std::find(ls1.begin(), ls1.end(), FanElement::basis(p.top())) != ls1.end());
    CHECK(std::find(ls1.begin(), ls1.end(), FanElement::basis(p.bottom())) != ls1.end());
  }
}

TEST_CASE("enumeration matches the brute-force filter and the per-chain union") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 1}), poset("B2", {2, 1}), poset("G2", {1, 0}),
                 poset("A3", {1, 0, 1}), poset("A2", {2, 2}, "1.2")}) {
    for (std::int64_t m = 1; m <= 2; ++m) {
      auto brute = oracle::brute_fan(p, m);
      FanTable table = enumerate_fan_table(p, m);
      FanTable by_chains = enumerate_fan_by_chains(p, m);
      CHECK(table.elements == by_chains.elements);
      std::set<std::map<VertexId, Rational>> mine;
      for (const auto& a : enumerate_fan(p, m)) {
        CHECK(a.degree() == m);
        mine.insert(a.coeffs());
      }
      CHECK(mine == brute);
      CHECK(count_fan(p, m) == brute.size());
    }
  }
}

TEST_CASE("membership is independent of the maximal chain") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 1}), poset("B2", {2, 2}), poset("A3", {1, 1, 1})}) {
    auto chains = maximal_chains(p);
    for (std::int64_t m = 1; m <= 2; ++m)
      for (const auto& a : enumerate_fan(p, m)) {
        std::vector<bool> verdicts;
        for (const auto& c : chains) {
          bool contains = std::all_of(a.coeffs().begin(), a.coeffs().end(),
                                      [&](const auto& e) { return c.contains(e.first); });
          if (contains) verdicts.push_back(in_fan_on_chain(p, c, a));
        }
        REQUIRE_FALSE(verdicts.empty());
        CHECK(std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; }));
      }
  }
}

TEST_CASE("weights of fan members are integral") {
  StratPoset two = poset("A1", {2}, "1");
  CHECK(integral_weight_of(two, el(two, "1:1/2,id:1/2")) == Weight::Zero(1));
  StratPoset p = poset("G2", {1, 1});
  CHECK(integral_weight_of(p, FanElement::basis(p.bottom())) == p.lambda());
  CHECK(integral_weight_of(p, FanElement::basis(p.top())) == -p.lambda());
  for (std::int64_t m = 1; m <= 2; ++m)
    for (const auto& a : enumerate_fan(p, m)) CHECK_NOTHROW(integral_weight_of(p, a));
}

TEST_CASE("theta examples and round trip") {
  StratPoset two = poset("A1", {2}, "1");
  LSPath extremal{{1}, {Rational(1)}};
  CHECK(theta(two, extremal, 1) == FanElement::basis(1));
  LSPath half{{1, 0}, {Rational(1, 2), Rational(1)}};
  CHECK(theta(two, half, 1) == el(two, "1:1/2,id:1/2"));
  CHECK(theta(two, half, 2) == el(two, "1:1,id:1"));
  CHECK(theta_inv(two, el(two, "1:1,id:1"), 2) == half);
  StratPoset one = poset("A1", {1}, "1");
  CHECK_FALSE(is_ls_path(one, half, 1));
  CHECK_THROWS_AS(theta(one, half, 1), ValidationError);

  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 2})})
    for (std::int64_t m = 1; m <= 3; ++m) {
      auto paths = oracle::brute_ls_paths(p, m);
      auto ls = enumerate_fan(p, m);
      CHECK(paths.size() == ls.size());
      for (const auto& path : paths) {
        CHECK(is_ls_path(p, path, m));
        CHECK(theta_inv(p, theta(p, path, m), m) == path);
      }
      for (const auto& a : ls) CHECK(theta(p, theta_inv(p, a, m), m) == a);
    }
}

TEST_CASE("triangle order") {
  StratPoset p = poset("A2", {1, 0});
  CHECK(triangle_cmp(p, FanElement::basis(p.top()), FanElement::basis(p.bottom())) == TriangleOrder::Greater);
  CHECK(triangle_cmp(p, el(p, "1:1"), el(p, "2.1:1")) == TriangleOrder::Less);
  CHECK(triangle_cmp(p, el(p, "1:1"), el(p, "1:1")) == TriangleOrder::Equal);
  StratPoset adj = poset("A2", {1, 1});
  CHECK(triangle_cmp(adj, el(adj, "1:1"), el(adj, "2:1")) == TriangleOrder::Incomparable);
  CHECK_THROWS_AS(triangle_cmp(adj, el(adj, "1:1"), el(adj, "2:2")), ValidationError);
}

TEST_CASE("standard decomposition") {
  StratPoset two = poset("A1", {2}, "1");
  auto parts = standard_decompose(two, el(two, "1:1,id:1"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == el(two, "1:1"));
  CHECK(parts[1] == el(two, "id:1"));
  parts = standard_decompose(two, el(two, "1:3/2,id:1/2"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == el(two, "1:1"));
  CHECK(parts[1] == el(two, "1:1/2,id:1/2"));
  StratPoset adj = poset("A2", {1, 1});
  parts = standard_decompose(adj, FanElement::basis(adj.top(), 2));
  CHECK(parts == std::vector<FanElement>{FanElement::basis(adj.top()), FanElement::basis(adj.top())});
  CHECK_THROWS_AS(standard_decompose(two, el(two, "1:1/2")), ValidationError);

  CHECK(is_standard_monomial(two, {el(two, "1:1"), el(two, "id:1")}));
  CHECK_FALSE(is_standard_monomial(two, {el(two, "id:1"), el(two, "1:1")}));
  CHECK_FALSE(is_standard_monomial(two, {el(two, "1:1/2,id:1/2"), el(two, "1:1")}));
}

TEST_CASE("standard decomposition is the only standard one") {
  for (auto p : {poset("A2", {1, 1}), poset("B2", {1, 1})}) {
    auto degree_one = enumerate_fan(p, 1);
    for (std::int64_t m = 2; m <= 3; ++m)
      for (const auto& a : enumerate_fan(p, m)) {
        std::vector<FanElement> cur;
        std::vector<std::vector<FanElement>> all;
        oracle::ordered_decompositions(degree_one, a, cur, all);
        std::vector<std::vector<FanElement>> standard;
        for (const auto& d : all)
          if (is_standard_monomial(p, d)) standard.push_back(d);
        REQUIRE(standard.size() == 1);
        CHECK(standard.front() == standard_decompose(p, a));
      }
  }
}

TEST_CASE("fan algebra product") {
  StratPoset p = poset("A2", {1, 1});
  CHECK(std::get<FanElement>(fan_multiply(p, FanElement::basis(p.top()), FanElement::basis(p.bottom()))) ==
        FanElement::basis(p.top()) + FanElement::basis(p.bottom()));
  CHECK(std::holds_alternative<FanZero>(fan_multiply(p, el(p, "1:1"), el(p, "2:1"))));
  StratPoset two = poset("A1", {2}, "1");
  FanElement half = el(two, "1:1/2,id:1/2");
  CHECK(std::get<FanElement>(fan_multiply(two, half, half)) == el(two, "1:1,id:1"));
  CHECK(std::get<FanElement>(fan_multiply(two, FanElement(), half)) == half);

  std::mt19937_64 rng(7);
  auto pool = enumerate_fan(p, 1);
  for (const auto& a : enumerate_fan(p, 2)) pool.push_back(a);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 500; ++k) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    auto prod = fan_multiply(p, a, b);
    if (auto* c = std::get_if<FanElement>(&prod)) {
      CHECK(c->degree() == a.degree() + b.degree());
      CHECK(oracle::in_fan_any_chain(p, *c));
    } else {
      CHECK_FALSE(is_chain_support(p, a + b));
    }
  }
}

TEST_CASE("restriction to a smaller tau keeps membership") {
  StratPoset big = poset("B2", {1, 1});
  StratPoset small = poset("B2", {1, 1}, "2.1");
  for (std::int64_t m = 1; m <= 2; ++m) {
    std::set<std::map<VertexId, Rational>> restricted;
    for (const auto& a : enumerate_fan(big, m)) {
      bool inside = std::all_of(a.coeffs().begin(), a.coeffs().end(),
                                [&](const auto& e) { return big.leq(e.first, *big.find_label("2.1")); });
      if (inside) restricted.insert(transport(big, small, a).coeffs());
    }
    std::set<std::map<VertexId, Rational>> direct;
    for (const auto& a : enumerate_fan(small, m)) direct.insert(a.coeffs());
    CHECK(restricted == direct);
  }
}

TEST_CASE("text form of fan elements") {
  StratPoset p = poset("A2", {1, 1});
  FanElement a = el(p, "2.1:1/2,1:1/2");
  CHECK(to_string(p, a) == "2.1:1/2;1:1/2");
  CHECK(parse_fan_element(p, to_string(p, a)) == a);
  CHECK(to_string(p, FanElement()) == "0");
  CHECK_THROWS_AS(el(p, "3:1"), ValidationError);
  CHECK_THROWS_AS(el(p, "1:-1"), ValidationError);
  CHECK_THROWS_AS(el(p, "1"), ValidationError);
}
