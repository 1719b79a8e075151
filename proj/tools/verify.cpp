#include "verify.hpp"

#include <random>
#include <sstream>

namespace seshadri::cli {

namespace {

std::vector<Weight> small_lambdas(int rank) {
  std::vector<Weight> out;
  Weight w = Weight::Zero(rank);
  while (true) {
    if (!w.isZero()) out.push_back(w);
    int k = 0;
    while (k < rank && w(k) == 2) w(k++) = 0;
    if (k == rank) break;
    ++w(k);
  }
  return out;
}

std::string case_name(const StratPoset& p) {
  std::ostringstream os;
  os << p.cartan().type() << " lambda=(";
  for (Eigen::Index k = 0; k < p.lambda().size(); ++k) os << (k ? "," : "") << p.lambda()(k);
  os << ") tau=" << p.label(p.top());
  return os.str();
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void expect(bool ok, const StratPoset& p, const std::string& what) {
    ++report_.checks;
    if (!ok) report_.failures.push_back(case_name(p) + ": " + what);
  }

  template <typename F>
  void guarded(const StratPoset& p, const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.checks;
      report_.failures.push_back(case_name(p) + ": " + what + " threw " + e.what());
    }
  }

 private:
  VerifyReport& report_;
};

void verify_poset(const StratPoset& p, Checker& check, std::mt19937_64& rng) {
  check.guarded(p, "characters", [&] {
    for (std::int64_t m = 1; m <= 3; ++m) {
      Character lhs = demazure_character(p, m);
      Character rhs = path_character(p, m);
      check.expect(lhs == rhs, p, "demazure_character != path_character at m=" + std::to_string(m));
      Integer dim = dimension(p, m);
      check.expect(dim == lhs.total(), p, "dimension != character mass at m=" + std::to_string(m));
      check.expect(count_standard_monomials(p, m) == dim, p,
                   "standard monomial count != dimension at m=" + std::to_string(m));
    }
  });
  check.guarded(p, "degree", [&] { check.expect(degree(p) == degree_via_hilbert(p), p, "degree != Hilbert degree"); });
  check.guarded(p, "s_sequence", [&] {
    for (std::int64_t s = 1; s <= 2; ++s) {
      for (const auto& a : enumerate_fan(p, s)) {
        DividedPowerMonomial mono = v_monomial(p, a, p.vertex(a.top()).word());
        check.expect(monomial_weight(p.cartan(), p.lambda(), mono) == integral_weight_of(p, a), p,
                     "v_monomial weight");
      }
    }
    for (VertexId v = 0; v < p.size(); ++v) {
      auto steps = s_sequence(p, FanElement::basis(v), p.vertex(v).word());
      auto cascade = extremal_cascade(p.cartan(), p.lambda(), p.vertex(v).word());
      bool same = steps.size() == cascade.size();
      for (std::size_t k = 0; same && k < steps.size(); ++k) same = steps[k].exponent == cascade[k];
      check.expect(same, p, "extremal exponents differ from the cascade at " + p.label(v));
    }
  });
  check.guarded(p, "theta", [&] {
    for (std::int64_t m = 1; m <= 2; ++m)
      for (const auto& a : enumerate_fan(p, m)) {
        LSPath path = theta_inv(p, a, m);
        check.expect(is_ls_path(p, path, m) && theta(p, path, m) == a, p, "theta round trip");
      }
  });
  check.guarded(p, "decomposition", [&] {
    for (const auto& a : enumerate_fan(p, 2)) {
      auto parts = standard_decompose(p, a);
      FanElement sum;
      for (const auto& part : parts) sum = sum + part;
      check.expect(is_standard_monomial(p, parts) && sum == a, p, "standard decomposition");
    }
  });
  check.guarded(p, "fan laws", [&] {
    std::vector<FanElement> pool = enumerate_fan(p, 1);
    for (const auto& a : enumerate_fan(p, 2)) pool.push_back(a);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 20; ++k) {
      const FanElement& a = pool[pick(rng)];
      const FanElement& b = pool[pick(rng)];
      FanProduct prod = fan_multiply(p, a, b);
      FanElement sum = a + b;
      bool chain = is_chain_support(p, sum);
      if (const auto* c = std::get_if<FanElement>(&prod)) {
        check.expect(chain && *c == sum && c->degree() == a.degree() + b.degree() && in_fan(p, *c), p,
                     "fan product");
      } else {
        check.expect(!chain, p, "fan product vanished on a chain support");
      }
    }
  });
}

}  // namespace

VerifyReport run_verify(std::uint64_t seed, std::ostream* log) {
  VerifyReport report;
  Checker check(report);
  std::mt19937_64 rng(seed);
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    CartanData cd = CartanData::named(name);
    for (const Weight& lambda : small_lambdas(cd.rank())) {
      const QSet q = zero_set(lambda);
      StratPoset top = StratPoset::build(cd, lambda, CosetElement::longest(cd, q));
      check.expect(bond_translation_check(top), top, "bond translation");
      for (const auto& tau : top.vertices()) {
        StratPoset p = StratPoset::build(cd, lambda, tau);
        ++report.cases;
        verify_poset(p, check, rng);
      }
      if (log) *log << name << " " << case_name(top) << " done\n";
    }
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  return Json{{"cases", report.cases},
              {"checks", report.checks},
              {"failures", report.failures},
              {"ok", report.failures.empty()}};
}

}  // namespace seshadri::cli
