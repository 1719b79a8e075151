#include "seshadri/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>

namespace seshadri {

namespace {

IntMatrix type_a(int n) {
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

// Bourbaki numbering: B_n has alpha_n short, C_n has alpha_n long.
IntMatrix type_b(int n) {
  IntMatrix c = type_a(n);
  c(n - 1, n - 2) = -2;
  return c;
}

IntMatrix type_c(int n) {
  IntMatrix c = type_a(n);
  c(n - 2, n - 1) = -2;
  return c;
}

IntMatrix type_d(int n) {
  IntMatrix c = type_a(n);
  c(n - 2, n - 1) = c(n - 1, n - 2) = 0;
  c(n - 3, n - 1) = c(n - 1, n - 3) = -1;
  return c;
}

// alpha_1 short, alpha_2 long.
IntMatrix type_g2() {
  IntMatrix c(2, 2);
  c << 2, -3, -1, 2;
  return c;
}

// Symmetrizer by propagation along the Dynkin graph; empty if the matrix is
// not symmetrizable.
std::optional<IntVector> find_symmetrizer(const IntMatrix& c) {
  const int n = static_cast<int>(c.rows());
  std::vector<Rational> d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c(i, j) == 0) continue;
        Rational dj = d[i] * Rational(c(i, j)) / Rational(c(j, i));
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  Integer common = 1;
  for (const auto& q : d) common = boost::multiprecision::lcm(common, denominator(q));
  IntVector out(n);
  Integer g = 0;
  for (int i = 0; i < n; ++i) g = boost::multiprecision::gcd(g, numerator(d[i] * Rational(common)));
  for (int i = 0; i < n; ++i) out(i) = to_int64(d[i] * Rational(common) / Rational(g));
  return out;
}

// Sylvester: all pivots of Gaussian elimination without pivoting positive.
bool positive_definite(const Matrix<Rational>& b) {
  Matrix<Rational> m = b;
  const auto n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

}  // namespace

CartanData::CartanData(IntMatrix cartan, std::string type)
    : cartan_(std::move(cartan)), type_(std::move(type)) {
  const int n = rank();
  if (n < 1) throw ValidationError("Cartan matrix must have positive rank");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j && cartan_(i, j) != 2) throw ValidationError("Cartan diagonal entries must equal 2");
      if (i != j && cartan_(i, j) > 0) throw ValidationError("Cartan off-diagonal entries must be <= 0");
      if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))
        throw ValidationError("Cartan matrix: C[i][j] = 0 must imply C[j][i] = 0");
    }
  }
  auto d = find_symmetrizer(cartan_);
  if (!d) throw ValidationError("Cartan matrix is not symmetrizable");
  symmetrizer_ = *d;
  Matrix<Rational> sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = Rational(symmetrizer_(i) * cartan_(i, j));
  if (!positive_definite(sym)) throw ValidationError("Cartan matrix is not of finite type");

  // Closure of the simple roots under simple reflections, keeping positives.
  std::set<Root, LexLess> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= n; ++i) {
    frontier.push_back(simple_root(i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    Root beta = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= n; ++i) {
      Root image = reflect_root(*this, i, beta);
      if ((image.array() < 0).any()) continue;
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    return a.sum() < b.sum();
  });
}

CartanData CartanData::named(std::string_view name) {
  if (name.size() < 2) throw ValidationError("unknown Cartan type '" + std::string(name) + "'");
  int n = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1)
    throw ValidationError("unknown Cartan type '" + std::string(name) + "'");
  const std::string label(name);
  switch (name[0]) {
    case 'A':
      return CartanData(type_a(n), label);
    case 'B':
      if (n >= 2) return CartanData(type_b(n), label);
      break;
    case 'C':
      if (n >= 2) return CartanData(type_c(n), label);
      break;
    case 'D':
      if (n >= 4) return CartanData(type_d(n), label);
      break;
    case 'G':
      if (n == 2) return CartanData(type_g2(), label);
      break;
    default:
      break;
  }
  throw ValidationError("unknown Cartan type '" + label + "'");
}

CartanData CartanData::from_matrix(IntMatrix cartan, std::string type) {
  if (cartan.rows() != cartan.cols()) throw ValidationError("Cartan matrix must be square");
  return CartanData(std::move(cartan), std::move(type));
}

Root CartanData::simple_root(int i) const {
  if (i < 1 || i > rank()) throw ValidationError("simple index " + std::to_string(i) + " out of range");
  Root r = Root::Zero(rank());
  r(i - 1) = 1;
  return r;
}

IntVector CartanData::coroot(const Root& beta) const {
  // (beta, beta) with the symmetrized form B(i, j) = d_i C(i, j).
  std::int64_t norm = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) norm += beta(i) * symmetrizer_(i) * cartan_(i, j) * beta(j);
  IntVector out(rank());
  for (int j = 0; j < rank(); ++j) {
    std::int64_t num = 2 * beta(j) * symmetrizer_(j);
    if (num % norm != 0) throw InvariantError("coroot is not integral; not a root?");
    out(j) = num / norm;
  }
  return out;
}

const std::vector<Root>& positive_roots(const CartanData& cd) { return cd.positive_roots(); }

std::int64_t pairing(const CartanData& cd, const Weight& lambda, const Root& beta) {
  return lambda.dot(cd.coroot(beta));
}

Rational pairing(const CartanData& cd, const RationalWeight& lambda, const Root& beta) {
  IntVector co = cd.coroot(beta);
  Rational sum = 0;
  for (int j = 0; j < cd.rank(); ++j) sum += lambda(j) * Rational(co(j));
  return sum;
}

Weight reflect_weight(const CartanData& cd, int i, const Weight& lambda) {
  if (i < 1 || i > cd.rank()) throw ValidationError("simple index " + std::to_string(i) + " out of range");
  return lambda - lambda(i - 1) * cd.matrix().col(i - 1);
}

Root reflect_root(const CartanData& cd, int i, const Root& beta) {
  // <beta, alpha_i^vee> = sum_j C(i, j) beta_j.
  std::int64_t k = cd.matrix().row(i - 1).dot(beta);
  Root out = beta;
  out(i - 1) -= k;
  return out;
}

Weight reflect_weight_by_root(const CartanData& cd, const Root& beta, const Weight& lambda) {
  return lambda - pairing(cd, lambda, beta) * cd.root_weight(beta);
}

bool is_dominant(const Weight& lambda) { return (lambda.array() >= 0).all(); }

}  // namespace seshadri
