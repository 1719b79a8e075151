#include "seshadri/nok.hpp"

#include <algorithm>
#include <set>

namespace seshadri {

int SimplicialComplex::dimension() const {
  if (facets.empty()) throw InvariantError("complex without facets");
  const int dim = facets.front().rank();
  for (const auto& f : facets)
    if (f.rank() != dim) throw InvariantError("complex is not homogeneous");
  return dim;
}

bool SimplicialComplex::is_face(const std::vector<VertexId>& vertices) const {
  return std::any_of(facets.begin(), facets.end(), [&](const Chain& f) {
    return std::all_of(vertices.begin(), vertices.end(), [&](VertexId v) { return f.contains(v); });
  });
}

SimplicialComplex newton_okounkov_complex(const StratPoset& p) {
  SimplicialComplex c;
  c.vertex_count = p.size();
  c.facets = maximal_chains(p);
  c.dimension();
  return c;
}

std::vector<IntVector> dehy_vertex_images(const Chain& chain) {
  const int r = chain.rank();
  std::vector<IntVector> out;
  IntVector current = IntVector::Zero(r);
  out.push_back(current);
  for (int j = 1; j <= r; ++j) {
    current(j - 1) = chain.bond(j);
    out.push_back(current);
  }
  return out;
}

RationalVector dehy_embed(const Chain& chain, const FanElement& point) {
  if (point.degree() != 1) throw ValidationError("dehy_embed needs coefficients summing to 1");
  for (const auto& [v, c] : point.coeffs())
    if (!chain.contains(v)) throw ValidationError("dehy_embed: point is not supported on the chain");
  const int r = chain.rank();
  RationalVector out(r);
  Rational tail = 0;
  for (int k = r; k >= 1; --k) {
    tail += point.coeff(chain.at(k));
    out(k - 1) = Rational(chain.bond(k)) * tail;
  }
  return out;
}

std::vector<FanElement> lattice_points(const StratPoset& p, const Chain& chain, std::int64_t m) {
  if (m < 1) throw ValidationError("lattice_points needs m >= 1");
  std::vector<FanElement> out;
  for (const auto& a : enumerate_fan_on_chain(p, chain, m)) out.push_back(a.scaled(Rational(1, m)));
  return out;
}

namespace {

void scan_tails(const Chain& chain, std::int64_t m, std::int64_t grid, int k, std::vector<std::int64_t>& tails,
                std::vector<FanElement>& out) {
  // tails[k] = grid * (a_k + ... + a_r), nonincreasing in k, tails[0] = grid.
  const int r = chain.rank();
  if (k > r) {
    std::map<VertexId, Rational> coeffs;
    for (int j = 0; j <= r; ++j) {
      const std::int64_t next = j == r ? 0 : tails[static_cast<std::size_t>(j) + 1];
      if (tails[static_cast<std::size_t>(j)] != next)
        coeffs[chain.at(j)] = Rational(tails[static_cast<std::size_t>(j)] - next, grid);
    }
    FanElement v(std::move(coeffs));
    RationalVector image = dehy_embed(chain, v);
    for (Eigen::Index i = 0; i < image.size(); ++i)
      if (!is_integral(image(i) * m)) return;
    out.push_back(std::move(v));
    return;
  }
  for (std::int64_t t = 0; t <= tails[static_cast<std::size_t>(k) - 1]; ++t) {
    tails[static_cast<std::size_t>(k)] = t;
    scan_tails(chain, m, grid, k + 1, tails, out);
  }
}

}  // namespace

std::vector<FanElement> lattice_points_by_integrality(const StratPoset&, const Chain& chain, std::int64_t m) {
  if (m < 1) throw ValidationError("lattice_points needs m >= 1");
  std::int64_t l = 1;
  for (auto b : chain.bonds) l = lcm64(l, b);
  const std::int64_t grid = m * l;
  std::vector<std::int64_t> tails(static_cast<std::size_t>(chain.rank()) + 1, 0);
  tails[0] = grid;
  std::vector<FanElement> out;
  scan_tails(chain, m, grid, 1, tails, out);
  std::sort(out.begin(), out.end(), canonical_fan_greater);
  return out;
}

std::vector<FanElement> face_lattice_points(const StratPoset& p, const Chain& chain,
                                            const std::vector<VertexId>& face, std::int64_t m) {
  for (VertexId v : face)
    if (!chain.contains(v)) throw ValidationError("face is not contained in the chain");
  std::vector<FanElement> out;
  for (auto& a : lattice_points(p, chain, m)) {
    bool inside = std::all_of(a.coeffs().begin(), a.coeffs().end(), [&](const auto& entry) {
      return std::find(face.begin(), face.end(), entry.first) != face.end();
    });
    if (inside) out.push_back(std::move(a));
  }
  return out;
}

Integer bond_product(const Chain& chain) {
  Integer prod = 1;
  for (auto b : chain.bonds) prod *= b;
  return prod;
}

Integer degree(const StratPoset& p) {
  Integer total = 0;
  for (const auto& c : maximal_chains(p)) total += bond_product(c);
  return total;
}

std::vector<Integer> hilbert_counts(const StratPoset& p, const std::vector<std::int64_t>& ms) {
  std::vector<Integer> out;
  out.reserve(ms.size());
  for (auto m : ms) out.push_back(count_fan(p, m));
  return out;
}

Integer degree_from_counts(int r, const std::vector<std::int64_t>& ms, const std::vector<Integer>& counts) {
  if (ms.size() != counts.size()) throw ValidationError("samples and counts differ in length");
  if (ms.size() < static_cast<std::size_t>(r) + 1) throw ValidationError("need at least r + 1 samples");
  if (std::set<std::int64_t>(ms.begin(), ms.end()).size() != ms.size())
    throw ValidationError("samples must be distinct");

  // Newton divided differences; table[k] holds f[m_k, ..., m_{k+order}].
  std::vector<Rational> table(counts.begin(), counts.end());
  Rational leading = table.front();
  for (std::size_t order = 1; order < ms.size(); ++order) {
    for (std::size_t k = 0; k + order < ms.size(); ++k)
      table[k] = (table[k + 1] - table[k]) / Rational(ms[k + order] - ms[k]);
    table.resize(ms.size() - order);
    if (order == static_cast<std::size_t>(r)) leading = table.front();
    if (order > static_cast<std::size_t>(r))
      for (const auto& d : table)
        if (d != 0) throw InvariantError("non-polynomial data");
  }
  Rational result = leading;
  for (int k = 2; k <= r; ++k) result *= k;
  if (!is_integral(result)) throw InvariantError("non-integral degree from Hilbert counts");
  return numerator(result);
}

Integer degree_via_hilbert(const StratPoset& p, const std::vector<std::int64_t>& ms) {
  return degree_from_counts(p.tau().length(), ms, hilbert_counts(p, ms));
}

Integer degree_via_hilbert(const StratPoset& p) {
  std::vector<std::int64_t> ms;
  for (std::int64_t m = 0; m <= p.tau().length() + 1; ++m) ms.push_back(m);
  return degree_via_hilbert(p, ms);
}

}  // namespace seshadri
