#include "coverdepth/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph_ideals.hpp"

namespace coverdepth {

namespace {

bool face_order(VertexSet a, VertexSet b) {
  return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticError("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("integer overflow in Smith normal form");
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int ground_size,
                                                 const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> faces;
  for (VertexSet f : facets) {
    // Enumerate all submasks of f, including f and 0.
    VertexSet s = f;
    while (true) {
      faces.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c(ground_size);
  c.faces_ = std::move(faces);
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(int ground_size, std::vector<VertexSet> faces) {
  std::sort(faces.begin(), faces.end(), face_order);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c(ground_size);
  c.faces_ = std::move(faces);
  for (VertexSet f : c.faces_) {
    for (int v : set_members(f)) {
      if (!c.contains(f & ~vertex_bit(v))) throw InputError("face list is not closed under subsets");
    }
  }
  return c;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

std::vector<VertexSet> SimplicialComplex::facets() const {
  std::vector<VertexSet> out;
  for (VertexSet f : faces_) {
    bool maximal = true;
    for (int v = 0; v < ground_ && maximal; ++v) {
      if (!set_contains(f, v) && contains(f | vertex_bit(v))) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return set_size(faces_.back()) - 1;
}

SimplicialComplex upper_koszul_complex(const Monomial& a, const MonomialIdeal& ideal) {
  if (a.num_vars() != ideal.num_vars()) throw InputError("ambient mismatch");
  const VertexSet supp = a.support();
  std::vector<VertexSet> faces;
  VertexSet w = supp;
  while (true) {
    if (ideal.contains(a / Monomial::from_set(a.num_vars(), w))) faces.push_back(w);
    if (w == 0) break;
    w = (w - 1) & supp;
  }
  // Membership is monotone under division, so the list is subset-closed.
  return SimplicialComplex::from_faces(static_cast<int>(a.num_vars()), std::move(faces));
}

SimplicialComplex independence_complex(const Graph& g, VertexSet within) {
  std::vector<VertexSet> faces;
  auto rec = [&](auto&& self, VertexSet chosen, VertexSet candidates) -> void {
    faces.push_back(chosen);
    for (int v : set_members(candidates)) {
      const VertexSet later = candidates & ~(vertex_bit(v + 1) - 1);
      self(self, chosen | vertex_bit(v), later & ~g.neighbors(v));
    }
  };
  rec(rec, 0, within);
  return SimplicialComplex::from_faces(g.num_vertices(), std::move(faces));
}

std::vector<std::int64_t> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<std::int64_t> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
        if (m[i][t] != 0) {
          std::swap(m[i], m[t]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide the whole trailing block for a true normal form.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] = checked_add(m[t][j], m[bad][j]);
    }
    out.push_back(std::llabs(m[t][t]));
  }
  return out;
}

long long rank_mod_prime(const IntMatrix& input, std::int64_t prime) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input.front().size();
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((input[i][j] % prime) + prime) % prime;
  auto inverse = [prime](std::int64_t a) {
    std::int64_t result = 1, base = a, e = prime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % prime;
      base = base * base % prime;
      e >>= 1;
    }
    return result;
  };
  long long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % prime;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % prime + prime) % prime;
    }
    ++r;
    ++rank;
  }
  return rank;
}

HomologyRanks reduced_homology(const SimplicialComplex& c, Field field, std::int64_t prime) {
  HomologyRanks out;
  if (c.is_void()) return out;
  const int top = c.dimension();
  // by_dim[d + 1] lists faces of dimension d, d >= -1.
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top + 2));
  for (VertexSet f : c.faces()) by_dim[set_size(f)].push_back(f);

  // rank_of[d + 1] = rank of the boundary map C_d -> C_{d-1}; zero for d = -1.
  std::vector<long long> rank_of(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& lower = by_dim[d];
    const auto& upper = by_dim[d + 1];
    std::unordered_map<VertexSet, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
    IntMatrix boundary(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      int pos = 0;
      for (int v : set_members(upper[j])) {
        boundary[row_of.at(upper[j] & ~vertex_bit(v))][j] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    if (field == Field::Prime) {
      rank_of[d + 1] = rank_mod_prime(boundary, prime);
    } else {
      const auto inv = smith_invariants(std::move(boundary));
      rank_of[d + 1] = static_cast<long long>(inv.size());
      for (auto x : inv)
        if (x != 1) out.torsion = true;
    }
  }
  out.ranks.resize(static_cast<std::size_t>(top + 2));
  for (int d = -1; d <= top; ++d) {
    const auto dim = static_cast<long long>(by_dim[d + 1].size());
    out.ranks[d + 1] = dim - rank_of[d + 1] - rank_of[d + 2];
  }
  return out;
}

long long BettiTable::rank(int i, const Monomial& a) const {
  auto key = Key{i, std::vector<Exponent>(a.exponents().begin(), a.exponents().end())};
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::quotient_rank(int i, const Monomial& a) const {
  if (i == 0) return a.is_one() ? 1 : 0;
  return rank(i - 1, a);
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> out;
  for (const auto& [key, r] : entries_) {
    if (static_cast<int>(out.size()) <= key.first) out.resize(static_cast<std::size_t>(key.first + 1), 0);
    out[key.first] += r;
  }
  return out;
}

std::map<std::pair<int, int>, long long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, r] : entries_) {
    int deg = 0;
    for (Exponent e : key.second) deg += e;
    out[{key.first, deg}] += r;
  }
  return out;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, r] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = -1;
  for (const auto& [key, r] : entries_) {
    int deg = 0;
    for (Exponent e : key.second) deg += e;
    reg = std::max(reg, deg - key.first);
  }
  return reg;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw DomainError("Betti table is only defined here for proper nonzero ideals");
  }
  const std::size_t n = ideal.num_vars();
  const Monomial bound = ideal.lcm_of_generators();
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box *= static_cast<std::uint64_t>(bound[i]) + 1;
    if (box > options.max_box) {
      throw ResourceError("multidegree box exceeds the cap of " + std::to_string(options.max_box));
    }
  }
  std::map<BettiTable::Key, long long> entries;
  bool torsion = false;
  Monomial a(n);
  for (std::uint64_t step = 0; step < box; ++step) {
    // Only points of the lcm lattice can carry Betti numbers.
    Monomial span(n);
    bool any = false;
    for (const Monomial& g : ideal.generators()) {
      if (g.divides(a)) {
        span = lcm(span, g);
        any = true;
      }
    }
    if (any && span == a) {
      const HomologyRanks h =
          reduced_homology(upper_koszul_complex(a, ideal), options.field, options.prime);
      torsion = torsion || h.torsion;
      for (std::size_t idx = 0; idx < h.ranks.size(); ++idx) {
        if (h.ranks[idx] == 0) continue;
        const int i = static_cast<int>(idx);  // degree d = idx - 1, so i = d + 1
        entries[{i, std::vector<Exponent>(a.exponents().begin(), a.exponents().end())}] = h.ranks[idx];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] < bound[i]) {
        a.set(i, a[i] + 1U);
        break;
      }
      a.set(i, 0);
    }
  }
  return BettiTable(n, options.field, std::move(entries), torsion);
}

HomologicalInvariants invariants_from_table(const BettiTable& t) {
  HomologicalInvariants out;
  out.pd_ideal = t.projective_dimension();
  out.pd_quotient = out.pd_ideal + 1;
  out.depth_quotient = static_cast<int>(t.num_vars()) - out.pd_quotient;
  out.depth_ideal = out.depth_quotient + 1;
  out.reg_ideal = t.regularity();
  out.reg_quotient = out.reg_ideal - 1;
  return out;
}

HomologicalInvariants homological_invariants(const MonomialIdeal& ideal,
                                             const BettiOptions& options) {
  return invariants_from_table(betti_table(ideal, options));
}

int hochster_reg_edge_ideal(const Graph& g, Field field) {
  if (g.num_edges() == 0) throw DomainError("regularity oracle needs at least one edge");
  const VertexSet all = g.all_vertices();
  int reg = 0;
  VertexSet sigma = all;
  while (true) {
    const HomologyRanks h = reduced_homology(independence_complex(g, sigma), field);
    // beta_{i,sigma}(S/I) = rank H~_{|sigma|-i-1}, so j - i = d + 1.
    for (std::size_t idx = 0; idx < h.ranks.size(); ++idx)
      if (h.ranks[idx] != 0) reg = std::max(reg, static_cast<int>(idx));
    if (sigma == 0) break;
    sigma = (sigma - 1) & all;
  }
  return reg;
}

std::vector<std::optional<int>> depth_power_profile(const Graph& g, int k_max,
                                                    const BettiOptions& options) {
  if (g.num_edges() == 0) throw DomainError("depth profile needs at least one edge");
  if (!is_bipartite(g)) throw DomainError("depth profile is defined for bipartite graphs");
  const MonomialIdeal j = cover_ideal(g);
  std::vector<std::optional<int>> out;
  MonomialIdeal jk = MonomialIdeal::unit(j.num_vars());
  for (int k = 1; k <= k_max; ++k) {
    jk = product(jk, j);
    try {
      out.emplace_back(homological_invariants(jk, options).depth_quotient);
    } catch (const ResourceError&) {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

}  // namespace coverdepth
