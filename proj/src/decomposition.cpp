#include "coverdepth/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph_ideals.hpp"

namespace coverdepth {

const char* to_string(ModuleKind kind) {
  return kind == ModuleKind::Ideal ? "ideal" : "quotient";
}

StanleyDecomposition::StanleyDecomposition(MonomialIdeal ideal, ModuleKind kind, VertexSet ring)
    : ideal_(std::move(ideal)), kind_(kind), ring_(ring) {}

void StanleyDecomposition::add(StanleySpace space, std::string rule) {
  if (space.origin.num_vars() != num_vars()) throw InputError("space ambient mismatch");
  spaces_.push_back(std::move(space));
  provenance_.push_back(std::move(rule));
}

void StanleyDecomposition::append(const StanleyDecomposition& other) {
  for (std::size_t i = 0; i < other.spaces_.size(); ++i) add(other.spaces_[i], other.provenance_[i]);
}

void StanleyDecomposition::set_module(MonomialIdeal ideal, ModuleKind kind, VertexSet ring) {
  ideal_ = std::move(ideal);
  kind_ = kind;
  ring_ = ring;
}

std::optional<int> StanleyDecomposition::sdepth() const {
  if (spaces_.empty()) return std::nullopt;
  int best = set_size(spaces_.front().free);
  for (const auto& s : spaces_) best = std::min(best, s.dimension());
  return best;
}

std::vector<StanleySpace> StanleyDecomposition::sorted_spaces() const {
  auto out = spaces_;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string var_name(int v) { return "x" + std::to_string(v + 1); }

StanleyDecomposition retagged(const StanleyDecomposition& d, const std::string& step) {
  StanleyDecomposition out(d.ideal(), d.kind(), d.ring());
  for (std::size_t i = 0; i < d.spaces().size(); ++i) out.add(d.spaces()[i], d.provenance()[i] + " < " + step);
  return out;
}

void require_in_ring(const Monomial& m, VertexSet ring) {
  if ((m.support() & ~ring) != 0) throw InputError("monomial " + to_string(m) + " leaves the ring");
}

/// Spaces of `d` with every origin multiplied by m; module left as in `d`.
StanleyDecomposition shifted(const StanleyDecomposition& d, const Monomial& m) {
  StanleyDecomposition out(d.ideal(), d.kind(), d.ring());
  for (std::size_t i = 0; i < d.spaces().size(); ++i)
    out.add({d.spaces()[i].origin * m, d.spaces()[i].free}, d.provenance()[i]);
  return out;
}

}  // namespace

StanleyDecomposition extend_free_variables(const StanleyDecomposition& d, VertexSet extra) {
  if ((extra & d.ring()) != 0) throw InputError("added variables overlap the ring");
  if (extra != 0 && 63 - std::countl_zero(extra) >= static_cast<int>(d.num_vars()))
    throw InputError("added variable outside the ambient");
  StanleyDecomposition out(d.ideal(), d.kind(), d.ring() | extra);
  for (std::size_t i = 0; i < d.spaces().size(); ++i)
    out.add({d.spaces()[i].origin, d.spaces()[i].free | extra}, d.provenance()[i]);
  return out;
}

StanleyDecomposition multiply_ideal_decomposition(const StanleyDecomposition& d, const Monomial& m) {
  if (d.kind() != ModuleKind::Ideal) throw DomainError("ideal multiplication needs an ideal-mode decomposition");
  require_in_ring(m, d.ring());
  StanleyDecomposition out = shifted(d, m);
  out.set_module(multiply(d.ideal(), m), ModuleKind::Ideal, d.ring());
  return out;
}

StanleyDecomposition principal_complement_decomposition(const Monomial& u, VertexSet ring) {
  require_in_ring(u, ring);
  const std::size_t n = u.num_vars();
  StanleyDecomposition out(MonomialIdeal::principal(u), ModuleKind::Quotient, ring);
  Monomial prefix(n);
  for (int i : set_members(u.support())) {
    for (std::uint32_t j = 0; j < u[i]; ++j) {
      Monomial origin = prefix;
      origin.set(static_cast<std::size_t>(i), j);
      out.add({origin, ring & ~vertex_bit(i)}, "principal-complement");
    }
    prefix.set(static_cast<std::size_t>(i), u[i]);
  }
  return out;
}

StanleyDecomposition multiply_quotient_decomposition(const StanleyDecomposition& d,
                                                     const Monomial& m) {
  if (d.kind() != ModuleKind::Quotient) throw DomainError("quotient multiplication needs a quotient-mode decomposition");
  require_in_ring(m, d.ring());
  StanleyDecomposition out = principal_complement_decomposition(m, d.ring());
  out.append(shifted(d, m));
  out.set_module(multiply(d.ideal(), m), ModuleKind::Quotient, d.ring());
  return out;
}

StanleyDecomposition colon_transform(const StanleyDecomposition& d, int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= d.num_vars() || !set_contains(d.ring(), v))
    throw InputError("colon variable must belong to the ring");
  const Monomial xv = Monomial::variable(d.num_vars(), v);
  StanleyDecomposition out(colon(d.ideal(), xv), d.kind(), d.ring());
  for (std::size_t i = 0; i < d.spaces().size(); ++i) {
    const StanleySpace& s = d.spaces()[i];
    if (s.origin[v] > 0) {
      out.add({s.origin / xv, s.free}, d.provenance()[i] + " < colon(" + var_name(v) + ")");
    } else if (set_contains(s.free, v)) {
      out.add(s, d.provenance()[i]);
    }
  }
  return out;
}

namespace {

// `g` keeps the ambient vertex indexing; removed vertices are isolated and
// lie outside `ring`. The result decomposes J(g) restricted to K[ring].
StanleyDecomposition cover_rec(const Graph& g, VertexSet ring, ModuleKind kind) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto edges = g.edges();
  StanleyDecomposition out(cover_ideal(g), kind, ring);
  if (edges.empty()) {
    if (kind == ModuleKind::Ideal) out.add({Monomial::one(n), ring}, "unit");
    return out;
  }
  if (edges.size() == 1) {
    const auto [x, y] = edges.front();
    if (kind == ModuleKind::Ideal) {
      out.add({Monomial::variable(n, x), ring}, "edge-base");
      out.add({Monomial::variable(n, y), ring & ~vertex_bit(x)}, "edge-base");
    } else {
      out.add({Monomial::one(n), ring & ~vertex_bit(x) & ~vertex_bit(y)}, "edge-base");
    }
    return out;
  }

  const int x1 = std::countr_zero(g.non_isolated());
  const VertexSet nbrs = g.neighbors(x1);
  const VertexSet rest_ring = ring & ~vertex_bit(x1);
  const Monomial u = vertex_product(n, nbrs);

  // Monomials free of x1: u * J(G \ N[x1]) over K[ring \ x1].
  StanleyDecomposition inner =
      extend_free_variables(cover_rec(g.without_vertices(nbrs | vertex_bit(x1)), rest_ring & ~nbrs, kind), nbrs);
  StanleyDecomposition free_part = kind == ModuleKind::Ideal ? multiply_ideal_decomposition(inner, u)
                                                             : multiply_quotient_decomposition(inner, u);
  out.append(retagged(free_part, "nbhd(" + var_name(x1) + ")"));

  // Monomials divisible by x1: x1 * (J : x1) = x1 * J(G \ x1) S.
  StanleyDecomposition colon_part =
      extend_free_variables(cover_rec(g.without_vertices(vertex_bit(x1)), rest_ring, kind), vertex_bit(x1));
  out.append(retagged(shifted(colon_part, Monomial::variable(n, x1)), "shift(" + var_name(x1) + ")"));
  return out;
}

StanleyDecomposition power_rec(const Graph& g, VertexSet ring, int k, ModuleKind kind) {
  if (k == 1) return cover_rec(g, ring, kind);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const MonomialIdeal jk = power(cover_ideal(g), k);
  if (g.num_edges() == 0) {
    StanleyDecomposition out(jk, kind, ring);
    if (kind == ModuleKind::Ideal) out.add({Monomial::one(n), ring}, "unit");
    return out;
  }
  const auto parts = bipartition(g);
  if (!parts) throw DomainError("power construction needs a bipartite graph");
  const std::vector<int> first = set_members(parts->first & g.non_isolated());

  // Colon chain: J'_0 = J^k, J'_i = (J'_{i-1} : x_i), and J'_t = J^(k-1).
  StanleyDecomposition tail = retagged(power_rec(g, ring, k - 1, kind), "prev-power");
  for (std::size_t idx = first.size(); idx-- > 0;) {
    const int xi = first[idx];
    const VertexSet nbrs = g.neighbors(xi);
    const VertexSet slice_ring = ring & ~vertex_bit(xi);
    const Monomial ui_k = vertex_product(n, nbrs).pow(static_cast<std::uint32_t>(k));

    // J^k ∩ S_i = u_i^k J(G \ N[x_i])^k S_i, then colon by x_1 .. x_{i-1}.
    StanleyDecomposition slice = extend_free_variables(
        power_rec(g.without_vertices(nbrs | vertex_bit(xi)), slice_ring & ~nbrs, k, kind), nbrs);
    slice = kind == ModuleKind::Ideal ? multiply_ideal_decomposition(slice, ui_k)
                                      : multiply_quotient_decomposition(slice, ui_k);
    for (std::size_t p = 0; p < idx; ++p) slice = colon_transform(slice, first[p]);

    Monomial prefix = Monomial::one(n);
    for (std::size_t p = 0; p < idx; ++p) prefix = prefix * Monomial::variable(n, first[p]);
    StanleyDecomposition next(colon(jk, prefix), kind, ring);
    next.append(retagged(slice, "slice(" + var_name(xi) + ")"));
    next.append(retagged(shifted(tail, Monomial::variable(n, xi)), "shift(" + var_name(xi) + ")"));
    tail = std::move(next);
  }
  return tail;
}

}  // namespace

StanleyDecomposition construct_cover(const Graph& g, ModuleKind kind) {
  if (g.num_edges() == 0) throw DomainError("cover decomposition needs at least one edge");
  return cover_rec(g, g.all_vertices(), kind);
}

StanleyDecomposition construct_cover_power(const Graph& g, int k, ModuleKind kind) {
  if (k < 1) throw InputError("power must be positive");
  if (g.num_edges() == 0) throw DomainError("cover decomposition needs at least one edge");
  if (!is_bipartite(g)) throw DomainError("power construction needs a bipartite graph");
  return power_rec(g, g.all_vertices(), k, kind);
}

namespace {

std::string describe(const StanleySpace& s) {
  std::ostringstream os;
  os << to_string(s.origin) << "*K[";
  bool first = true;
  for (int v : set_members(s.free)) {
    os << (first ? "" : ",") << var_name(v);
    first = false;
  }
  os << ']';
  return os.str();
}

bool space_contains(const StanleySpace& s, std::span<const Exponent> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (set_contains(s.free, static_cast<int>(i))) {
      if (m[i] < s.origin[i]) return false;
    } else if (m[i] != s.origin[i]) {
      return false;
    }
  }
  return true;
}

bool spaces_overlap(const StanleySpace& a, const StanleySpace& b) {
  for (std::size_t i = 0; i < a.origin.num_vars(); ++i) {
    const bool fa = set_contains(a.free, static_cast<int>(i));
    const bool fb = set_contains(b.free, static_cast<int>(i));
    if (fa && fb) continue;
    if (fa && b.origin[i] < a.origin[i]) return false;
    if (fb && a.origin[i] < b.origin[i]) return false;
    if (!fa && !fb && a.origin[i] != b.origin[i]) return false;
  }
  return true;
}

}  // namespace

DecompositionCheck verify_decomposition(const StanleyDecomposition& d, std::uint64_t max_box) {
  const std::size_t n = d.num_vars();
  const VertexSet ring = d.ring();
  const MonomialIdeal& ideal = d.ideal();
  auto fail = [](std::string msg) { return DecompositionCheck{false, std::move(msg)}; };
  auto in_module = [&](const Monomial& m) {
    return ideal.contains(m) == (d.kind() == ModuleKind::Ideal);
  };

  if ((ideal.support() & ~ring) != 0) return fail("ideal uses variables outside the ring");
  for (const auto& s : d.spaces()) {
    if ((s.free & ~ring) != 0 || (s.origin.support() & ~ring) != 0)
      return fail("space " + describe(s) + " leaves the ring");
  }

  // Thresholds: every generator and origin exponent at coordinate i is < B_i,
  // so clamping a coordinate at B_i decides every predicate.
  std::vector<std::uint32_t> cap(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) cap[i] = std::max<std::uint32_t>(cap[i], g[i]);
  for (const auto& s : d.spaces())
    for (std::size_t i = 0; i < n; ++i) cap[i] = std::max<std::uint32_t>(cap[i], s.origin[i]);
  for (std::size_t i = 0; i < n; ++i) cap[i] = set_contains(ring, static_cast<int>(i)) ? cap[i] + 1 : 0;

  // (a) containment
  for (const auto& s : d.spaces()) {
    Monomial corner = s.origin;
    for (int v : set_members(s.free)) corner.set(static_cast<std::size_t>(v), cap[v]);
    if (d.kind() == ModuleKind::Ideal ? !ideal.contains(s.origin) : ideal.contains(corner))
      return fail("space " + describe(s) + " is not contained in the module");
  }
  // (b) disjointness
  for (std::size_t a = 0; a < d.spaces().size(); ++a)
    for (std::size_t b = a + 1; b < d.spaces().size(); ++b)
      if (spaces_overlap(d.spaces()[a], d.spaces()[b]))
        return fail("spaces " + describe(d.spaces()[a]) + " and " + describe(d.spaces()[b]) + " both contain " +
                    to_string(lcm(d.spaces()[a].origin, d.spaces()[b].origin)));

  // (c) coverage
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box *= cap[i] + 1ULL;
    if (box > max_box) throw ResourceError("verification box exceeds the cap");
  }
  Monomial m(n);
  for (std::uint64_t step = 0; step < box; ++step) {
    int hits = 0;
    for (const auto& s : d.spaces())
      if (space_contains(s, m.exponents())) ++hits;
    const bool member = in_module(m);
    if (member && hits != 1)
      return fail("monomial " + to_string(m) + " is covered " + std::to_string(hits) + " times");
    if (!member && hits != 0) return fail("monomial " + to_string(m) + " is covered but not in the module");
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < cap[i]) {
        m.set(i, m[i] + 1U);
        break;
      }
      m.set(i, 0);
    }
  }
  return {};
}

}  // namespace coverdepth
