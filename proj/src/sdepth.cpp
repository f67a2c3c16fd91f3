#include "coverdepth/sdepth.hpp"

#include <algorithm>
#include <unordered_set>

#include "coverdepth/errors.hpp"

namespace coverdepth {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal& ideal, ModuleKind kind,
                                         std::uint64_t max_box)
    : ideal_(ideal), kind_(kind), bound_(ideal.lcm_of_generators()) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("characteristic poset needs a proper nonzero ideal");
  const std::size_t n = bound_.num_vars();
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    box *= bound_[i] + 1ULL;
    if (box > max_box) throw ResourceError("characteristic poset box exceeds the cap");
  }
  Monomial a(n);
  for (std::uint64_t step = 0; step < box; ++step) {
    if (ideal.contains(a) == (kind == ModuleKind::Ideal)) elements_.push_back(a);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] < bound_[i]) {
        a.set(i, a[i] + 1U);
        break;
      }
      a.set(i, 0);
    }
  }
  std::sort(elements_.begin(), elements_.end(), [](const Monomial& x, const Monomial& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  lookup_.assign(box, -1);
  rho_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    lookup_[box_index(elements_[i])] = static_cast<std::int32_t>(i);
    rho_.push_back(rho(elements_[i]));
  }
}

int CharacteristicPoset::rho(const Monomial& a) const {
  int r = 0;
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] == bound_[i]) ++r;
  return r;
}

std::uint64_t CharacteristicPoset::box_index(const Monomial& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = a.num_vars(); i-- > 0;) idx = idx * (bound_[i] + 1ULL) + a[i];
  return idx;
}

std::optional<std::size_t> CharacteristicPoset::index_of(const Monomial& a) const {
  if (a.num_vars() != num_vars()) return std::nullopt;
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] > bound_[i]) return std::nullopt;
  const std::int32_t idx = lookup_[box_index(a)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

namespace {

/// Calls `fn` on every point of the box [bottom, top].
template <class Fn>
bool for_each_in_box(const Monomial& bottom, const Monomial& top, Fn&& fn) {
  Monomial m = bottom;
  const std::size_t n = m.num_vars();
  while (true) {
    if (!fn(m)) return false;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (m[i] < top[i]) {
        m.set(i, m[i] + 1U);
        break;
      }
      m.set(i, bottom[i]);
    }
    if (i == n) return true;
  }
}

}  // namespace

PartitionCheck check_partition(const CharacteristicPoset& poset, const IntervalPartition& p, int k) {
  std::vector<int> hits(poset.size(), 0);
  for (const Interval& iv : p.intervals) {
    if (!iv.bottom.divides(iv.top)) return {false, "interval bottom is not below its top"};
    if (!poset.index_of(iv.bottom) || !poset.index_of(iv.top))
      return {false, "interval endpoint " + to_string(iv.bottom) + " or " + to_string(iv.top) + " is outside the poset"};
    if (poset.rho(iv.top) < k) return {false, "interval top " + to_string(iv.top) + " has rho below the target"};
    const bool inside = for_each_in_box(iv.bottom, iv.top, [&](const Monomial& m) {
      auto idx = poset.index_of(m);
      if (!idx) return false;
      ++hits[*idx];
      return true;
    });
    if (!inside) return {false, "interval leaves the poset"};
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] != 1) {
      return {false, "element " + to_string(poset.elements()[i]) + " covered " + std::to_string(hits[i]) + " times"};
    }
  }
  return {};
}

StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& p) {
  const std::size_t n = poset.num_vars();
  const VertexSet ring = n == 64 ? ~VertexSet{0} : vertex_bit(static_cast<int>(n)) - 1;
  StanleyDecomposition out(poset.ideal(), poset.kind(), ring);
  for (const Interval& iv : p.intervals) {
    VertexSet z = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (iv.top[i] == poset.bound()[i]) z |= vertex_bit(static_cast<int>(i));
    // Origins run over [bottom, top] with the Z-coordinates pinned at bottom.
    Monomial upper = iv.top;
    for (int i : set_members(z)) upper.set(static_cast<std::size_t>(i), iv.bottom[i]);
    for_each_in_box(iv.bottom, upper, [&](const Monomial& e) {
      out.add({e, z}, "interval-partition");
      return true;
    });
  }
  return out;
}

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : v) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct BudgetExhausted {};

// Backtracking over the lowest uncovered element. Any valid partition can be
// refined so that every interval [a, b] has b_i in {a_i, g_i} and either
// b = a with rho(a) >= k, or rho(b) = k exactly; the lowest uncovered
// element is always the bottom of its interval.
class DecisionSearch {
 public:
  DecisionSearch(const CharacteristicPoset& poset, int k, std::uint64_t budget)
      : poset_(poset), k_(k), budget_(budget), covered_((poset.size() + 63) / 64, 0) {}

  bool run() { return extend(0); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Interval>& chosen() const { return chosen_; }

 private:
  static constexpr std::size_t kMemoLimit = 2'000'000;

  bool is_covered(std::size_t i) const { return (covered_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { covered_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool extend(std::size_t start) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    std::size_t idx = start;
    while (idx < poset_.size() && is_covered(idx)) ++idx;
    if (idx == poset_.size()) return true;
    if (failed_.contains(covered_)) return false;

    const Monomial& a = poset_.elements()[idx];
    const Monomial& g = poset_.bound();
    const int need = std::max(0, k_ - poset_.rho(idx));
    std::vector<int> slack;
    for (std::size_t i = 0; i < a.num_vars(); ++i)
      if (a[i] < g[i]) slack.push_back(static_cast<int>(i));

    if (need <= static_cast<int>(slack.size())) {
      // Subsets T of the slack coordinates with |T| = need, lexicographic.
      std::vector<int> pick(static_cast<std::size_t>(need));
      for (int i = 0; i < need; ++i) pick[i] = i;
      while (true) {
        Monomial top = a;
        for (int p : pick) top.set(static_cast<std::size_t>(slack[p]), g[slack[p]]);
        if (try_interval(a, top, idx)) return true;
        int pos = need - 1;
        while (pos >= 0 && pick[pos] == static_cast<int>(slack.size()) - need + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < need; ++q) pick[q] = pick[q - 1] + 1;
      }
    }
    if (failed_.size() < kMemoLimit) failed_.insert(covered_);
    return false;
  }

  bool try_interval(const Monomial& bottom, const Monomial& top, std::size_t idx) {
    // Quotient posets are down-sets: a top inside the poset keeps the box inside.
    if (!poset_.index_of(top)) return false;
    std::vector<std::size_t> members;
    const bool free = for_each_in_box(bottom, top, [&](const Monomial& m) {
      const auto i = poset_.index_of(m);
      if (!i || is_covered(*i)) return false;
      members.push_back(*i);
      return true;
    });
    if (!free) return false;
    for (auto i : members) flip(i);
    chosen_.push_back({bottom, top});
    if (extend(idx + 1)) return true;
    chosen_.pop_back();
    for (auto i : members) flip(i);
    return false;
  }

  const CharacteristicPoset& poset_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> covered_;
  std::vector<Interval> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
};

}  // namespace

DecisionResult sdepth_decision(const CharacteristicPoset& poset, int k, std::uint64_t budget) {
  DecisionResult out;
  DecisionSearch search(poset, k, budget);
  try {
    const bool found = search.run();
    out.answer = found ? Decision::Yes : Decision::No;
    if (found) out.witness = IntervalPartition{search.chosen()};
  } catch (const BudgetExhausted&) {
    out.answer = Decision::BudgetExceeded;
  }
  out.nodes = search.nodes();
  return out;
}

DecisionResult sdepth_decision(const MonomialIdeal& ideal, ModuleKind kind, int k,
                               std::uint64_t budget) {
  return sdepth_decision(CharacteristicPoset(ideal, kind), k, budget);
}

SdepthResult sdepth_exact(const MonomialIdeal& ideal, ModuleKind kind, std::uint64_t budget,
                          int known_lower) {
  const CharacteristicPoset poset(ideal, kind);
  const int n = static_cast<int>(ideal.num_vars());
  SdepthResult out;
  out.lower = std::max(0, known_lower);
  out.upper = n;
  if (out.lower == 0) {
    // k = 0 always succeeds with singletons; run it anyway for a witness.
    auto base = sdepth_decision(poset, 0, budget);
    out.nodes += base.nodes;
    if (base.answer == Decision::Yes) out.witness = std::move(base.witness);
  }
  for (int k = out.lower + 1; k <= n; ++k) {
    auto r = sdepth_decision(poset, k, budget);
    out.nodes += r.nodes;
    if (r.answer == Decision::Yes) {
      // Decisions are monotone, so a yes also settles any indeterminate level below.
      out.lower = k;
      out.witness = std::move(r.witness);
    } else if (r.answer == Decision::No) {
      out.upper = k - 1;
      break;
    } else {
      out.budget_exceeded = true;
    }
  }
  return out;
}

}  // namespace coverdepth
