#include "kchroma/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "kchroma/error.hpp"
#include "parallel.hpp"

namespace kchroma {

namespace {

constexpr std::size_t kRowsPerBlock = 64;

struct BlockResult {
  std::optional<Violation> first;
  std::uint64_t violations = 0;
  std::uint64_t related = 0;
};

unsigned entries_for(const GraphSpec& spec, unsigned r, Property property) {
  return property == Property::johnson_m_proper ? spec.m : r;
}

// Adjacency as 64-bit rows; only used for tiny graphs (<= 60 vertices).
struct SmallGraph {
  std::vector<std::uint64_t> adj;

  explicit SmallGraph(const GraphSpec& spec) {
    spec.validate();
    const auto masks = enumerate_masks(spec.n, spec.k);
    const PairRule rule = PairRule::for_graph(spec);
    adj.assign(masks.size(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        if (rule.related(masks[i], masks[j])) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  std::size_t size() const { return adj.size(); }
  bool edge(std::size_t a, std::size_t b) const { return (adj[a] >> b) & 1; }
};

unsigned greedy_clique(const SmallGraph& g) {
  unsigned best = g.size() ? 1 : 0;
  for (std::size_t start = 0; start < g.size(); ++start) {
    std::uint64_t candidates = g.adj[start];
    unsigned size = 1;
    while (candidates) {
      const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= g.adj[v];
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

class DsaturSearch {
 public:
  DsaturSearch(const SmallGraph& g, unsigned lower, unsigned upper)
      : g_(g), lower_(lower), best_(upper), color_(g.size(), -1), seen_(g.size(), 0) {}

  unsigned run() {
    if (best_ > lower_) search(0, 0);
    return best_;
  }

 private:
  // seen_[v]: bitset of colors present among v's colored neighbours.
  void search(std::size_t colored, unsigned used) {
    if (best_ == lower_) return;
    if (colored == g_.size()) {
      best_ = used;
      return;
    }
    std::size_t pick = g_.size();
    int pick_sat = -1;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(seen_[v]);
      if (sat > pick_sat) {
        pick = v;
        pick_sat = sat;
      }
    }
    const unsigned limit = std::min(used + 1, best_ - 1);
    for (unsigned c = 0; c < limit; ++c) {
      if ((seen_[pick] >> c) & 1) continue;
      assign(pick, static_cast<int>(c));
      search(colored + 1, std::max(used, c + 1));
      unassign(pick);
      if (best_ == lower_) return;
    }
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    saved_.push_back(seen_);
    for (std::uint64_t nb = g_.adj[v]; nb; nb &= nb - 1) {
      seen_[std::countr_zero(nb)] |= std::uint64_t{1} << c;
    }
  }

  void unassign(std::size_t v) {
    color_[v] = -1;
    seen_ = std::move(saved_.back());
    saved_.pop_back();
  }

  const SmallGraph& g_;
  unsigned lower_;
  unsigned best_;
  std::vector<int> color_;
  std::vector<std::uint64_t> seen_;
  std::vector<std::vector<std::uint64_t>> saved_;
};

Element naive_or_fast(const Field& f, std::span<const Element> members, unsigned i) {
  if (members.size() <= 12) return esym_naive(f, members, i);
  return esym_prefix(f, members, i)[i - 1];
}

}  // namespace

std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::square_proper: return "square_proper";
    case Property::injective: return "injective";
    case Property::johnson_m_proper: return "johnson_m_proper";
  }
  return "unknown";
}

Property property_from_string(std::string_view s) {
  if (s == "square" || s == "square_proper") return Property::square_proper;
  if (s == "injective") return Property::injective;
  if (s == "johnson" || s == "johnson_m_proper") return Property::johnson_m_proper;
  throw Error(Errc::invalid_argument, "unknown property '" + std::string(s) + "'");
}

PairRule rule_for_property(const GraphSpec& spec, Property property) {
  switch (property) {
    case Property::square_proper:
      return PairRule::for_graph(GraphSpec::kneser_square(spec.n, spec.k));
    case Property::injective:
      return PairRule::distance2(spec.n, spec.k);
    case Property::johnson_m_proper:
      return PairRule::for_graph(GraphSpec::johnson_power(spec.n, spec.k, spec.m));
  }
  throw Error(Errc::invalid_argument, "unknown property");
}

GraphSpec graph_for_property(unsigned n, unsigned k, Property property, unsigned m) {
  switch (property) {
    case Property::square_proper: return GraphSpec::kneser_square(n, k);
    case Property::injective: return GraphSpec::kneser(n, k);
    case Property::johnson_m_proper: return GraphSpec::johnson_power(n, k, m);
  }
  throw Error(Errc::invalid_argument, "unknown property");
}

VerificationReport verify_table(const GraphSpec& spec, const GroundSet& x, unsigned color_entries,
                                Property property, std::span<const std::uint64_t> masks,
                                std::span<const std::uint64_t> colors, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  if (masks.size() != colors.size()) {
    throw Error(Errc::invalid_argument, "mask and color arrays differ in length");
  }
  if (masks.size() > kMaxVertices) throw Error(Errc::too_large, "more than 200000 vertices");
  const PairRule rule = rule_for_property(spec, property);

  const std::size_t count = masks.size();
  std::vector<BlockResult> blocks((count + kRowsPerBlock - 1) / kRowsPerBlock);
  detail::for_each_block(count, kRowsPerBlock, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    BlockResult& out = blocks[b];
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t a = masks[i];
      const std::uint64_t c = colors[i];
      for (std::size_t j = i + 1; j < count; ++j) {
        const auto inter = static_cast<unsigned>(std::popcount(a & masks[j]));
        if (!rule.related(inter)) continue;
        ++out.related;
        if (colors[j] != c) continue;
        ++out.violations;
        if (!out.first) out.first = Violation{i, j, a, masks[j], c, colors[j], inter};
      }
    }
  });

  VerificationReport rep;
  rep.spec = spec;
  rep.ground = x;
  rep.property = property;
  rep.color_entries = color_entries;
  rep.pairs_checked = count < 2 ? 0 : std::uint64_t{count} * (count - 1) / 2;
  for (const auto& b : blocks) {
    rep.related_pairs += b.related;
    rep.violating_pairs += b.violations;
    if (!rep.violation && b.first) rep.violation = b.first;
  }
  rep.passed = rep.violating_pairs == 0;
  rep.distinct_colors = count_distinct(colors);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport verify_coloring(const GraphSpec& spec, const GroundSet& x, unsigned r,
                                   Property property, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  if (spec.n != x.size()) {
    throw Error(Errc::invalid_argument, "graph has n=" + std::to_string(spec.n) +
                                            " but the ground set has " + std::to_string(x.size()) +
                                            " elements");
  }
  if (property == Property::johnson_m_proper && spec.variant != GraphVariant::johnson_power) {
    throw Error(Errc::invalid_argument, "johnson_m_proper needs a johnson_power graph");
  }
  if (binomial(spec.n, spec.k) > kMaxVertices) throw Error(Errc::too_large, "more than 200000 vertices");
  const unsigned entries = entries_for(spec, r, property);
  const ColoringTable table = color_all(x, spec.k, entries, workers);
  auto rep = verify_table(spec, x, entries, property, table.masks, table.colors, workers);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

bool recheck_violation(const VerificationReport& report, std::span<const std::uint64_t> table_colors) {
  if (report.passed || !report.violation) {
    throw Error(Errc::invalid_argument, "recheck needs a failed report with a recorded violation");
  }
  const Violation& v = *report.violation;
  const auto& x = report.ground;
  if (v.first_mask == v.second_mask || report.color_entries == 0) return false;
  for (auto mask : {v.first_mask, v.second_mask}) {
    if (x.size() < 64 && (mask >> x.size())) return false;
    if (static_cast<unsigned>(std::popcount(mask)) != report.spec.k) return false;
  }

  auto recompute = [&](std::uint64_t mask) {
    std::vector<Element> members;
    for (std::uint64_t m = mask; m; m &= m - 1) members.push_back(x.elements[std::countr_zero(m)]);
    std::vector<Element> entries(report.color_entries);
    for (unsigned i = 1; i <= report.color_entries; ++i) {
      entries[i - 1] = naive_or_fast(x.field, members, i);
    }
    return ColorVector::from_entries(x.field, std::move(entries)).index;
  };
  std::uint64_t ca = 0, cb = 0;
  if (table_colors.empty()) {
    ca = recompute(v.first_mask);
    cb = recompute(v.second_mask);
  } else {
    if (std::max(v.first, v.second) >= table_colors.size()) return false;
    ca = table_colors[v.first];
    cb = table_colors[v.second];
  }
  if (ca != v.first_color || cb != v.second_color || ca != cb) return false;

  // Predicate from the intersection size, independent of PairRule.
  const int n = static_cast<int>(report.spec.n);
  const int k = static_cast<int>(report.spec.k);
  const int inter = std::popcount(v.first_mask & v.second_mask);
  switch (report.property) {
    case Property::square_proper: return inter == 0 || (inter < k && inter >= 3 * k - n);
    case Property::injective: return inter >= k - (n - 2 * k) && inter <= k - 1;
    case Property::johnson_m_proper:
      return inter >= k - static_cast<int>(report.spec.m) && inter <= k - 1;
  }
  return false;
}

unsigned exact_chromatic(const GraphSpec& spec) {
  spec.validate();
  if (binomial(spec.n, spec.k) > 60) throw Error(Errc::too_large, "exact coloring limited to 60 vertices");
  const SmallGraph g(spec);
  const unsigned lower = greedy_clique(g);
  const unsigned upper = greedy_chromatic(spec);
  return DsaturSearch(g, lower, upper).run();
}

unsigned greedy_chromatic(const GraphSpec& spec, std::span<const std::size_t> order) {
  spec.validate();
  if (binomial(spec.n, spec.k) > 20'000) throw Error(Errc::too_large, "greedy coloring limited to 20000 vertices");
  const auto masks = enumerate_masks(spec.n, spec.k);
  const PairRule rule = PairRule::for_graph(spec);

  std::vector<std::size_t> sequence(order.begin(), order.end());
  if (sequence.empty()) {
    sequence.resize(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) sequence[i] = i;
  }
  {
    std::vector<std::size_t> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != masks.size()) {
        throw Error(Errc::invalid_argument, "order is not a permutation of the vertices");
      }
    }
  }

  std::vector<int> color(masks.size(), -1);
  std::vector<char> taken;
  unsigned used = 0;
  for (auto v : sequence) {
    taken.assign(used + 1, 0);
    for (std::size_t u = 0; u < masks.size(); ++u) {
      if (color[u] >= 0 && u != v && rule.related(masks[u], masks[v])) taken[color[u]] = 1;
    }
    const auto c = static_cast<unsigned>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
    color[v] = static_cast<int>(c);
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace kchroma
