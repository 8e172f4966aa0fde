// Copyright 2026 The revgreedy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revgreedy/solvers.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <tuple>

#include "revgreedy/errors.hpp"
#include "revgreedy/kernels.hpp"
#include "revgreedy/random.hpp"

namespace revgreedy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_k(const MetricSpace& space, std::size_t k, const char* who) {
  if (k < 1 || k > space.size()) {
    throw InputError(std::string(who) + ": k must be in [1, " +
                     std::to_string(space.size()) + "], got " +
                     std::to_string(k));
  }
}

// Picks among `candidates` (ascending ids) whose value equals the minimum.
// Random policies always consume exactly one draw per call.
class TieBreaker {
 public:
  TieBreaker(const TiePolicy& tie, std::size_t n)
      : kind_(tie.kind()), rng_(tie.seed()) {
    if (kind_ != TiePolicy::Kind::kSeededRandom) ranks_ = tie.ranks(n);
  }

  bool random() const { return kind_ == TiePolicy::Kind::kSeededRandom; }
  std::uint64_t rank(PointId id) const { return random() ? id : ranks_[id]; }

  // `minimizers` must be sorted by id.
  PointId choose(const std::vector<PointId>& minimizers) {
    if (random()) return minimizers[uniform_below(rng_, minimizers.size())];
    return *std::min_element(
        minimizers.begin(), minimizers.end(),
        [&](PointId a, PointId b) { return ranks_[a] < ranks_[b]; });
  }

  Rng& rng() { return rng_; }

 private:
  TiePolicy::Kind kind_;
  std::vector<std::uint64_t> ranks_;
  Rng rng_;
};

class ReverseGreedy {
 public:
  ReverseGreedy(const MetricSpace& space, const TiePolicy& tie)
      : space_(space), n_(space.size()), tie_(tie, n_) {}

  GreedyTrace run() {
    GreedyTrace trace;
    trace.direction = Direction::kReverse;
    trace.n = n_;
    trace.k_target = 1;
    init();
    double current = 0.0;
    for (PointId x = 0; x < n_; ++x) current += space_.weight(x) * d1_[x];
    for (std::size_t j = n_; j >= 2; --j) {
      const PointId r = select();
      const double delta = delta_[r];
      trace.steps.push_back({j, r, current, current + delta, delta});
      current += delta;
      remove(r);
    }
    for (PointId f = 0; f < n_; ++f) {
      if (open_[f]) trace.final_set = FacilitySet({f});
    }
    return trace;
  }

 private:
  struct Entry {
    double delta;
    std::uint64_t rank;
    PointId id;
    std::uint32_t version;
  };
  // Min-heap on (delta, rank).
  static bool later(const Entry& a, const Entry& b) {
    return std::tie(a.delta, a.rank) > std::tie(b.delta, b.rank);
  }

  void init() {
    open_.assign(n_, 1);
    open_count_ = n_;
    nearest_.resize(n_);
    second_.assign(n_, kNone);
    d1_.resize(n_);
    d2_.assign(n_, kInf);
    served_.assign(n_, {});
    backed_.assign(n_, {});
    delta_.assign(n_, 0.0);
    version_.assign(n_, 0);
    use_order_ = n_ <= kMaxOrderedClients;
    if (use_order_) build_order();
    const std::vector<Assignment> a = kernels::nearest_two(space_, open_);
    for (PointId x = 0; x < n_; ++x) {
      nearest_[x] = a[x].nearest;
      d1_[x] = a[x].nearest_dist;
      served_[nearest_[x]].push_back(x);
      if (a[x].second) {
        second_[x] = *a[x].second;
        d2_[x] = *a[x].second_dist;
        backed_[second_[x]].push_back(x);
        if (use_order_) {
          const PointId* row = &order_[std::size_t{x} * n_];
          pos2_[x] = static_cast<std::uint32_t>(
              std::find(row, row + n_, second_[x]) - row);
        }
      }
    }
    if (n_ < 2) return;
    for (PointId f = 0; f < n_; ++f) {
      delta_[f] = recompute_delta(f);
      push(f);
    }
  }

  bool stale(const Entry& e) const {
    return !open_[e.id] || e.version != version_[e.id];
  }

  void push(PointId f) {
    heap_.push_back({delta_[f], tie_.rank(f), f, version_[f]});
    std::push_heap(heap_.begin(), heap_.end(), later);
  }

  Entry pop() {
    std::pop_heap(heap_.begin(), heap_.end(), later);
    Entry e = heap_.back();
    heap_.pop_back();
    return e;
  }

  // Sum over the clients of f, in id order, of w * (second - nearest).
  double recompute_delta(PointId f) {
    auto& clients = served_[f];
    std::erase_if(clients, [&](PointId x) { return nearest_[x] != f; });
    std::sort(clients.begin(), clients.end());
    double total = 0.0;
    for (PointId x : clients) total += space_.weight(x) * (d2_[x] - d1_[x]);
    return total;
  }

  PointId select() {
    for (;;) {
      const Entry top = pop();
      if (stale(top)) continue;
      // Revalidate before accepting.
      const double fresh = recompute_delta(top.id);
      if (fresh != top.delta) {
        delta_[top.id] = fresh;
        ++version_[top.id];
        push(top.id);
        continue;
      }
      if (!tie_.random()) return top.id;

      std::vector<Entry> ties{top};
      while (!heap_.empty()) {
        const Entry& next = heap_.front();
        if (stale(next)) {
          pop();
          continue;
        }
        if (next.delta != top.delta) break;
        ties.push_back(pop());
      }
      std::sort(ties.begin(), ties.end(),
                [](const Entry& a, const Entry& b) { return a.id < b.id; });
      std::vector<PointId> ids;
      for (const Entry& e : ties) ids.push_back(e.id);
      const PointId chosen = tie_.choose(ids);
      for (const Entry& e : ties) {
        if (e.id != chosen) {
          heap_.push_back(e);
          std::push_heap(heap_.begin(), heap_.end(), later);
        }
      }
      return chosen;
    }
  }

  // Row x lists all ids by (distance from x, id). Facilities only close, so
  // the second-nearest position only moves forward.
  void build_order() {
    order_.resize(n_ * n_);
    pos2_.assign(n_, 0);
    std::vector<std::pair<double, PointId>> row(n_);
    for (PointId x = 0; x < n_; ++x) {
      for (PointId f = 0; f < n_; ++f) row[f] = {space_.at(x, f), f};
      std::sort(row.begin(), row.end());
      for (std::size_t i = 0; i < n_; ++i) order_[x * n_ + i] = row[i].second;
    }
  }

  // Second-nearest open facility of x other than its nearest.
  void rescan_second(PointId x) {
    second_[x] = kNone;
    d2_[x] = kInf;
    if (use_order_) {
      const PointId* row = &order_[std::size_t{x} * n_];
      for (std::uint32_t i = pos2_[x] + 1; i < n_; ++i) {
        const PointId f = row[i];
        if (!open_[f] || f == nearest_[x]) continue;
        pos2_[x] = i;
        second_[x] = f;
        d2_[x] = space_.at(x, f);
        backed_[f].push_back(x);
        return;
      }
      pos2_[x] = static_cast<std::uint32_t>(n_);
      return;
    }
    for (PointId f = 0; f < n_; ++f) {
      if (!open_[f] || f == nearest_[x]) continue;
      const double d = space_.at(x, f);
      if (second_[x] == kNone || d < d2_[x]) {
        second_[x] = f;
        d2_[x] = d;
      }
    }
    if (second_[x] != kNone) backed_[second_[x]].push_back(x);
  }

  void touch(PointId f) {
    if (!touched_mark_[f]) {
      touched_mark_[f] = 1;
      touched_.push_back(f);
    }
  }

  void remove(PointId r) {
    open_[r] = 0;
    --open_count_;
    touched_mark_.assign(n_, 0);
    touched_.clear();
    for (PointId x : served_[r]) {
      if (nearest_[x] != r) continue;
      nearest_[x] = second_[x];
      d1_[x] = d2_[x];
      served_[nearest_[x]].push_back(x);
      rescan_second(x);
      touch(nearest_[x]);
    }
    for (PointId x : backed_[r]) {
      if (second_[x] != r) continue;
      rescan_second(x);
      touch(nearest_[x]);
    }
    served_[r].clear();
    served_[r].shrink_to_fit();
    backed_[r].clear();
    backed_[r].shrink_to_fit();
    if (open_count_ < 2) return;
    for (PointId f : touched_) {
      delta_[f] = recompute_delta(f);
      ++version_[f];
      push(f);
    }
  }

  static constexpr PointId kNone = std::numeric_limits<PointId>::max();
  static constexpr std::size_t kMaxOrderedClients = 4096;

  const MetricSpace& space_;
  const std::size_t n_;
  TieBreaker tie_;
  std::vector<std::uint8_t> open_;
  std::size_t open_count_ = 0;
  std::vector<PointId> nearest_, second_;
  std::vector<double> d1_, d2_;
  // Clients that were, at some point, served (resp. backed up) by f. Entries
  // are filtered lazily against nearest_/second_.
  std::vector<std::vector<PointId>> served_, backed_;
  std::vector<double> delta_;
  std::vector<std::uint32_t> version_;
  std::vector<Entry> heap_;
  std::vector<std::uint8_t> touched_mark_;
  std::vector<PointId> touched_;
  bool use_order_ = false;
  std::vector<PointId> order_;
  std::vector<std::uint32_t> pos2_;
};

double nearest_in(const MetricSpace& space, PointId x,
                  std::span<const std::uint8_t> open, PointId skip) {
  double best = kInf;
  for (PointId f = 0; f < space.size(); ++f) {
    if (open[f] && f != skip) best = std::min(best, space.at(x, f));
  }
  return best;
}

GreedyTrace reference_chain(const MetricSpace& space, const TiePolicy& tie) {
  const std::size_t n = space.size();
  constexpr PointId kNoSkip = std::numeric_limits<PointId>::max();
  TieBreaker breaker(tie, n);
  GreedyTrace trace;
  trace.direction = Direction::kReverse;
  trace.n = n;
  trace.k_target = 1;
  std::vector<std::uint8_t> open(n, 1);
  double current = 0.0;
  for (PointId x = 0; x < n; ++x) {
    current += space.weight(x) * nearest_in(space, x, open, kNoSkip);
  }
  std::vector<double> served(n);
  for (std::size_t j = n; j >= 2; --j) {
    for (PointId x = 0; x < n; ++x) {
      served[x] = nearest_in(space, x, open, kNoSkip);
    }
    double best = kInf;
    std::vector<PointId> minimizers;
    for (PointId r = 0; r < n; ++r) {
      if (!open[r]) continue;
      double delta = 0.0;
      for (PointId x = 0; x < n; ++x) {
        delta += space.weight(x) * (nearest_in(space, x, open, r) - served[x]);
      }
      if (minimizers.empty() || delta < best) {
        best = delta;
        minimizers.assign(1, r);
      } else if (delta == best) {
        minimizers.push_back(r);
      }
    }
    const PointId r = breaker.choose(minimizers);
    trace.steps.push_back({j, r, current, current + best, best});
    current += best;
    open[r] = 0;
  }
  for (PointId f = 0; f < n; ++f) {
    if (open[f]) trace.final_set = FacilitySet({f});
  }
  return trace;
}

}  // namespace

// ---------------------------------------------------------------------------
// TiePolicy

TiePolicy TiePolicy::Priority(std::vector<PointId> order) {
  TiePolicy t(Kind::kPriority);
  t.order_ = std::move(order);
  return t;
}

TiePolicy TiePolicy::SeededRandom(std::uint64_t seed) {
  TiePolicy t(Kind::kSeededRandom);
  t.seed_ = seed;
  return t;
}

TiePolicy TiePolicy::Parse(std::string_view text, const MetricSpace& space) {
  if (text == "lex" || text == "lexicographic") return Lexicographic();
  if (text == "priority") {
    return Priority(std::vector<PointId>(space.tie_priority().begin(),
                                         space.tie_priority().end()));
  }
  if (text.starts_with("random:")) {
    const std::string_view digits = text.substr(7);
    std::uint64_t seed = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        !digits.empty()) {
      return SeededRandom(seed);
    }
  }
  throw InputError("tie policy must be lex, priority or random:SEED, got \"" +
                   std::string(text) + "\"");
}

std::string TiePolicy::to_string() const {
  switch (kind_) {
    case Kind::kLexicographic:
      return "lex";
    case Kind::kPriority:
      return "priority";
    case Kind::kSeededRandom:
      return "random:" + std::to_string(seed_);
  }
  return "";
}

std::vector<std::uint64_t> TiePolicy::ranks(std::size_t n) const {
  std::vector<std::uint64_t> rank(n);
  const std::uint64_t listed = kind_ == Kind::kPriority ? order_.size() : 0;
  for (std::size_t i = 0; i < n; ++i) rank[i] = listed + i;
  if (kind_ == Kind::kPriority) {
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const PointId id = order_[pos];
      if (id >= n || seen[id]++) {
        throw InputError("tie priority entry " + std::to_string(pos) +
                         " is not a distinct valid id");
      }
      rank[id] = pos;
    }
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Traces and solvers

double GreedyTrace::final_cost() const {
  return steps.empty() ? 0.0 : steps.back().cost_after;
}

GreedyTrace truncate_chain(const GreedyTrace& chain, std::size_t k) {
  if (chain.direction != Direction::kReverse) {
    throw InputError("truncate_chain: expected a reverse trace");
  }
  if (k < chain.k_target || k > chain.n) {
    throw InputError("truncate_chain: k out of range");
  }
  GreedyTrace out = chain;
  out.k_target = k;
  out.steps.resize(chain.n - k);
  std::vector<std::uint8_t> open(chain.n, 1);
  for (const TraceStep& s : out.steps) open[s.point] = 0;
  std::vector<PointId> members;
  for (PointId f = 0; f < chain.n; ++f) {
    if (open[f]) members.push_back(f);
  }
  out.final_set = FacilitySet(std::move(members));
  return out;
}

GreedyTrace rgreedy(const MetricSpace& space, std::size_t k,
                    const TiePolicy& tie) {
  require_k(space, k, "rgreedy");
  return truncate_chain(ReverseGreedy(space, tie).run(), k);
}

GreedyTrace rgreedy_reference(const MetricSpace& space, std::size_t k,
                              const TiePolicy& tie) {
  require_k(space, k, "rgreedy_reference");
  return truncate_chain(reference_chain(space, tie), k);
}

GreedyTrace forward_greedy(const MetricSpace& space, std::size_t k,
                           const TiePolicy& tie) {
  require_k(space, k, "forward_greedy");
  const std::size_t n = space.size();
  TieBreaker breaker(tie, n);
  GreedyTrace trace;
  trace.direction = Direction::kForward;
  trace.n = n;
  trace.k_target = k;
  std::vector<double> current(n, kInf);
  std::vector<std::uint8_t> chosen(n, 0);
  std::vector<PointId> members;
  double cost_before = 0.0;
  for (std::size_t step = 1; step <= k; ++step) {
    std::vector<PointId> candidates;
    for (PointId f = 0; f < n; ++f) {
      if (!chosen[f]) candidates.push_back(f);
    }
    const std::vector<double> costs =
        kernels::augmented_costs(space, current, candidates);
    const double best = *std::min_element(costs.begin(), costs.end());
    std::vector<PointId> minimizers;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (costs[i] == best) minimizers.push_back(candidates[i]);
    }
    const PointId f = breaker.choose(minimizers);
    trace.steps.push_back({step, f, cost_before, best, best - cost_before});
    cost_before = best;
    chosen[f] = 1;
    members.push_back(f);
    for (PointId x = 0; x < n; ++x) {
      current[x] = std::min(current[x], space.at(x, f));
    }
  }
  trace.final_set = FacilitySet(std::move(members));
  return trace;
}

double removal_delta(const MetricSpace& space, const FacilitySet& r_set,
                     PointId r) {
  require_members(space, r_set, "removal_delta");
  if (!r_set.contains(r)) {
    throw InputError("removal_delta: point " + std::to_string(r) +
                     " is not an open facility");
  }
  if (r_set.size() < 2) {
    throw DomainError("removal_delta: cannot remove the last facility");
  }
  double total = 0.0;
  for (PointId x = 0; x < space.size(); ++x) {
    double with_r = kInf, without_r = kInf;
    for (PointId f : r_set) {
      const double d = space.at(x, f);
      with_r = std::min(with_r, d);
      if (f != r) without_r = std::min(without_r, d);
    }
    total += space.weight(x) * (without_r - with_r);
  }
  return total;
}

namespace {

template <typename SubsetSearch>
ExactResult exact_impl(const MetricSpace& space, std::size_t k,
                       std::uint64_t budget, SubsetSearch search) {
  require_k(space, k, "exact_kmedian");
  if (k == 1) {
    std::vector<PointId> all(space.size());
    for (PointId i = 0; i < space.size(); ++i) all[i] = i;
    const std::vector<double> none(space.size(), kInf);
    const std::vector<double> costs = kernels::augmented_costs(space, none, all);
    const auto best = std::min_element(costs.begin(), costs.end());
    return {FacilitySet({static_cast<PointId>(best - costs.begin())}), *best};
  }
  const std::uint64_t subsets = kernels::binomial(space.size(), k);
  if (subsets > budget) {
    throw BudgetError("exact k-median: C(" + std::to_string(space.size()) +
                      ", " + std::to_string(k) + ") = " +
                      std::to_string(subsets) + " subsets exceeds the budget " +
                      std::to_string(budget));
  }
  kernels::SubsetOptimum opt = search(space, k);
  return {FacilitySet(std::move(opt.members)), opt.cost};
}

}  // namespace

ExactResult exact_kmedian(const MetricSpace& space, std::size_t k,
                          std::uint64_t budget) {
  return exact_impl(space, k, budget, kernels::best_subset);
}

ExactResult exact_kmedian_serial(const MetricSpace& space, std::size_t k,
                                 std::uint64_t budget) {
  return exact_impl(space, k, budget, kernels::serial::best_subset);
}

}  // namespace revgreedy
