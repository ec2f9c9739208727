#include "search.hpp"

#include <bit>
#include <stdexcept>

namespace qlace::detail {

namespace {

inline std::uint64_t bit(Label v) { return std::uint64_t{1} << v; }

}  // namespace

SmallCubeSearch::SmallCubeSearch(int n, const FaultSet& faults) : n_(n), nv_(1 << n) {
  if (n < 1 || n > 6) throw std::logic_error("SmallCubeSearch: needs n <= 6");
  full_ = (nv_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << nv_) - 1;
  for (Label v = 0; v < static_cast<Label>(nv_); ++v) {
    std::uint64_t mask = 0;
    for (int b = 0; b < n_; ++b) mask |= bit(v ^ (Label{1} << b));
    adj_[v] = mask;
    if ((std::popcount(v) & 1) == 0) white_ |= bit(v);
  }
  for (const Edge& e : faults) {
    Label a = e.lo.label, b = e.hi().label;
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
  }
}

// Exact color budget: the free vertices must supply, for every path still to
// be finished, the alternating color pattern its endpoint parities dictate.
bool SmallCubeSearch::feasible(Label current, std::size_t pair_index) const {
  std::uint64_t free = full_ & ~visited_;
  int whites = std::popcount(free & white_);
  int blacks = std::popcount(free & ~white_);

  int delta = 0;  // required whites - blacks among free vertices
  auto color = [&](Label v) { return (std::popcount(v) & 1) == 0 ? +1 : -1; };
  Label goal = pairs_[pair_index].second;
  if (current != goal) {
    // Segment from the next step to the goal: endpoint colors are the
    // complement of current's color, and the goal's.
    int a = -color(current), b = color(goal);
    if (a == b) delta += a;
  }
  for (std::size_t i = pair_index + 1; i < pairs_.size(); ++i) {
    int a = color(pairs_[i].first), b = color(pairs_[i].second);
    if (a == b) delta += a;
  }
  if (whites - blacks != delta) return false;

  // Degree: every free vertex needs two live connections, future path ends
  // need one. Connections live among free vertices plus the current vertex.
  std::uint64_t ends = 0;
  if (current != goal) ends |= bit(goal);
  for (std::size_t i = pair_index + 1; i < pairs_.size(); ++i) {
    ends |= bit(pairs_[i].first);
    ends |= bit(pairs_[i].second);
  }
  std::uint64_t live = free | bit(current);
  for (std::uint64_t rest = free; rest;) {
    Label v = static_cast<Label>(std::countr_zero(rest));
    rest &= rest - 1;
    int need = (ends >> v) & 1 ? 1 : 2;
    if (std::popcount(adj_[v] & live) < need) return false;
  }
  return true;
}

bool SmallCubeSearch::dfs(std::size_t pair_index, Label current) {
  Label goal = pairs_[pair_index].second;
  if (current == goal) {
    if (pair_index + 1 == pairs_.size()) return visited_ == full_;
    Label next_start = pairs_[pair_index + 1].first;
    if (visited_ & bit(next_start)) return false;
    visited_ |= bit(next_start);
    out_[pair_index + 1].push_back(next_start);
    if (feasible(next_start, pair_index + 1) && dfs(pair_index + 1, next_start)) return true;
    out_[pair_index + 1].pop_back();
    visited_ &= ~bit(next_start);
    return false;
  }

  std::uint64_t options = adj_[current] & ~visited_;
  // Smallest remaining degree first, ties by label.
  std::array<Label, 6> order{};
  int count = 0;
  for (std::uint64_t rest = options; rest;) {
    Label v = static_cast<Label>(std::countr_zero(rest));
    rest &= rest - 1;
    order[count++] = v;
  }
  std::array<int, 6> score{};
  for (int i = 0; i < count; ++i)
    score[i] = std::popcount(adj_[order[i]] & ~visited_);
  for (int i = 1; i < count; ++i) {
    for (int k = i; k > 0 && (score[k - 1] > score[k] ||
                              (score[k - 1] == score[k] && order[k - 1] > order[k]));
         --k) {
      std::swap(order[k - 1], order[k]);
      std::swap(score[k - 1], score[k]);
    }
  }

  for (int i = 0; i < count; ++i) {
    Label v = order[i];
    if (v != goal && pair_index + 1 < pairs_.size()) {
      // Stepping on a later pair's endpoint is allowed only if it is not a
      // declared endpoint of an unfinished path.
      // (Endpoints must stay free until their path is walked.)
      bool reserved = false;
      for (std::size_t p = pair_index + 1; p < pairs_.size() && !reserved; ++p)
        reserved = pairs_[p].first == v || pairs_[p].second == v;
      if (reserved) continue;
    }
    visited_ |= bit(v);
    out_[pair_index].push_back(v);
    if (feasible(v, pair_index) && dfs(pair_index, v)) return true;
    out_[pair_index].pop_back();
    visited_ &= ~bit(v);
  }
  return false;
}

std::optional<std::vector<std::vector<Label>>> SmallCubeSearch::find_system(
    std::vector<std::pair<Label, Label>> pairs, std::uint64_t pre_visited) {
  visited_ = pre_visited;
  out_.assign(pairs.size(), {});
  pairs_ = std::move(pairs);

  // Singleton pairs are one-vertex paths, fixed up front.
  std::vector<std::size_t> singleton;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto [s, g] = pairs_[i];
    if (s >= static_cast<Label>(nv_) || g >= static_cast<Label>(nv_))
      throw std::logic_error("SmallCubeSearch: label out of range");
    if (s == g) {
      if (visited_ & bit(s)) return std::nullopt;
      visited_ |= bit(s);
      out_[i].push_back(s);
      singleton.push_back(i);
    }
  }
  // Walk non-singleton pairs in order; compact view for the DFS.
  std::vector<std::pair<Label, Label>> active;
  std::vector<std::size_t> active_index;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (out_[i].empty()) {
      active.push_back(pairs_[i]);
      active_index.push_back(i);
    }
  }
  if (active.empty()) {
    if (visited_ == full_) return out_;
    return std::nullopt;
  }

  auto saved_out = out_;
  auto all_pairs = pairs_;
  pairs_ = active;
  out_.assign(active.size(), {});

  Label start = pairs_[0].first;
  if (visited_ & bit(start)) return std::nullopt;
  visited_ |= bit(start);
  out_[0].push_back(start);
  bool ok = feasible(start, 0) && dfs(0, start);

  if (!ok) return std::nullopt;
  for (std::size_t i = 0; i < active.size(); ++i) saved_out[active_index[i]] = std::move(out_[i]);
  pairs_ = std::move(all_pairs);
  return saved_out;
}

}  // namespace qlace::detail
