#pragma once

// Engine-side complete backtracking search for spanning path systems on
// cubes with at most 64 vertices. This is the exact base of the recursive
// constructions; the oracle module carries its own independent search.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlace/cube.hpp"
#include "qlace/fault.hpp"

namespace qlace::detail {

class SmallCubeSearch {
 public:
  SmallCubeSearch(int n, const FaultSet& faults);

  // k vertex-disjoint paths connecting the pairs and covering, together with
  // pre_visited, every vertex of Q_n. Pairs with equal endpoints become
  // one-vertex paths. Complete: nullopt means no such system exists.
  std::optional<std::vector<std::vector<Label>>> find_system(
      std::vector<std::pair<Label, Label>> pairs, std::uint64_t pre_visited = 0);

 private:
  bool dfs(std::size_t pair_index, Label current);
  bool feasible(Label current, std::size_t pair_index) const;

  int n_;
  int nv_;
  std::uint64_t full_ = 0;
  std::uint64_t white_ = 0;  // parity-0 vertices
  std::array<std::uint64_t, 64> adj_{};
  std::uint64_t visited_ = 0;
  std::vector<std::pair<Label, Label>> pairs_;
  std::vector<std::vector<Label>> out_;
};

}  // namespace qlace::detail
