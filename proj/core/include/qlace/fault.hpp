#pragma once

// Fault sets over Q_n, degree bookkeeping, the main theorem's precondition
// checks, and the two split-selection procedures (separating split and the
// direction-selection rule).

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "qlace/cube.hpp"

namespace qlace {

// Immutable set of faulty edges with a cached per-vertex fault count, so
// degrees in Q_n - F are O(1).
class FaultSet {
 public:
  explicit FaultSet(int n) : n_(n) {}
  FaultSet(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  bool contains(Edge e) const;
  bool contains(Vertex a, Vertex b) const { return contains(make_edge(a, b)); }

  // Number of faulty edges incident to v.
  int fault_count(Vertex v) const;
  // Degree of v in Q_n - F.
  int degree(Vertex v) const { return n_ - fault_count(v); }
  // True when at least one member edge touches v.
  bool touches(Vertex v) const { return fault_count(v) > 0; }

  FaultSet with_removed(std::span<const Edge> removed) const;

 private:
  int n_;
  std::vector<Edge> edges_;                        // sorted, unique
  std::unordered_map<Label, int> fault_count_;     // only vertices with faults
};

struct ConditionReport {
  int min_degree = 0;
  int degree2_count = 0;
  bool fault_bound_ok = false;  // |F| <= 4n - 17
  bool admissible = false;

  std::string describe() const;
};

// Exact degree audit of Q_n - F plus the |F| <= 4n - 17 bound.
ConditionReport check_conditions(const FaultSet& faults);

// Bound under which ham_path_laceable accepts a nonempty fault set. The
// recursion bottoms out in the 3n - 11 regime, which is what makes n = 4
// instances with one fault solvable even though 4n - 17 < 0 there.
int solver_fault_bound(int n) noexcept;
bool solver_admissible(const FaultSet& faults);

// Partition of F induced by removing layer E_j. f0/f1 hold the subcube
// faults projected to (n-1)-bit coordinates; fc holds the crossing edges in
// n-bit form. When swapped is set, "side 0" refers to the raw theta = 1
// subcube (the |F_0| >= |F_1| convention).
struct SplitView {
  Dim j{1};
  bool swapped = false;
  FaultSet f0;
  FaultSet f1;
  std::vector<Edge> fc;

  // Raw coordinate value of logical side s in {0, 1}.
  int raw_theta(int side) const noexcept { return swapped ? 1 - side : side; }
  // Logical side of an n-bit vertex.
  int side_of(Vertex v, int n) const;
  const FaultSet& side_faults(int side) const { return side == 0 ? f0 : f1; }
  bool crossing_faulty(Vertex v, int n) const;
};

SplitView split(const FaultSet& faults, Dim j);

// Same partition relabeled so |F_0| >= |F_1|.
SplitView canonical_split(const FaultSet& faults, Dim j);

// A direction j with dim(e) != j != dim(f) whose split puts the two
// vertex-disjoint edges e and f into different subcubes. Scans all n
// dimensions; such a j always exists.
Dim separating_direction(int n, Edge e, Edge f);

// All directions whose canonical split keeps, in both subcubes, minimum
// degree >= 2 with at most one degree-2 vertex, and has at least one
// crossing fault. Ascending order.
std::vector<Dim> valid_directions(const FaultSet& faults);

// The direction-selection rule: case analysis on the degree profile of
// Q_n - F, each candidate re-verified by a direct degree audit, smallest
// valid index wins. Throws NoDirection if nothing passes the audit.
std::pair<Dim, SplitView> choose_direction(const FaultSet& faults);

}  // namespace qlace
