#pragma once

// The constructive machinery: the recursive Hamiltonian-path constructor for
// conditionally faulty hypercubes, plus the spanning-path subsolvers the
// construction composes. All returned paths are verified before they leave
// the module.

#include <string>
#include <utility>
#include <vector>

#include "qlace/error.hpp"
#include "qlace/fault.hpp"
#include "qlace/path.hpp"

namespace qlace {

struct SolveRequest {
  int n = 1;
  FaultSet faults{1};
  Vertex x;
  Vertex y;
};

enum class LevelKind { FaultFree, BaseSearch, Case1, Case2, Case3, Case4 };

const char* to_string(LevelKind kind) noexcept;

struct TraceLevel {
  int depth = 0;
  int n = 0;
  LevelKind kind = LevelKind::FaultFree;
  Dim j{1};
  bool swapped = false;
  std::size_t f0 = 0, f1 = 0, fc = 0;
  std::string subcase;            // e.g. "2.1 detour", empty for base levels
  std::vector<Edge> selected;     // removed faulty edges / dropped path edges
};

struct SolveTrace {
  std::vector<TraceLevel> levels;

  std::string summary() const;
};

struct SolveResult {
  Path path;
  SolveTrace trace;
};

// Hamiltonian path from x to y in Q_n - F under the degree conditions and
// the fault bound. Errors: Inadmissible, SameParity; ConstructionFailed is a
// defect signal and carries the trace in its message.
SolveResult ham_path_laceable(const SolveRequest& request);

// Complete backtracking search, exact for n <= 6. NotFound only when no
// Hamiltonian x,y-path exists in Q_n - F at all.
Path base_solve(int n, const FaultSet& faults, Vertex x, Vertex y);

// Fault-free constructor (split recursion).
Path ham_path_fault_free(int n, Vertex x, Vertex y);

// Hamiltonian x,y-path traversing the prescribed edge f (n >= 2, f != xy).
Path ham_path_through_edge(int n, Edge f, Vertex x, Vertex y);

// Hamiltonian x,y-path avoiding the edge f (n >= 3).
Path ham_path_avoiding_edge(int n, Edge f, Vertex x, Vertex y);

// Spanning 2-path P_uv + P_xy in Q_n - F; {u,v,x,y} balanced and distinct,
// |F| <= 2n - 7 (n >= 4, or n >= 2 fault-free). With pin_uv_as_edge and
// d(u,v) = 1 the first path is the single edge uv (fault-free only).
PathSystem spanning_2path(int n, const FaultSet& faults, std::pair<Vertex, Vertex> uv,
                          std::pair<Vertex, Vertex> xy, bool pin_uv_as_edge = false);

// Fault-free spanning k-path; accepts exactly the balanced pair sets with
// 2k - |{a_i b_i} ∩ E(Q_n)| < n.
PathSystem spanning_k_path(int n, const EndpointPairSet& pairs);

// Spanning 3-path P_uv + P_xy + P_wz in Q_n - f for n >= 5, f and uv
// vertex-disjoint, all six endpoints distinct, p(x) != p(y), p(w) != p(z).
PathSystem spanning_3path_minus_edge(int n, Edge f, Edge uv, std::pair<Vertex, Vertex> xy,
                                     std::pair<Vertex, Vertex> wz);

}  // namespace qlace
