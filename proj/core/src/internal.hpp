#pragma once

// Shared internals of the solver engine. The public surface lives in
// qlace/solver.hpp; these helpers tie the recursion, the subsolvers, and the
// small-cube search together.

#include "qlace/fault.hpp"
#include "qlace/path.hpp"
#include "qlace/solver.hpp"

namespace qlace::detail {

// k-path subsolvers fall back to complete search at or below this dimension.
inline constexpr int kKPathSearchLimit = 5;
// The main recursion bottoms out in complete search at or below this.
inline constexpr int kBaseSolveLimit = 6;

// Main-theorem recursion. trace may be null.
Path solve_rec(int n, const FaultSet& faults, Vertex x, Vertex y, SolveTrace* trace, int depth);

// Spanning k-path engine: complete search at small n, recursive splitting
// above. Supports small fault sets (every fault layer is eligible as the
// split direction). Throws NotFound (search exhausted) or
// ConstructionFailed (no recursive plan worked).
PathSystem kpath_solve(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                       SolveTrace* trace, int depth);

// Fault-free Hamiltonian path by the classic split recursion.
Path havel_path(int n, Vertex x, Vertex y);

// Smallest side vertex (by label) satisfying pred; pred sees the n-bit vertex.
template <typename Pred>
std::optional<Vertex> first_side_vertex(int n, Dim j, int raw_theta, Pred&& pred) {
  Label count = Label{1} << (n - 1);
  for (Label s = 0; s < count; ++s) {
    Vertex v = embed(Vertex{s, static_cast<std::uint8_t>(n - 1)}, j, raw_theta);
    if (pred(v)) return v;
  }
  return std::nullopt;
}

#ifdef QLACE_PARANOID
void paranoid_ham(int n, const FaultSet& faults, Vertex x, Vertex y, const Path& path,
                  const char* where);
void paranoid_system(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                     const PathSystem& system, const char* where);
#else
inline void paranoid_ham(int, const FaultSet&, Vertex, Vertex, const Path&, const char*) {}
inline void paranoid_system(int, const FaultSet&, const EndpointPairSet&, const PathSystem&,
                            const char*) {}
#endif

}  // namespace qlace::detail
