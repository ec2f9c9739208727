#pragma once

// Path and path-system values, validity verification, and the splicing and
// edge-selection combinators the constructions are built from.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlace/cube.hpp"
#include "qlace/fault.hpp"

namespace qlace {

// A simple path in Q_n: consecutive vertices adjacent, no vertex repeated.
// Both invariants are enforced at construction.
class Path {
 public:
  Path(int n, std::vector<Vertex> vertices);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return verts_.size(); }
  std::size_t edge_count() const noexcept { return verts_.empty() ? 0 : verts_.size() - 1; }
  Vertex front() const { return verts_.front(); }
  Vertex back() const { return verts_.back(); }
  const Vertex& operator[](std::size_t i) const { return verts_[i]; }
  const std::vector<Vertex>& vertices() const noexcept { return verts_; }

  bool has_edge(Edge e) const;
  Path reversed() const;

 private:
  int n_;
  std::vector<Vertex> verts_;
};

struct PathSystem {
  std::vector<Path> paths;
};

struct EndpointPairSet {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::size_t k() const noexcept { return pairs.size(); }
  // Equal numbers of white (parity 0) and black (parity 1) vertices.
  bool balanced() const;
  // All 2k endpoints pairwise distinct.
  bool all_distinct() const;
  // |{a_i b_i} ∩ E(Q_n)|.
  int adjacent_pair_count() const;
};

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> violations;

  void fail(std::string why) {
    pass = false;
    violations.push_back(std::move(why));
  }
  std::string describe() const;
};

// Checks that the sequence is a Hamiltonian x,y-path of Q_n - F. Total: any
// input yields a report, never an exception.
VerifyReport verify_hamiltonian_path(int n, const FaultSet& faults, Vertex x, Vertex y,
                                     const std::vector<Vertex>& path);
VerifyReport verify_hamiltonian_path(int n, const FaultSet& faults, Vertex x, Vertex y,
                                     const Path& path);

// Checks that the paths are pairwise vertex-disjoint, connect the endpoint
// pairs (in either orientation), jointly cover V(Q_n), and avoid F.
VerifyReport verify_spanning_k_path(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                                    const std::vector<std::vector<Vertex>>& system);
VerifyReport verify_spanning_k_path(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                                    const PathSystem& system);

// --- Splices -------------------------------------------------------------
//
// Each splice is one of the path-surgery shapes used by the constructions.
// All of them validate the pattern and the result.

// Replace one host edge by a detour through the guest path:
//   host + guest + {u0u1, v0v1} - u0v0
// cross.first/second join drop's endpoints to the guest's two ends.
Path splice_cross(const Path& host, const Path& guest, Edge drop, std::pair<Edge, Edge> cross);

// Remove two host edges, add the chord between them, and bridge through the
// guest at the two freed vertices:
//   host + guest + {w1 g_a, w2 g_b, chord} - {drop, drop2}
// where chord shares one endpoint with drop and one with drop2, and w1/w2
// are the other endpoints of drop/drop2.
Path splice_detour(const Path& host, const Path& guest, Edge drop, Edge chord, Edge drop2);

// Re-anchor one end of the host: drop the edge (u0', v0') and add the chord
// (end, u0'), turning a path with endpoint `end` into one ending at v0'.
// The chord must not lie on the host.
Path rotate_end(const Path& host, Edge chord, Edge drop);

// Join host.back to guest via the crossing edge.
Path concat_cross(const Path& host, Edge cross, const Path& guest);

// --- Edge selection ------------------------------------------------------

// The selection rule used throughout the case analysis: prefer an edge of
// must_contain lying on the path; otherwise the edge nearest the path start
// whose endpoints avoid V(forbidden_cross) and avoid_vertices.
Edge select_path_edge(const Path& path, std::span<const Edge> forbidden_cross,
                      std::span<const Vertex> avoid_vertices,
                      std::span<const Edge> must_contain = {});

// k pairwise-disjoint edges under the same constraints; edges of
// must_contain that lie on the path are taken first.
std::vector<Edge> select_disjoint_path_edges(const Path& path, std::size_t k,
                                             std::span<const Edge> forbidden_cross,
                                             std::span<const Vertex> avoid_vertices,
                                             std::span<const Edge> must_contain = {});

}  // namespace qlace
