#pragma once

// Bit-level model of the hypercube Q_n: vertices, edges, parity, dimensions,
// layers, and subcube projection/embedding.
//
// Conventions, fixed once and used everywhere:
//  - A vertex of Q_n is an n-bit label. Coordinate v^i (1-based, as written
//    v^1 v^2 ... v^n) lives at bit (n - i) of the label, so the text form
//    "01101" is just the label printed in binary, width n.
//  - Dimension indices are 1-based in the public API; j = 1 is the leftmost
//    coordinate. Internally dimension j touches bit (n - j).
//  - Edges are stored canonically: the endpoint whose bit at the edge's
//    dimension is 0, plus the dimension. Equal edges compare equal no matter
//    how they were built.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qlace {

using Label = std::uint64_t;

// Hard cap: one machine word. Anything that enumerates 2^n objects will also
// refuse much earlier (see kMaxEnumerableDim).
inline constexpr int kMaxDimension = 64;

// Operations that materialize all 2^n vertices (layers, verifiers, paths)
// refuse beyond this; the practical solver target is n <= 16.
inline constexpr int kMaxEnumerableDim = 26;

Label label_mask(int n) noexcept;

struct Vertex {
  Label label = 0;
  std::uint8_t n = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// 1-based dimension index in [1..n], matching the paper's j.
struct Dim {
  int j = 1;

  friend auto operator<=>(const Dim&, const Dim&) = default;
};

// Bit position (counted from the least significant bit) of dimension j in an
// n-bit label.
inline int bit_index(int n, Dim d) noexcept { return n - d.j; }

Vertex make_vertex(Label label, int n);

int parity(Vertex v) noexcept;
Vertex neighbor(Vertex v, Dim j);

// Number of coordinates in which x and y differ.
int hamming_distance(Vertex x, Vertex y);

struct Edge {
  Vertex lo;  // endpoint with bit(dim) == 0
  Dim dim;

  Vertex hi() const { return neighbor(lo, dim); }
  bool touches(Vertex v) const { return lo == v || hi() == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Builds the canonical edge between two vertices; rejects endpoint pairs
// whose Hamming distance is not exactly 1.
Edge make_edge(Vertex a, Vertex b);

Dim edge_dimension(Edge e) noexcept;
Dim edge_dimension(Vertex a, Vertex b);

// Parity of an edge: parity of the endpoint with the smaller coordinate sum.
int parity(Edge e) noexcept;

// All 2^(n-1) edges of dimension j. The n layers partition E(Q_n).
std::vector<Edge> layer_edges(int n, Dim j);

struct Projection {
  int theta = 0;  // value of the dropped coordinate
  Vertex v;       // (n-1)-bit vertex
};

// Drops coordinate j; embed() is the two-sided inverse. For an edge of
// dimension i != j the projected dimension is i when i < j, else i - 1.
Projection project(Vertex v, Dim j);
Vertex embed(Vertex v, Dim j, int theta);
Edge project_edge(Edge e, Dim j);
Edge embed_edge(Edge e, Dim j, int theta);

std::string to_string(Vertex v);
std::string to_string(Edge e);
Vertex parse_vertex(const std::string& text);
Vertex parse_vertex(const std::string& text, int n);
Edge parse_edge(const std::string& text, int n);

}  // namespace qlace
