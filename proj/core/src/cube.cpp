#include "qlace/cube.hpp"

#include <bit>
#include <stdexcept>

namespace qlace {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Label label_mask(int n) noexcept {
  if (n >= 64) return ~Label{0};
  return (Label{1} << n) - 1;
}

Vertex make_vertex(Label label, int n) {
  require(n >= 1 && n <= kMaxDimension, "vertex: dimension out of range");
  require((label & ~label_mask(n)) == 0, "vertex: label >= 2^n");
  return Vertex{label, static_cast<std::uint8_t>(n)};
}

int parity(Vertex v) noexcept { return std::popcount(v.label) & 1; }

Vertex neighbor(Vertex v, Dim j) {
  require(j.j >= 1 && j.j <= v.n, "neighbor: dimension out of range");
  return Vertex{v.label ^ (Label{1} << bit_index(v.n, j)), v.n};
}

int hamming_distance(Vertex x, Vertex y) {
  require(x.n == y.n, "hamming_distance: dimension mismatch");
  return std::popcount(x.label ^ y.label);
}

Edge make_edge(Vertex a, Vertex b) {
  require(a.n == b.n, "edge: dimension mismatch");
  Label diff = a.label ^ b.label;
  require(diff != 0 && (diff & (diff - 1)) == 0,
          "edge: endpoints must differ in exactly one coordinate");
  int bit = std::countr_zero(diff);
  Dim dim{a.n - bit};
  Vertex lo = (a.label & diff) == 0 ? a : b;
  return Edge{lo, dim};
}

Dim edge_dimension(Edge e) noexcept { return e.dim; }

Dim edge_dimension(Vertex a, Vertex b) { return make_edge(a, b).dim; }

int parity(Edge e) noexcept {
  // lo has coordinate sum one less than hi.
  return parity(e.lo);
}

std::vector<Edge> layer_edges(int n, Dim j) {
  require(n >= 1 && n <= kMaxEnumerableDim, "layer_edges: dimension out of range");
  require(j.j >= 1 && j.j <= n, "layer_edges: invalid dimension index");
  std::vector<Edge> out;
  out.reserve(std::size_t{1} << (n - 1));
  Label bit = Label{1} << bit_index(n, j);
  for (Label v = 0; v <= label_mask(n); ++v) {
    if ((v & bit) == 0) out.push_back(Edge{Vertex{v, static_cast<std::uint8_t>(n)}, j});
  }
  return out;
}

Projection project(Vertex v, Dim j) {
  require(v.n >= 2, "project: dimension must be at least 2");
  require(j.j >= 1 && j.j <= v.n, "project: invalid dimension index");
  int b = bit_index(v.n, j);
  int theta = static_cast<int>((v.label >> b) & 1);
  Label low = v.label & ((Label{1} << b) - 1);
  Label high = (v.label >> (b + 1)) << b;
  return Projection{theta, Vertex{high | low, static_cast<std::uint8_t>(v.n - 1)}};
}

Vertex embed(Vertex v, Dim j, int theta) {
  int n = v.n + 1;
  require(n <= kMaxDimension, "embed: dimension out of range");
  require(j.j >= 1 && j.j <= n, "embed: invalid dimension index");
  require(theta == 0 || theta == 1, "embed: theta must be a bit");
  int b = bit_index(n, j);
  Label low = v.label & ((Label{1} << b) - 1);
  Label high = (v.label >> b) << (b + 1);
  return Vertex{high | (Label{theta} << b) | low, static_cast<std::uint8_t>(n)};
}

Edge project_edge(Edge e, Dim j) {
  require(e.dim != j, "project_edge: edge lies in the split layer");
  Dim sub{e.dim.j < j.j ? e.dim.j : e.dim.j - 1};
  return Edge{project(e.lo, j).v, sub};
}

Edge embed_edge(Edge e, Dim j, int theta) {
  Dim full{e.dim.j < j.j ? e.dim.j : e.dim.j + 1};
  return Edge{embed(e.lo, j, theta), full};
}

std::string to_string(Vertex v) {
  std::string s(v.n, '0');
  for (int i = 0; i < v.n; ++i) {
    if ((v.label >> (v.n - 1 - i)) & 1) s[i] = '1';
  }
  return s;
}

std::string to_string(Edge e) { return to_string(e.lo) + " " + to_string(e.hi()); }

Vertex parse_vertex(const std::string& text) {
  require(!text.empty() && text.size() <= kMaxDimension, "vertex text: bad length");
  Label label = 0;
  for (char c : text) {
    require(c == '0' || c == '1', "vertex text: expected a binary string");
    label = (label << 1) | static_cast<Label>(c - '0');
  }
  return Vertex{label, static_cast<std::uint8_t>(text.size())};
}

Vertex parse_vertex(const std::string& text, int n) {
  Vertex v = parse_vertex(text);
  require(v.n == n, "vertex text: wrong dimension");
  return v;
}

Edge parse_edge(const std::string& text, int n) {
  auto sep = text.find(' ');
  require(sep != std::string::npos, "edge text: expected two vertices");
  Vertex a = parse_vertex(text.substr(0, sep), n);
  Vertex b = parse_vertex(text.substr(sep + 1), n);
  return make_edge(a, b);
}

}  // namespace qlace
