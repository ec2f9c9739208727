#include "qlace/path.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "qlace/error.hpp"

namespace qlace {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::unordered_map<Label, std::size_t> position_map(const Path& p) {
  std::unordered_map<Label, std::size_t> pos;
  pos.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pos.emplace(p[i].label, i);
  return pos;
}

// Positions (i, i+1) of an edge on the path, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> edge_positions(
    const Path& p, const std::unordered_map<Label, std::size_t>& pos, Edge e) {
  auto a = pos.find(e.lo.label);
  auto b = pos.find(e.hi().label);
  if (a == pos.end() || b == pos.end()) return std::nullopt;
  std::size_t i = a->second, k = b->second;
  if (i + 1 != k && k + 1 != i) return std::nullopt;
  return std::make_pair(std::min(i, k), std::max(i, k));
}

std::vector<Vertex> slice(const Path& p, std::size_t from, std::size_t to_inclusive) {
  return std::vector<Vertex>(p.vertices().begin() + static_cast<std::ptrdiff_t>(from),
                             p.vertices().begin() + static_cast<std::ptrdiff_t>(to_inclusive) + 1);
}

void append_reversed(std::vector<Vertex>& out, const Path& p, std::size_t from,
                     std::size_t to_inclusive) {
  for (std::size_t i = to_inclusive + 1; i-- > from;) out.push_back(p[i]);
}

bool adjacent(Vertex a, Vertex b) {
  if (a.n != b.n) return false;
  Label d = a.label ^ b.label;
  return d != 0 && (d & (d - 1)) == 0;
}

}  // namespace

Path::Path(int n, std::vector<Vertex> vertices) : n_(n), verts_(std::move(vertices)) {
  require(n >= 1 && n <= kMaxEnumerableDim, "path: dimension out of range");
  require(!verts_.empty(), "path: empty");
  std::unordered_set<Label> seen;
  seen.reserve(verts_.size());
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    require(verts_[i].n == n_, "path: vertex dimension mismatch");
    require((verts_[i].label & ~label_mask(n_)) == 0, "path: label out of range");
    require(seen.insert(verts_[i].label).second, "path: vertex repeated");
    if (i > 0) require(adjacent(verts_[i - 1], verts_[i]), "path: consecutive vertices not adjacent");
  }
}

bool Path::has_edge(Edge e) const {
  auto pos = position_map(*this);
  return edge_positions(*this, pos, e).has_value();
}

Path Path::reversed() const {
  std::vector<Vertex> v(verts_.rbegin(), verts_.rend());
  return Path(n_, std::move(v));
}

bool EndpointPairSet::balanced() const {
  int white = 0, black = 0;
  for (const auto& [a, b] : pairs) {
    (parity(a) == 0 ? white : black)++;
    (parity(b) == 0 ? white : black)++;
  }
  return white == black;
}

bool EndpointPairSet::all_distinct() const {
  std::vector<Label> labels;
  for (const auto& [a, b] : pairs) {
    labels.push_back(a.label);
    labels.push_back(b.label);
  }
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

int EndpointPairSet::adjacent_pair_count() const {
  int count = 0;
  for (const auto& [a, b] : pairs) {
    if (adjacent(a, b)) ++count;
  }
  return count;
}

std::string VerifyReport::describe() const {
  if (pass) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v;
  }
  return s;
}

namespace {

// Shared walk: adjacency, repetition, validity, faulty edges.
void check_walk(int n, const FaultSet& faults, const std::vector<Vertex>& path,
                std::unordered_set<Label>& seen, VerifyReport& report) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex& v = path[i];
    if (v.n != n || (v.label & ~label_mask(n)) != 0) {
      report.fail("invalid vertex at position " + std::to_string(i));
      continue;
    }
    if (!seen.insert(v.label).second)
      report.fail("vertex repeated: " + to_string(v));
    if (i == 0) continue;
    if (!adjacent(path[i - 1], v)) {
      report.fail("not a path: " + to_string(path[i - 1]) + " and " + to_string(v) +
                  " are not adjacent");
    } else if (faults.contains(path[i - 1], v)) {
      report.fail("uses faulty edge " + to_string(make_edge(path[i - 1], v)));
    }
  }
}

}  // namespace

VerifyReport verify_hamiltonian_path(int n, const FaultSet& faults, Vertex x, Vertex y,
                                     const std::vector<Vertex>& path) {
  VerifyReport report;
  if (path.empty()) {
    report.fail("empty path");
    return report;
  }
  std::unordered_set<Label> seen;
  seen.reserve(path.size());
  check_walk(n, faults, path, seen, report);
  if (path.front() != x) report.fail("does not start at " + to_string(x));
  if (path.back() != y) report.fail("does not end at " + to_string(y));
  std::size_t expected = std::size_t{1} << n;
  if (seen.size() != expected || path.size() != expected)
    report.fail("not spanning: visits " + std::to_string(seen.size()) + " of " +
                std::to_string(expected) + " vertices");
  return report;
}

VerifyReport verify_hamiltonian_path(int n, const FaultSet& faults, Vertex x, Vertex y,
                                     const Path& path) {
  return verify_hamiltonian_path(n, faults, x, y, path.vertices());
}

VerifyReport verify_spanning_k_path(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                                    const std::vector<std::vector<Vertex>>& system) {
  VerifyReport report;
  if (system.size() != pairs.k()) {
    report.fail("expected " + std::to_string(pairs.k()) + " paths, got " +
                std::to_string(system.size()));
    return report;
  }
  std::unordered_set<Label> seen;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& path = system[i];
    if (path.empty()) {
      report.fail("path " + std::to_string(i) + " is empty");
      continue;
    }
    std::size_t before = report.violations.size();
    std::unordered_set<Label> own;
    check_walk(n, faults, path, own, report);
    for (Label l : own) {
      if (!seen.insert(l).second)
        report.fail("not disjoint: vertex " + to_string(Vertex{l, static_cast<std::uint8_t>(n)}) +
                    " appears in two paths");
    }
    const auto& [a, b] = pairs.pairs[i];
    bool forward = path.front() == a && path.back() == b;
    bool backward = path.front() == b && path.back() == a;
    if (!forward && !backward)
      report.fail("path " + std::to_string(i) + " does not connect " + to_string(a) + " and " +
                  to_string(b));
    (void)before;
  }
  std::size_t expected = std::size_t{1} << n;
  if (seen.size() != expected)
    report.fail("not spanning: covers " + std::to_string(seen.size()) + " of " +
                std::to_string(expected) + " vertices");
  return report;
}

VerifyReport verify_spanning_k_path(int n, const FaultSet& faults, const EndpointPairSet& pairs,
                                    const PathSystem& system) {
  std::vector<std::vector<Vertex>> raw;
  raw.reserve(system.paths.size());
  for (const Path& p : system.paths) raw.push_back(p.vertices());
  return verify_spanning_k_path(n, faults, pairs, raw);
}

Path splice_cross(const Path& host, const Path& guest, Edge drop, std::pair<Edge, Edge> cross) {
  auto pos = position_map(host);
  auto dp = edge_positions(host, pos, drop);
  require(dp.has_value(), "splice_cross: drop edge not on host path");
  std::size_t a = dp->first;  // edge occupies (a, a+1)

  Vertex u0 = host[a], v0 = host[a + 1];
  Vertex gf = guest.front(), gb = guest.back();

  // The two crossing edges, as an unordered pair, must join the dropped
  // edge's endpoints to the guest's two ends.
  auto pair_is = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
    if (!adjacent(p, q) || !adjacent(r, s)) return false;
    Edge e1 = make_edge(p, q), e2 = make_edge(r, s);
    return (cross.first == e1 && cross.second == e2) ||
           (cross.first == e2 && cross.second == e1);
  };

  bool forward;
  if (pair_is(u0, gf, v0, gb)) {
    forward = true;
  } else if (pair_is(u0, gb, v0, gf)) {
    forward = false;
  } else {
    throw std::invalid_argument(
        "splice_cross: crossing edges do not join drop endpoints to guest ends");
  }

  std::vector<Vertex> out;
  out.reserve(host.size() + guest.size());
  out.insert(out.end(), host.vertices().begin(), host.vertices().begin() + static_cast<std::ptrdiff_t>(a) + 1);
  if (forward) {
    out.insert(out.end(), guest.vertices().begin(), guest.vertices().end());
  } else {
    out.insert(out.end(), guest.vertices().rbegin(), guest.vertices().rend());
  }
  out.insert(out.end(), host.vertices().begin() + static_cast<std::ptrdiff_t>(a) + 1, host.vertices().end());
  return Path(host.n(), std::move(out));
}

Path splice_detour(const Path& host, const Path& guest, Edge drop, Edge chord, Edge drop2) {
  auto pos = position_map(host);
  auto d1 = edge_positions(host, pos, drop);
  auto d2 = edge_positions(host, pos, drop2);
  require(d1.has_value(), "splice_detour: drop edge not on host path");
  require(d2.has_value(), "splice_detour: second drop edge not on host path");
  require(!edge_positions(host, pos, chord).has_value(), "splice_detour: chord lies on host path");

  // Orient so drop occupies (a, a+1) before drop2 at (b, b+1).
  if (d1->first > d2->first) {
    std::swap(d1, d2);
    std::swap(drop, drop2);
  }
  std::size_t a = d1->first, b = d2->first;
  require(a + 1 < b, "splice_detour: drop edges must be disjoint");

  // The chord joins one endpoint of each dropped edge.
  Vertex c1, c2;
  if (drop.touches(chord.lo) && drop2.touches(chord.hi())) {
    c1 = chord.lo;
    c2 = chord.hi();
  } else if (drop.touches(chord.hi()) && drop2.touches(chord.lo)) {
    c1 = chord.hi();
    c2 = chord.lo;
  } else {
    throw std::invalid_argument("splice_detour: chord does not join the dropped edges");
  }

  // Single-path condition: the chord must attach on matching sides.
  bool c1_low = (host[a] == c1);
  bool c2_low = (host[b] == c2);
  require(c1_low == c2_low, "splice_detour: chord endpoints face each other");

  // Crossing vertices are the non-chord endpoints.
  Vertex w1 = c1_low ? host[a + 1] : host[a];
  Vertex w2 = c2_low ? host[b + 1] : host[b];

  Vertex gf = guest.front(), gb = guest.back();
  bool guest_forward;
  if (adjacent(w1, gf) && adjacent(w2, gb)) {
    guest_forward = true;
  } else if (adjacent(w1, gb) && adjacent(w2, gf)) {
    guest_forward = false;
  } else {
    throw std::invalid_argument("splice_detour: guest ends do not match the freed vertices");
  }

  std::vector<Vertex> out;
  out.reserve(host.size() + guest.size());
  auto push_guest = [&] {
    if (guest_forward)
      out.insert(out.end(), guest.vertices().begin(), guest.vertices().end());
    else
      out.insert(out.end(), guest.vertices().rbegin(), guest.vertices().rend());
  };

  if (c1_low) {
    // x..w1(a+1 side): actually S1 = [0..a] ends at chord vertex c1.
    // Shape: S1 + chord + reverse(S2) + guest + S3, bridging w1 -> w2? No:
    // here w1 = host[a+1] (S2 start), w2 = host[b+1] (S3 start).
    // S1 ends at c1 = host[a]; chord c1->c2 = host[b] = S2 end; walk S2
    // reversed down to w1; guest bridges w1 -> w2; S3 continues from w2.
    out.insert(out.end(), host.vertices().begin(),
               host.vertices().begin() + static_cast<std::ptrdiff_t>(a) + 1);
    append_reversed(out, host, a + 1, b);
    push_guest();
    out.insert(out.end(), host.vertices().begin() + static_cast<std::ptrdiff_t>(b) + 1,
               host.vertices().end());
  } else {
    // w1 = host[a] (S1 end), w2 = host[b] (S2 end); chord joins host[a+1]
    // (S2 start) to host[b+1] (S3 start). S1 + guest(w1 -> w2) + reverse(S2)
    // + S3 via the chord.
    out.insert(out.end(), host.vertices().begin(),
               host.vertices().begin() + static_cast<std::ptrdiff_t>(a) + 1);
    push_guest();
    append_reversed(out, host, a + 1, b);
    out.insert(out.end(), host.vertices().begin() + static_cast<std::ptrdiff_t>(b) + 1,
               host.vertices().end());
  }
  return Path(host.n(), std::move(out));
}

Path rotate_end(const Path& host, Edge chord, Edge drop) {
  auto pos = position_map(host);
  require(!edge_positions(host, pos, chord).has_value(), "rotate_end: chord lies on host path");
  auto dp = edge_positions(host, pos, drop);
  require(dp.has_value(), "rotate_end: drop edge not on host path");

  Vertex end0 = host.front(), end1 = host.back();
  bool at_front;
  Vertex u0, u0p;
  if (chord.touches(end0)) {
    at_front = true;
    u0 = end0;
    u0p = chord.lo == end0 ? chord.hi() : chord.lo;
  } else if (chord.touches(end1)) {
    at_front = false;
    u0 = end1;
    u0p = chord.lo == end1 ? chord.hi() : chord.lo;
  } else {
    throw std::invalid_argument("rotate_end: chord does not touch a path endpoint");
  }
  (void)u0;

  auto it = pos.find(u0p.label);
  require(it != pos.end(), "rotate_end: chord target not on host path");
  std::size_t t = it->second;

  // The dropped edge must be the one between u0' and its neighbor on the
  // endpoint's side.
  std::size_t expect_a, expect_b;
  if (at_front) {
    require(t >= 2, "rotate_end: chord target adjacent to the endpoint");
    expect_a = t - 1;
    expect_b = t;
  } else {
    require(t + 2 < host.size(), "rotate_end: chord target adjacent to the endpoint");
    expect_a = t;
    expect_b = t + 1;
  }
  require(dp->first == expect_a && dp->second == expect_b,
          "rotate_end: drop edge is not on the endpoint side of the chord target");

  std::vector<Vertex> out;
  out.reserve(host.size());
  if (at_front) {
    // v0' .. u0 (prefix reversed), chord to u0', then onward to the back.
    append_reversed(out, host, 0, t - 1);
    out.insert(out.end(), host.vertices().begin() + static_cast<std::ptrdiff_t>(t),
               host.vertices().end());
  } else {
    out.insert(out.end(), host.vertices().begin(),
               host.vertices().begin() + static_cast<std::ptrdiff_t>(t) + 1);
    append_reversed(out, host, t + 1, host.size() - 1);
  }
  return Path(host.n(), std::move(out));
}

Path concat_cross(const Path& host, Edge cross, const Path& guest) {
  Vertex tail = host.back();
  require(cross.touches(tail), "concat_cross: crossing edge does not touch host end");
  Vertex other = cross.lo == tail ? cross.hi() : cross.lo;
  std::vector<Vertex> out = host.vertices();
  if (guest.front() == other) {
    out.insert(out.end(), guest.vertices().begin(), guest.vertices().end());
  } else if (guest.back() == other) {
    out.insert(out.end(), guest.vertices().rbegin(), guest.vertices().rend());
  } else {
    throw std::invalid_argument("concat_cross: crossing edge does not reach a guest end");
  }
  return Path(host.n(), std::move(out));
}

namespace {

std::unordered_set<Label> vertex_labels(std::span<const Edge> edges) {
  std::unordered_set<Label> out;
  for (const Edge& e : edges) {
    out.insert(e.lo.label);
    out.insert(e.hi().label);
  }
  return out;
}

}  // namespace

Edge select_path_edge(const Path& path, std::span<const Edge> forbidden_cross,
                      std::span<const Vertex> avoid_vertices, std::span<const Edge> must_contain) {
  if (!must_contain.empty()) {
    auto pos = position_map(path);
    std::optional<std::size_t> best;
    Edge best_edge{};
    for (const Edge& e : must_contain) {
      auto p = edge_positions(path, pos, e);
      if (p && (!best || p->first < *best)) {
        best = p->first;
        best_edge = e;
      }
    }
    if (best) return best_edge;
  }
  std::unordered_set<Label> banned = vertex_labels(forbidden_cross);
  for (const Vertex& v : avoid_vertices) banned.insert(v.label);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (banned.count(path[i].label) || banned.count(path[i + 1].label)) continue;
    return make_edge(path[i], path[i + 1]);
  }
  throw SolveError(SolveErrorKind::NoEdge, "no path edge satisfies the selection constraints");
}

std::vector<Edge> select_disjoint_path_edges(const Path& path, std::size_t k,
                                             std::span<const Edge> forbidden_cross,
                                             std::span<const Vertex> avoid_vertices,
                                             std::span<const Edge> must_contain) {
  std::unordered_set<Label> banned = vertex_labels(forbidden_cross);
  for (const Vertex& v : avoid_vertices) banned.insert(v.label);

  std::vector<Edge> chosen;
  std::unordered_set<Label> used;
  auto pos = position_map(path);
  for (const Edge& e : must_contain) {
    if (!edge_positions(path, pos, e)) continue;
    if (used.count(e.lo.label) || used.count(e.hi().label))
      throw std::invalid_argument("select_disjoint_path_edges: must_contain edges overlap");
    chosen.push_back(e);
    used.insert(e.lo.label);
    used.insert(e.hi().label);
  }
  for (std::size_t i = 0; i + 1 < path.size() && chosen.size() < k; ++i) {
    Label a = path[i].label, b = path[i + 1].label;
    if (banned.count(a) || banned.count(b) || used.count(a) || used.count(b)) continue;
    chosen.push_back(make_edge(path[i], path[i + 1]));
    used.insert(a);
    used.insert(b);
  }
  if (chosen.size() < k)
    throw SolveError(SolveErrorKind::NoEdge,
                     "fewer than " + std::to_string(k) + " disjoint path edges satisfy the constraints");
  chosen.resize(k);
  return chosen;
}

}  // namespace qlace
