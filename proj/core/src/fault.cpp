#include "qlace/fault.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlace/error.hpp"

namespace qlace {

FaultSet::FaultSet(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("fault set: bad dimension");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (e.lo.n != n) throw std::invalid_argument("fault set: edge dimension mismatch");
    if (e.dim.j < 1 || e.dim.j > n) throw std::invalid_argument("fault set: bad edge");
    ++fault_count_[e.lo.label];
    ++fault_count_[e.hi().label];
  }
  edges_ = std::move(edges);
}

bool FaultSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int FaultSet::fault_count(Vertex v) const {
  auto it = fault_count_.find(v.label);
  return it == fault_count_.end() ? 0 : it->second;
}

FaultSet FaultSet::with_removed(std::span<const Edge> removed) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  }
  return FaultSet(n_, std::move(kept));
}

std::string ConditionReport::describe() const {
  std::string s = "min degree " + std::to_string(min_degree);
  s += ", degree-2 vertices " + std::to_string(degree2_count);
  s += fault_bound_ok ? ", fault bound ok" : ", fault bound exceeded";
  s += admissible ? "; admissible" : "; not admissible";
  return s;
}

ConditionReport check_conditions(const FaultSet& faults) {
  const int n = faults.n();
  ConditionReport report;
  report.min_degree = n;
  report.degree2_count = 0;

  // Untouched vertices all have degree n; only fault-touched ones can dip.
  std::vector<Label> seen;
  seen.reserve(faults.size() * 2);
  for (const Edge& e : faults) {
    seen.push_back(e.lo.label);
    seen.push_back(e.hi().label);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  for (Label l : seen) {
    int deg = faults.degree(Vertex{l, static_cast<std::uint8_t>(n)});
    report.min_degree = std::min(report.min_degree, deg);
    if (deg == 2) ++report.degree2_count;
  }
  bool untouched_exist =
      n > kMaxEnumerableDim || seen.size() < (std::size_t{1} << n);
  if (untouched_exist && n == 2)
    report.degree2_count += static_cast<int>((std::size_t{1} << n) - seen.size());

  report.fault_bound_ok = static_cast<long long>(faults.size()) <= 4LL * n - 17;
  report.admissible =
      report.min_degree >= 2 && report.degree2_count <= 1 && report.fault_bound_ok;
  return report;
}

int solver_fault_bound(int n) noexcept {
  if (n >= 5) return 4 * n - 17;
  if (n == 4) return 3 * n - 11;  // base regime
  return 0;
}

bool solver_admissible(const FaultSet& faults) {
  if (faults.empty()) return true;
  ConditionReport r = check_conditions(faults);
  return r.min_degree >= 2 && r.degree2_count <= 1 &&
         static_cast<long long>(faults.size()) <= solver_fault_bound(faults.n());
}

int SplitView::side_of(Vertex v, int n) const {
  int raw = static_cast<int>((v.label >> bit_index(n, j)) & 1);
  return swapped ? 1 - raw : raw;
}

bool SplitView::crossing_faulty(Vertex v, int n) const {
  Edge cross = make_edge(v, neighbor(v, j));
  return std::binary_search(fc.begin(), fc.end(), cross);
}

SplitView split(const FaultSet& faults, Dim j) {
  const int n = faults.n();
  if (j.j < 1 || j.j > n) throw std::invalid_argument("split: invalid dimension index");
  std::vector<Edge> side0, side1, crossing;
  int bit = bit_index(n, j);
  for (const Edge& e : faults) {
    if (e.dim == j) {
      crossing.push_back(e);
    } else if ((e.lo.label >> bit) & 1) {
      side1.push_back(project_edge(e, j));
    } else {
      side0.push_back(project_edge(e, j));
    }
  }
  SplitView view{j, false, FaultSet(n - 1, std::move(side0)), FaultSet(n - 1, std::move(side1)),
                 std::move(crossing)};
  std::sort(view.fc.begin(), view.fc.end());
  return view;
}

SplitView canonical_split(const FaultSet& faults, Dim j) {
  SplitView view = split(faults, j);
  if (view.f1.size() > view.f0.size()) {
    std::swap(view.f0, view.f1);
    view.swapped = true;
  }
  return view;
}

Dim separating_direction(int n, Edge e, Edge f) {
  if (n < 2) throw std::invalid_argument("separating_direction: n must be at least 2");
  if (e.touches(f.lo) || e.touches(f.hi()))
    throw std::invalid_argument("separating_direction: edges must be vertex-disjoint");
  for (int j = 1; j <= n; ++j) {
    Dim d{j};
    if (d == e.dim || d == f.dim) continue;
    int b = bit_index(n, d);
    if (((e.lo.label >> b) & 1) != ((f.lo.label >> b) & 1)) return d;
  }
  throw std::logic_error("separating_direction: no direction found for disjoint edges");
}

namespace {

bool side_conditions_ok(const FaultSet& side) {
  ConditionReport r = check_conditions(side);
  return r.min_degree >= 2 && r.degree2_count <= 1;
}

bool direction_ok(const FaultSet& faults, Dim j, SplitView* out) {
  SplitView view = canonical_split(faults, j);
  if (view.fc.empty()) return false;
  if (!side_conditions_ok(view.f0) || !side_conditions_ok(view.f1)) return false;
  if (out) *out = std::move(view);
  return true;
}

}  // namespace

std::vector<Dim> valid_directions(const FaultSet& faults) {
  std::vector<Dim> out;
  for (int j = 1; j <= faults.n(); ++j) {
    if (direction_ok(faults, Dim{j}, nullptr)) out.push_back(Dim{j});
  }
  return out;
}

std::pair<Dim, SplitView> choose_direction(const FaultSet& faults) {
  const int n = faults.n();
  if (n < 7) throw std::invalid_argument("choose_direction: requires n >= 7");
  if (faults.empty()) throw std::invalid_argument("choose_direction: fault set is empty");

  // Degree profile of Q_n - F. Only fault-touched vertices can fall below n.
  std::vector<Vertex> deg2, deg3;
  {
    std::vector<Label> seen;
    for (const Edge& e : faults) {
      seen.push_back(e.lo.label);
      seen.push_back(e.hi().label);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (Label l : seen) {
      Vertex v{l, static_cast<std::uint8_t>(n)};
      int d = faults.degree(v);
      if (d == 2) deg2.push_back(v);
      if (d == 3) deg3.push_back(v);
    }
  }

  auto faulty_at = [&](Vertex v, int j) { return faults.contains(v, neighbor(v, Dim{j})); };

  std::vector<Dim> candidates;
  if (deg2.empty()) {
    if (deg3.size() <= 1) {
      // Maximize |F ∩ E_j|.
      std::vector<int> layer_count(n + 1, 0);
      for (const Edge& e : faults) ++layer_count[e.dim.j];
      int best = *std::max_element(layer_count.begin() + 1, layer_count.end());
      for (int j = 1; j <= n; ++j) {
        if (layer_count[j] == best) candidates.push_back(Dim{j});
      }
    } else if (deg3.size() == 2) {
      for (int j = 1; j <= n; ++j) {
        if (faulty_at(deg3[0], j) && faulty_at(deg3[1], j)) candidates.push_back(Dim{j});
      }
    } else {
      // A faulty edge joining two degree-3 vertices names the direction.
      for (const Edge& e : faults) {
        bool lo3 = std::find(deg3.begin(), deg3.end(), e.lo) != deg3.end();
        bool hi3 = std::find(deg3.begin(), deg3.end(), e.hi()) != deg3.end();
        if (lo3 && hi3) candidates.push_back(e.dim);
      }
    }
  } else {
    Vertex w = deg2.front();
    if (deg3.size() == 1) {
      Vertex v = deg3.front();
      for (int j = 1; j <= n; ++j) {
        if (!faulty_at(w, j) || !faulty_at(v, j)) continue;
        if (neighbor(w, Dim{j}) == v) continue;  // ww_j and vv_j must differ
        candidates.push_back(Dim{j});
      }
    } else if (deg3.size() == 2) {
      for (const Edge& e : faults) {
        if (!e.touches(w)) continue;
        Vertex other = e.lo == w ? e.hi() : e.lo;
        if (std::find(deg3.begin(), deg3.end(), other) != deg3.end())
          candidates.push_back(e.dim);
      }
    } else {
      for (int j = 1; j <= n; ++j) {
        if (faulty_at(w, j)) candidates.push_back(Dim{j});
      }
    }
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  SplitView view;
  for (Dim j : candidates) {
    if (direction_ok(faults, j, &view)) return {j, std::move(view)};
  }
  // The case analysis is advisory; the audit is what counts.
  for (int j = 1; j <= n; ++j) {
    if (direction_ok(faults, Dim{j}, &view)) return {Dim{j}, std::move(view)};
  }
  throw SolveError(SolveErrorKind::NoDirection,
                   "no split direction keeps both subcubes within the degree conditions");
}

}  // namespace qlace
