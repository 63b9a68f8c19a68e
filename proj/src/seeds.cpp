#include <algorithm>
#include <map>

#include "lamanspan/catalog.hpp"
#include "lamanspan/error.hpp"

namespace lamanspan {

namespace {

class SeedSearch {
 public:
  SeedSearch(const Triangulation& host, SpanClass target, const SeedConstraints& c)
      : host_(host), target_(target), c_(c), tris_(host.triangles()), state_(tris_.size(), -1) {
    std::map<Edge, std::vector<int>> by_edge;
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
      const auto& t = tris_[i];
      for (const Edge& e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) by_edge[e].push_back(i);
    }
    neighbors_.resize(tris_.size());
    for (const auto& [e, ts] : by_edge) {
      neighbors_[ts[0]].push_back(ts[1]);
      neighbors_[ts[1]].push_back(ts[0]);
    }
    for (Vertex v : host.vertices()) {
      const auto& lk = host.link(v);
      std::vector<int> ring;
      for (std::size_t i = 0; i < lk.size(); ++i) {
        Triangle t = make_triangle(v, lk[i], lk[(i + 1) % lk.size()]);
        ring.push_back(static_cast<int>(std::lower_bound(tris_.begin(), tris_.end(), t) - tris_.begin()));
      }
      stars_[v] = std::move(ring);
    }
  }

  std::optional<SpanningComplex> run() {
    for (const auto& t : c_.forced_in)
      if (!assign(index_of(t), 1)) return std::nullopt;
    for (const auto& t : c_.forced_out)
      if (!assign(index_of(t), 0)) return std::nullopt;
    for (const auto& e : c_.forbidden_edges)
      for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
        if (contains(tris_[i], e) && !assign(i, 0)) return std::nullopt;
    if (!feasible_everywhere()) return std::nullopt;
    return descend(0);
  }

  bool exhausted() const { return exhausted_; }

 private:
  int index_of(const Triangle& raw) const {
    Triangle t = make_triangle(raw[0], raw[1], raw[2]);
    auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
    if (it == tris_.end() || *it != t) fail(ErrorCode::BadStructure, "constraint triangle not in host");
    return static_cast<int>(it - tris_.begin());
  }

  bool assign(int i, int value) {
    if (state_[i] >= 0) return state_[i] == value;
    state_[i] = static_cast<signed char>(value);
    return true;
  }

  bool triangle_ok(int i) const {
    if (state_[i] != 0) return true;
    for (int j : neighbors_[i])
      if (state_[j] != 0) return true;
    return false;
  }

  bool vertex_ok(Vertex v) const {
    const auto& ring = stars_.at(v);
    const int d = static_cast<int>(ring.size());
    bool any_open = false;
    int first_out = -1;
    for (int k = 0; k < d; ++k) {
      if (state_[ring[k]] != 0) any_open = true;
      else if (first_out < 0) first_out = k;
    }
    if (!any_open) return false;
    if (first_out < 0) return true;
    int runs_with_in = 0;
    bool in_run = false, run_has_in = false;
    for (int step = 1; step <= d; ++step) {
      int s = state_[ring[(first_out + step) % d]];
      if (s != 0) {
        in_run = true;
        run_has_in = run_has_in || s == 1;
      } else {
        if (in_run && run_has_in) ++runs_with_in;
        in_run = run_has_in = false;
      }
    }
    const int limit = (c_.pinch && *c_.pinch == v) ? 2 : 1;
    return runs_with_in <= limit;
  }

  bool locally_ok(int i) const {
    if (!triangle_ok(i)) return false;
    for (int j : neighbors_[i])
      if (!triangle_ok(j)) return false;
    for (Vertex v : tris_[i])
      if (!vertex_ok(v)) return false;
    return true;
  }

  bool feasible_everywhere() const {
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
      if (!triangle_ok(i)) return false;
    for (const auto& [v, ring] : stars_)
      if (!vertex_ok(v)) return false;
    return true;
  }

  std::optional<SpanningComplex> descend(int i) {
    while (i < static_cast<int>(tris_.size()) && state_[i] >= 0) ++i;
    if (i == static_cast<int>(tris_.size())) return leaf();
    if (c_.node_budget && ++nodes_ > c_.node_budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    for (int value : {1, 0}) {
      state_[i] = static_cast<signed char>(value);
      if (locally_ok(i)) {
        if (auto found = descend(i + 1)) return found;
        if (exhausted_) break;
      }
    }
    state_[i] = -1;
    return std::nullopt;
  }

  std::optional<SpanningComplex> leaf() {
    std::vector<Triangle> chosen;
    for (std::size_t i = 0; i < tris_.size(); ++i)
      if (state_[i] == 1) chosen.push_back(tris_[i]);
    SpanningComplex s = make_span(std::move(chosen), target_);
    if (target_ == SpanClass::PinchedDisc) s.singular = c_.pinch;
    if (verify_span(host_, s).empty()) return s;
    return std::nullopt;
  }

  const Triangulation& host_;
  SpanClass target_;
  const SeedConstraints& c_;
  const std::vector<Triangle>& tris_;
  std::vector<signed char> state_;
  std::vector<std::vector<int>> neighbors_;
  std::map<Vertex, std::vector<int>> stars_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<SpanningComplex> search_span(const Triangulation& host, SpanClass target,
                                           const SeedConstraints& constraints) {
  if (target == SpanClass::PinchedDisc && !constraints.pinch)
    fail(ErrorCode::BadStructure, "pinched search needs a singular vertex");
  SeedSearch search(host, target, constraints);
  return search.run();
}

SeedConstraints pinched_constraints(const Triangulation& host, Vertex v, Vertex x, Vertex y) {
  const auto& lk = host.link(v);
  const int d = static_cast<int>(lk.size());
  int px = link_position(host, v, x), py = link_position(host, v, y);
  if (px < 0 || py < 0) fail(ErrorCode::HypothesesViolated, "cycle neighbors must be adjacent to the pivot");
  SeedConstraints c;
  c.pinch = v;
  for (int i = 0; i < d; ++i) {
    Triangle t = make_triangle(v, lk[i], lk[(i + 1) % d]);
    if (contains(t, x) || contains(t, y)) c.forced_out.push_back(t);
    else c.forced_in.push_back(t);
  }
  for (int p : {px, py}) {
    c.forbidden_edges.push_back(make_edge(lk[p], lk[(p + 1) % d]));
    c.forbidden_edges.push_back(make_edge(lk[p], lk[(p + d - 1) % d]));
  }
  return c;
}

SpanningComplex find_seed(const CatalogEntry& entry) {
  if (entry.crosscap) fail(ErrorCode::BadStructure, entry.name + " is a cross-cap entry; use a pinched seed");
  SpanClass target = (entry.surface_class == SurfaceClass::Torus || entry.surface_class == SurfaceClass::KleinBottle)
                         ? SpanClass::Cylinder
                         : SpanClass::Disc;
  auto s = search_span(entry.complex, target);
  if (!s) fail(ErrorCode::SeedNotFound, entry.name + ": no spanning " + span_class_name(target));
  return *s;
}

SpanningComplex find_pinched_seed(const CatalogEntry& entry, Vertex pivot) {
  if (!entry.crosscap || !entry.abc) fail(ErrorCode::BadStructure, entry.name + " is not a cross-cap entry");
  const auto& abc = *entry.abc;
  if (std::find(abc.begin(), abc.end(), pivot) == abc.end())
    fail(ErrorCode::BadStructure, "pivot " + std::to_string(pivot) + " is not on abc");
  std::vector<Vertex> others;
  for (Vertex u : abc)
    if (u != pivot) others.push_back(u);
  auto c = pinched_constraints(entry.complex, pivot, others[0], others[1]);
  auto s = search_span(entry.complex, SpanClass::PinchedDisc, c);
  if (!s) fail(ErrorCode::SeedNotFound, entry.name + ": no pinched disc at " + std::to_string(pivot));
  return *s;
}

SpanningComplex SeedBank::seed(const CatalogEntry& entry) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(entry.name, Vertex{-1});
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, find_seed(entry)).first;
  return it->second;
}

SpanningComplex SeedBank::pinched_seed(const CatalogEntry& entry, Vertex pivot) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(entry.name, pivot);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, find_pinched_seed(entry, pivot)).first;
  return it->second;
}

}  // namespace lamanspan
