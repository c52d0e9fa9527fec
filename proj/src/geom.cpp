#include "planegen/geom.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pg {

namespace {

constexpr V3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

}  // namespace

Face translated(const Face& f, const V3& v) { return Face{f.x + v, f.t}; }

std::array<V3, 4> face_vertices(const Face& f) {
  const V3& x = f.x;
  switch (f.t) {
    case 1:
      return {x, x + e2, x + e2 + e3, x + e3};
    case 2:
      return {x, x + e3, x + e1 + e3, x + e1};
    case 3:
      return {x, x + e1, x + e1 + e2, x + e2};
    default:
      throw std::invalid_argument("face type must be 1, 2 or 3");
  }
}

Edge make_edge(const V3& p, const V3& q) { return p <= q ? Edge{p, q} : Edge{q, p}; }

std::array<Edge, 4> face_edges(const Face& f) {
  auto v = face_vertices(f);
  return {make_edge(v[0], v[1]), make_edge(v[1], v[2]), make_edge(v[2], v[3]),
          make_edge(v[3], v[0])};
}

Pattern::Pattern(std::vector<Face> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

void Pattern::insert(const Face& f) {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) faces_.insert(it, f);
}

bool Pattern::contains(const Face& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

Pattern Pattern::translated(const V3& v) const {
  std::vector<Face> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(pg::translated(f, v));
  return Pattern(std::move(out));  // translation preserves order, but re-sorting is cheap
}

Pattern Pattern::united(const Pattern& other) const {
  std::vector<Face> out;
  out.reserve(faces_.size() + other.faces_.size());
  std::set_union(faces_.begin(), faces_.end(), other.faces_.begin(), other.faces_.end(),
                 std::back_inserter(out));
  return Pattern(std::move(out));
}

Pattern Pattern::without(const Pattern& other) const {
  std::vector<Face> out;
  std::set_difference(faces_.begin(), faces_.end(), other.faces_.begin(), other.faces_.end(),
                      std::back_inserter(out));
  return Pattern(std::move(out));
}

bool Pattern::is_subset_of(const Pattern& other) const {
  return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
}

bool Pattern::intersects(const Pattern& other) const {
  auto i = faces_.begin();
  auto j = other.faces_.begin();
  while (i != faces_.end() && j != other.faces_.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

Pattern pattern_U() {
  return Pattern({Face{{0, 0, 0}, 1}, Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}});
}

Pattern canonical_translate(const Pattern& P) {
  if (P.empty()) return P;
  return P.translated(-P.faces().front().x);
}

namespace {

std::vector<V3> with_negations(std::vector<V3> base) {
  std::vector<V3> out;
  for (const auto& v : base) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

std::vector<V3> negated(const std::vector<V3>& v) {
  std::vector<V3> out;
  for (const auto& d : v) out.push_back(-d);
  return out;
}

// Offset tables for adjacency: faces [0,i] and [d,j] are adjacent exactly
// when d is listed in table (i,j). The listed offsets are the positions where
// the closed squares touch and the pair fits jointly into a discrete plane;
// the unit tests rebuild the tables from that characterization.
const std::array<std::array<std::vector<V3>, 3>, 3>& tables() {
  static const auto t = [] {
    std::array<std::array<std::vector<V3>, 3>, 3> v;
    v[0][0] = with_negations({{0, 1, 0}, {0, 0, 1}, {0, 1, -1}, {0, 1, 1}});
    v[1][1] = with_negations({{1, 0, 0}, {0, 0, 1}, {1, 0, -1}, {1, 0, 1}});
    v[2][2] = with_negations({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 0}});
    v[0][1] = {{0, 0, 0},   {-1, 1, 0}, {0, 0, 1},  {0, 0, -1},
               {0, 1, -1},  {-1, 1, -1}, {-1, 1, 1}, {-1, 0, 1}};
    v[0][2] = {{0, 0, 0},   {-1, 0, 1}, {0, 1, 0},   {0, -1, 0},
               {-1, 1, 0},  {-1, 1, 1}, {-1, -1, 1}, {0, -1, 1}};
    v[1][2] = {{0, 0, 0},   {0, -1, 1}, {1, 0, 0},   {-1, 0, 0},
               {-1, 0, 1},  {-1, -1, 1}, {1, -1, 1}, {1, -1, 0}};
    v[1][0] = negated(v[0][1]);
    v[2][0] = negated(v[0][2]);
    v[2][1] = negated(v[1][2]);
    return v;
  }();
  return t;
}

}  // namespace

const std::vector<V3>& adjacency_offsets(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("face type must be 1, 2 or 3");
  return tables()[i - 1][j - 1];
}

bool faces_edge_adjacent(const Face& f, const Face& g) {
  const auto& offs = adjacency_offsets(f.t, g.t);
  V3 d = g.x - f.x;
  return std::find(offs.begin(), offs.end(), d) != offs.end();
}


std::vector<Edge> pattern_boundary(const Pattern& P) {
  std::map<Edge, int> count;
  for (const auto& f : P)
    for (const auto& e : face_edges(f)) count[e]++;
  std::vector<Edge> out;
  for (const auto& [e, c] : count)
    if (c == 1) out.push_back(e);
  return out;
}

namespace {

struct Box {
  V3 lo, hi;
};

Box face_box(const Face& f) {
  Box b{f.x, f.x};
  auto vs = face_vertices(f);
  for (const auto& v : vs)
    for (int k = 0; k < 3; ++k) {
      b.lo[k] = std::min(b.lo[k], v[k]);
      b.hi[k] = std::max(b.hi[k], v[k]);
    }
  return b;
}

Box edge_box(const Edge& e) {
  Box b;
  for (int k = 0; k < 3; ++k) {
    b.lo[k] = std::min(e.a[k], e.b[k]);
    b.hi[k] = std::max(e.a[k], e.b[k]);
  }
  return b;
}

// Closed axis-aligned (possibly degenerate) boxes touch iff their coordinate
// intervals overlap on every axis.
bool boxes_touch(const Box& a, const Box& b) {
  for (int k = 0; k < 3; ++k)
    if (std::max(a.lo[k], b.lo[k]) > std::min(a.hi[k], b.hi[k])) return false;
  return true;
}

}  // namespace

bool faces_touch_geometric(const Face& f, const Face& g) {
  return boxes_touch(face_box(f), face_box(g));
}

bool faces_share_edge(const Face& f, const Face& g) {
  if (f == g) return false;
  auto ef = face_edges(f);
  auto eg = face_edges(g);
  for (const auto& a : ef)
    for (const auto& b : eg)
      if (a == b) return true;
  return false;
}

bool is_annulus_shape(const Pattern& A, const Pattern& P) {
  if (A.intersects(P)) return false;
  if (A.empty()) return false;
  auto boundary = pattern_boundary(P.united(A));
  std::vector<Box> pboxes;
  pboxes.reserve(P.size());
  for (const auto& f : P) pboxes.push_back(face_box(f));
  for (const auto& e : boundary) {
    Box eb = edge_box(e);
    for (const auto& fb : pboxes)
      if (boxes_touch(eb, fb)) return false;
  }
  return true;
}

int combinatorial_radius(const Pattern& P) {
  Pattern U = pattern_U();
  if (!U.is_subset_of(P)) throw std::invalid_argument("pattern must contain the lower unit cube");

  std::set<Edge> boundary;
  for (const auto& e : pattern_boundary(P)) boundary.insert(e);
  auto touches_boundary = [&](const Face& f) {
    for (const auto& e : face_edges(f))
      if (boundary.count(e)) return true;
    return false;
  };

  const auto& faces = P.faces();
  std::map<Face, int> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<int>(i);

  std::vector<int> dist(faces.size(), -1);
  std::queue<int> q;
  for (const auto& f : U) {
    int i = index.at(f);
    dist[i] = 1;
    q.push(i);
  }
  int best = -1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    if (touches_boundary(faces[i])) {
      best = best < 0 ? dist[i] : std::min(best, dist[i]);
      continue;  // chains through a boundary face cannot improve on it
    }
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (dist[j] < 0 && faces_edge_adjacent(faces[i], faces[j])) {
        dist[j] = dist[i] + 1;
        q.push(static_cast<int>(j));
      }
    }
  }
  if (best < 0) throw std::logic_error("no boundary-touching face reachable");
  return best;
}

std::vector<Pattern> edge_connected_components(const Pattern& P) {
  const auto& faces = P.faces();
  std::vector<int> comp(faces.size(), -1);
  std::vector<Pattern> out;
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<Face> members;
    std::queue<std::size_t> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      auto i = q.front();
      q.pop();
      members.push_back(faces[i]);
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (comp[j] < 0 && faces_edge_adjacent(faces[i], faces[j])) {
          comp[j] = id;
          q.push(j);
        }
      }
    }
    out.push_back(Pattern(std::move(members)));
  }
  return out;
}

bool is_simply_connected(const Pattern& P) {
  if (P.empty()) return false;
  if (edge_connected_components(P).size() != 1) return false;

  // Project along (1,1,1): p(x) = (x1 - x3, x2 - x3).
  auto proj = [](const V3& v) { return std::array<int64_t, 2>{v[0] - v[2], v[1] - v[2]}; };
  std::set<std::array<int64_t, 2>> verts;
  std::set<std::array<std::array<int64_t, 2>, 2>> edges;
  std::set<std::pair<std::array<int64_t, 2>, int>> cells;
  for (const auto& f : P) {
    cells.insert({proj(f.x), f.t});
    for (const auto& v : face_vertices(f)) verts.insert(proj(v));
    for (const auto& e : face_edges(f)) {
      auto a = proj(e.a), b = proj(e.b);
      edges.insert(a <= b ? std::array{a, b} : std::array{b, a});
    }
  }
  int64_t chi = static_cast<int64_t>(verts.size()) - static_cast<int64_t>(edges.size()) +
                static_cast<int64_t>(cells.size());
  return chi == 1;
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << "[(" << f.x[0] << "," << f.x[1] << "," << f.x[2] << ")," << f.t << "]";
  return os.str();
}

std::string to_string(const Pattern& P) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& f : P) {
    if (!first) os << ", ";
    first = false;
    os << to_string(f);
  }
  os << "}";
  return os.str();
}

}  // namespace pg
