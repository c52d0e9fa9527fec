#ifndef PLANEGEN_GEOM_HPP
#define PLANEGEN_GEOM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pg {

using V3 = std::array<int64_t, 3>;

inline V3 operator+(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V3 operator-(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V3 operator-(const V3& a) { return {-a[0], -a[1], -a[2]}; }

// A pointed unit face [x,i]: the unit square pointed at integer vector x,
// orthogonal to coordinate axis i (i in 1..3).
struct Face {
  V3 x{0, 0, 0};
  int t = 1;

  auto operator<=>(const Face&) const = default;
};

Face translated(const Face& f, const V3& v);

// The four integer corner points of the unit-square realization of f.
std::array<V3, 4> face_vertices(const Face& f);

// An axis-aligned unit segment between two lattice points, endpoints sorted.
struct Edge {
  V3 a, b;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(const V3& p, const V3& q);
std::array<Edge, 4> face_edges(const Face& f);

// A finite set of faces, kept sorted and duplicate-free.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Face> faces);

  void insert(const Face& f);
  bool contains(const Face& f) const;
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

  const std::vector<Face>& faces() const { return faces_; }
  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }

  Pattern translated(const V3& v) const;
  Pattern united(const Pattern& other) const;
  Pattern without(const Pattern& other) const;
  bool is_subset_of(const Pattern& other) const;
  bool intersects(const Pattern& other) const;

  auto operator<=>(const Pattern&) const = default;

 private:
  std::vector<Face> faces_;  // sorted
};

// The lower half unit cube: [0,1], [0,2], [0,3].
Pattern pattern_U();

// Translation representative: P shifted so its first (sorted) face sits at
// the origin. Two patterns are translates of each other iff their
// representatives are equal. Empty patterns map to themselves.
Pattern canonical_translate(const Pattern& P);

// Adjacency of two faces, decided by the per-type-pair offset tables. The
// tables list exactly the relative positions where the closed unit squares
// touch (sharing an edge or a corner) AND the two-face pattern can occur in
// a discrete plane with strictly positive normal; pairs that touch but can
// never coexist in a plane (e.g. a type-2 face directly above a type-1 face)
// are not adjacent.
bool faces_edge_adjacent(const Face& f, const Face& g);

// Independent geometric half of the oracle: do the closed unit squares
// intersect (in at least a point)?
bool faces_touch_geometric(const Face& f, const Face& g);

// Do the unit squares share a full unit edge? This is strictly narrower than
// faces_edge_adjacent, which also admits corner contacts; the strong-covering
// two-face condition quantifies over edge-sharing pairs only.
bool faces_share_edge(const Face& f, const Face& g);

// The offset table for a type pair (i,j): all d with [0,i] adjacent to [d,j].
const std::vector<V3>& adjacency_offsets(int i, int j);

// All edges incident to exactly one face of P.
std::vector<Edge> pattern_boundary(const Pattern& P);

// True iff A and P share no face and the closed faces of P are disjoint
// from the boundary of P union A.
bool is_annulus_shape(const Pattern& A, const Pattern& P);

// Length of the shortest edge-adjacent chain from a face of U to a face
// carrying a boundary edge of P. Requires U to be contained in P.
int combinatorial_radius(const Pattern& P);

// Partition of P under the transitive closure of edge adjacency.
std::vector<Pattern> edge_connected_components(const Pattern& P);

// Disc test on the rhombus complex obtained by projecting along (1,1,1):
// single edge-connected component and Euler characteristic V - E + F = 1.
bool is_simply_connected(const Pattern& P);

std::string to_string(const Face& f);
std::string to_string(const Pattern& P);

}  // namespace pg

#endif
