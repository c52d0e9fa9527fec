#include "planegen/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pg {

const CoverSet& cover_brun() {
  static const CoverSet L = [] {
    CoverSet c;
    c.name = "brun";
    c.patterns = {
        Pattern({Face{{0, 0, 0}, 1}, Face{{-1, 1, 0}, 2}}),
        Pattern({Face{{0, 0, 0}, 1}, Face{{-1, 0, 1}, 3}}),
        Pattern({Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 2}, Face{{0, -1, 1}, 3}}),
        Pattern({Face{{0, 0, 0}, 3}, Face{{1, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 3}, Face{{0, 1, 0}, 3}}),
        pattern_U(),
        Pattern({Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}, Face{{1, 0, 0}, 2},
                 Face{{1, 0, 0}, 3}}),
    };
    return c;
  }();
  return L;
}

const CoverSet& cover_jp() {
  static const CoverSet L = [] {
    CoverSet c;
    c.name = "jp";
    c.patterns = {
        Pattern({Face{{0, 0, 0}, 1}, Face{{-1, 1, 0}, 2}}),
        Pattern({Face{{0, 0, 0}, 1}, Face{{0, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 1}, Face{{-1, 0, 1}, 3}}),
        Pattern({Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 2}, Face{{0, -1, 1}, 3}}),
        Pattern({Face{{0, 0, 0}, 3}, Face{{1, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 3}, Face{{0, 1, 0}, 3}}),
        pattern_U(),
        Pattern({Face{{0, 0, 0}, 2}, Face{{1, 0, 0}, 2}, Face{{0, 0, 0}, 3}}),
        Pattern({Face{{0, 0, 0}, 1}, Face{{0, 1, 0}, 1}, Face{{0, 0, 0}, 3},
                 Face{{0, 1, 0}, 3}}),
    };
    return c;
  }();
  return L;
}

std::vector<Pattern> cover_occurrences(const Pattern& P, const CoverSet& L) {
  std::set<Pattern> out;
  for (const auto& Q : L.patterns) {
    for (const auto& p : P) {
      for (const auto& q : Q) {
        if (q.t != p.t) continue;
        Pattern cand = Q.translated(p.x - q.x);
        if (cand.is_subset_of(P)) out.insert(cand);
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Connected components of the occurrence graph (occurrences adjacent when
// they share a face), as per-component unions of covered faces.
std::vector<Pattern> occurrence_components(const std::vector<Pattern>& occ) {
  const std::size_t n = occ.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (occ[i].intersects(occ[j])) parent[find(i)] = find(j);
  std::map<std::size_t, Pattern> unions;
  for (std::size_t i = 0; i < n; ++i) {
    auto& u = unions[find(i)];
    u = u.united(occ[i]);
  }
  std::vector<Pattern> out;
  for (auto& [root, u] : unions) out.push_back(std::move(u));
  return out;
}

}  // namespace

bool is_covered(const Pattern& P, const CoverSet& L) {
  if (P.size() <= 1) return true;
  auto comps = occurrence_components(cover_occurrences(P, L));
  const auto& faces = P.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      bool linked = false;
      for (const auto& c : comps) {
        if (c.contains(faces[i]) && c.contains(faces[j])) {
          linked = true;
          break;
        }
      }
      if (!linked) return false;
    }
  }
  return true;
}

bool is_strongly_covered(const Pattern& P, const CoverSet& L) {
  if (!is_covered(P, L)) return false;
  auto occ = cover_occurrences(P, L);
  const auto& faces = P.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces_share_edge(faces[i], faces[j])) continue;
      bool extended = false;
      for (const auto& O : occ) {
        if (O.contains(faces[i]) && O.contains(faces[j])) {
          extended = true;
          break;
        }
      }
      if (!extended) return false;
    }
  }
  return true;
}

std::vector<CoverFailure> verify_cover_preservation(const std::vector<Substitution>& subs,
                                                    const CoverSet& L) {
  std::vector<CoverFailure> failures;
  for (std::size_t si = 0; si < subs.size(); ++si) {
    for (std::size_t pi = 0; pi < L.patterns.size(); ++pi) {
      Pattern image = subs[si].dual_image(L.patterns[pi]);
      if (!is_covered(image, L)) failures.push_back({si, pi, std::move(image)});
    }
  }
  return failures;
}

std::vector<Pattern> enumerate_disconnected_preimage_pairs(const Substitution& s,
                                                           const Cone& cone) {
  std::set<Pattern> out;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      for (const auto& d : adjacency_offsets(i, j)) {
        // Unordered pairs: for equal types the offsets come in +/- pairs,
        // keep the lexicographically positive one.
        if (i == j && !(V3{0, 0, 0} < d)) continue;
        Face f{{0, 0, 0}, i}, g{d, j};
        for (const auto& f0 : s.dual_preimages(f)) {
          for (const auto& g0 : s.dual_preimages(g)) {
            if (f0 == g0 || faces_edge_adjacent(f0, g0)) continue;
            Pattern pair({f0, g0});
            if (!cone.admits_pattern_translated(pair)) continue;
            out.insert(canonical_translate(pair));
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

bool is_L_annulus(const Pattern& A, const Pattern& P, const CoverSet& L) {
  if (!is_simply_connected(P))
    throw std::invalid_argument("inner pattern must be simply connected");
  return !A.empty() && is_annulus_shape(A, P) && is_strongly_covered(A, L);
}

namespace {

bool int_plane_contains(const V3& v, const Face& f) {
  int64_t h = v[0] * f.x[0] + v[1] * f.x[1] + v[2] * f.x[2];
  return 0 <= h && h < v[f.t - 1];
}

// Edge-sharing two-face subsets of A with no cover-pattern translate inside A.
std::vector<Pattern> uncovered_pairs(const Pattern& A, const CoverSet& L) {
  auto occ = cover_occurrences(A, L);
  std::vector<Pattern> out;
  const auto& faces = A.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces_share_edge(faces[i], faces[j])) continue;
      bool extended = false;
      for (const auto& O : occ)
        if (O.contains(faces[i]) && O.contains(faces[j])) {
          extended = true;
          break;
        }
      if (!extended) out.push_back(Pattern({faces[i], faces[j]}));
    }
  }
  return out;
}

// Grow A inside the allowed face set until every edge-sharing pair has a
// cover-pattern superset, branching over the possible completions of the
// first failing pair. Leaves are collected into out.
void grow_to_strong(const Pattern& A, const Pattern& allowed, const CoverSet& L, int depth,
                    std::set<Pattern>& visited, std::vector<Pattern>& out) {
  if (visited.count(A)) return;
  visited.insert(A);
  auto failing = uncovered_pairs(A, L);
  if (failing.empty()) {
    out.push_back(A);
    return;
  }
  if (depth == 0) return;
  const Pattern& X = failing.front();
  for (const auto& Q : L.patterns) {
    for (const auto& q : Q) {
      if (q.t != X.faces().front().t) continue;
      Pattern Y = Q.translated(X.faces().front().x - q.x);
      if (!X.is_subset_of(Y) || !Y.is_subset_of(allowed) || Y.is_subset_of(A)) continue;
      grow_to_strong(A.united(Y), allowed, L, depth - 1, visited, out);
    }
  }
}

}  // namespace

std::vector<Pattern> enumerate_minimal_annulus_seeds(const Pattern& P0, const CoverSet& L,
                                                     const Cone& cone, int window) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  for (const auto& f : P0)
    if (!cone.admits_face(f))
      throw std::invalid_argument("seed face not admitted by the cone");
  if (!cone.admits_pattern(P0))
    throw std::invalid_argument("seed does not fit jointly into a cone plane");

  // Sample integer normal vectors in the cone and collect the distinct
  // windowed plane patches holding P0. Only normals that are generic for
  // the window are kept: no nonzero integer vector with entries bounded by
  // window + 1 may be orthogonal to the normal. For such a normal the patch
  // coincides with the patch of a nearby totally irrational normal, so
  // degenerate coincidences (faces that can only coexist on a rational
  // wall of the cone) are excluded. In each plane the faces sharing a
  // point with P0 are forced into any surrounding annulus (a missing one
  // would put the boundary of the union against P0); when that forced ring
  // is not strongly covered it is grown by cover-pattern completions within
  // the same plane.
  constexpr int64_t kNormalBound = 30;
  constexpr int kGrowDepth = 5;
  std::set<Pattern> patches;
  const int64_t w = window;
  auto generic_for_window = [&](const V3& v) {
    const int64_t b = w + 1;
    for (int64_t a = -b; a <= b; ++a)
      for (int64_t c = -b; c <= b; ++c)
        for (int64_t d = -b; d <= b; ++d) {
          if (a == 0 && c == 0 && d == 0) continue;
          if (a * v[0] + c * v[1] + d * v[2] == 0) return false;
        }
    return true;
  };
  for (int64_t v1 = 1; v1 <= kNormalBound; ++v1) {
    for (int64_t v2 = 1; v2 <= kNormalBound; ++v2) {
      for (int64_t v3 = 1; v3 <= kNormalBound; ++v3) {
        V3 v{v1, v2, v3};
        if (std::gcd(std::gcd(v1, v2), v3) != 1) continue;
        if (!generic_for_window(v)) continue;
        bool inside = true;
        for (const auto& r : cone.rows())
          if (r[0] * v1 + r[1] * v2 + r[2] * v3 <= 0) {
            inside = false;
            break;
          }
        if (!inside) continue;
        bool holds_seed = true;
        for (const auto& f : P0)
          if (!int_plane_contains(v, f)) {
            holds_seed = false;
            break;
          }
        if (!holds_seed) continue;

        Pattern patch;
        for (int64_t x = -w; x <= w; ++x)
          for (int64_t y = -w; y <= w; ++y)
            for (int64_t z = -w; z <= w; ++z)
              for (int t = 1; t <= 3; ++t) {
                Face h{{x, y, z}, t};
                if (int_plane_contains(v, h)) patch.insert(h);
              }
        patches.insert(std::move(patch));
      }
    }
  }

  std::vector<Pattern> annuli;
  for (const auto& patch : patches) {
    Pattern allowed = patch.without(P0);
    Pattern ring;
    for (const auto& h : allowed)
      for (const auto& p : P0)
        if (faces_touch_geometric(h, p)) {
          ring.insert(h);
          break;
        }
    if (ring.empty()) continue;
    std::set<Pattern> visited;
    std::vector<Pattern> grown;
    grow_to_strong(ring, allowed, L, kGrowDepth, visited, grown);
    for (const auto& A : grown)
      if (is_annulus_shape(A, P0) && is_strongly_covered(A, L)) annuli.push_back(A);
  }
  std::sort(annuli.begin(), annuli.end());
  annuli.erase(std::unique(annuli.begin(), annuli.end()), annuli.end());

  std::vector<Pattern> out;
  for (const auto& a : annuli) {
    bool minimal = true;
    for (const auto& b : annuli) {
      if (b != a && b.is_subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(P0.united(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Closed axis box of an edge meets the closed box of some face of P.
bool edge_touches_pattern(const Edge& e, const Pattern& P) {
  V3 lo, hi;
  for (int k = 0; k < 3; ++k) {
    lo[k] = std::min(e.a[k], e.b[k]);
    hi[k] = std::max(e.a[k], e.b[k]);
  }
  for (const auto& f : P) {
    auto vs = face_vertices(f);
    V3 flo = vs[0], fhi = vs[0];
    for (const auto& v : vs)
      for (int k = 0; k < 3; ++k) {
        flo[k] = std::min(flo[k], v[k]);
        fhi[k] = std::max(fhi[k], v[k]);
      }
    bool touch = true;
    for (int k = 0; k < 3; ++k)
      if (std::max(lo[k], flo[k]) > std::min(hi[k], fhi[k])) touch = false;
    if (touch) return true;
  }
  return false;
}

using EdgeFaces = std::map<Edge, std::vector<Face>>;

EdgeFaces edge_face_index(const Pattern& universe) {
  EdgeFaces idx;
  for (const auto& f : universe)
    for (const auto& e : face_edges(f)) idx[e].push_back(f);
  return idx;
}

// Add to A every universe face on a boundary edge of P0 union A whose closed
// segment touches the closed faces of P0, until no such edge remains. Such a
// face is forced: without it the edge stays on the boundary of the union,
// violating the separation condition. Returns true if faces were added;
// *complete is cleared when an offending edge has no universe face at all
// (the universe is too small to close the surrounding).
bool boundary_closure_step(const Pattern& P0, Pattern& A, const EdgeFaces& idx, bool* complete) {
  *complete = true;
  bool any = false;
  Pattern Q = P0.united(A);
  for (;;) {
    bool changed = false;
    for (const auto& e : pattern_boundary(Q)) {
      if (!edge_touches_pattern(e, P0)) continue;
      auto it = idx.find(e);
      if (it == idx.end()) {
        *complete = false;
        return any;
      }
      for (const auto& f : it->second)
        if (!Q.contains(f)) {
          Q.insert(f);
          changed = true;
          any = true;
        }
    }
    if (!changed) break;
  }
  A = Q.without(P0);
  return any;
}

// Edge-sharing face pairs of P with no cover-pattern translate inside P.
std::vector<std::pair<Face, Face>> uncovered_edge_pairs(const Pattern& P, const CoverSet& L) {
  std::vector<std::pair<Face, Face>> out;
  const auto& faces = P.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (!faces_share_edge(faces[i], faces[j])) continue;
      bool covered = false;
      for (const auto& Q : L.patterns) {
        for (const auto& q : Q) {
          if (q.t != faces[i].t) continue;
          Pattern Y = Q.translated(faces[i].x - q.x);
          if (Y.contains(faces[j]) && Y.is_subset_of(P)) {
            covered = true;
            break;
          }
        }
        if (covered) break;
      }
      if (!covered) out.push_back({faces[i], faces[j]});
    }
  }
  return out;
}

// Intersection of all cover-pattern translates containing the pair and lying
// inside the universe; false when no completion exists at all.
bool pair_completion_intersection(const Face& f, const Face& g, const Pattern& universe,
                                  const CoverSet& L, Pattern* forced) {
  std::vector<Pattern> completions;
  for (const auto& Q : L.patterns) {
    for (const auto& q : Q) {
      if (q.t != f.t) continue;
      Pattern Y = Q.translated(f.x - q.x);
      if (!Y.contains(g) || !Y.is_subset_of(universe)) continue;
      if (std::find(completions.begin(), completions.end(), Y) == completions.end())
        completions.push_back(std::move(Y));
    }
  }
  if (completions.empty()) return false;
  Pattern inter = completions.front();
  for (std::size_t i = 1; i < completions.size(); ++i) {
    Pattern next;
    for (const auto& h : inter)
      if (completions[i].contains(h)) next.insert(h);
    inter = std::move(next);
  }
  *forced = std::move(inter);
  return true;
}

}  // namespace

Pattern forced_annulus_core(const Pattern& P0, const V3& normal, const CoverSet& L,
                            const std::vector<Substitution>& subs, int window) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  for (const auto& f : P0)
    if (!int_plane_contains(normal, f))
      throw std::invalid_argument("seed does not lie in the plane of the given normal");

  Pattern patch;
  for (int64_t x = -window; x <= window; ++x)
    for (int64_t y = -window; y <= window; ++y)
      for (int64_t z = -window; z <= window; ++z)
        for (int t = 1; t <= 3; ++t) {
          Face h{{x, y, z}, t};
          if (int_plane_contains(normal, h)) patch.insert(h);
        }
  const EdgeFaces idx = edge_face_index(patch);

  // Pull an image-level forced face back to the preimage faces producing it.
  auto pull_back = [&](const Substitution& s, const Pattern& P0A, const Face& image_face,
                       Pattern& A, bool& changed) {
    for (const auto& p : patch) {
      if (P0A.contains(p)) continue;
      if (s.dual_image(Pattern({p})).contains(image_face)) {
        A.insert(p);
        changed = true;
      }
    }
  };

  Pattern A;
  bool complete = true;
  for (;;) {
    bool changed = false;
    if (boundary_closure_step(P0, A, idx, &complete)) changed = true;

    Pattern P0A = P0.united(A);
    for (const auto& [f, g] : uncovered_edge_pairs(P0A, L)) {
      if (P0.contains(f) && P0.contains(g)) continue;
      Pattern forced;
      if (!pair_completion_intersection(f, g, patch, L, &forced)) continue;
      for (const auto& h : forced)
        if (!P0A.contains(h)) {
          A.insert(h);
          P0A.insert(h);
          changed = true;
        }
    }

    for (const auto& s : subs) {
      Pattern image_seed = s.dual_image(P0);
      Pattern image_patch = s.dual_image(patch);
      {
        Pattern image_all = s.dual_image(P0.united(A));
        const EdgeFaces image_idx = edge_face_index(image_patch);
        Pattern image_ring = image_all.without(image_seed);
        bool image_complete = true;
        boundary_closure_step(image_seed, image_ring, image_idx, &image_complete);
        if (image_complete) {
          for (const auto& h : image_ring) {
            if (image_all.contains(h)) continue;
            pull_back(s, P0.united(A), h, A, changed);
          }
        }
      }
      Pattern image_all = s.dual_image(P0.united(A));
      for (const auto& [f, g] : uncovered_edge_pairs(image_all, L)) {
        Pattern forced;
        if (!pair_completion_intersection(f, g, image_patch, L, &forced)) continue;
        for (const auto& h : forced) {
          if (image_all.contains(h)) continue;
          pull_back(s, P0.united(A), h, A, changed);
        }
      }
    }
    if (!changed) break;
  }
  return A;
}

}  // namespace pg
