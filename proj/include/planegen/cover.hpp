#ifndef PLANEGEN_COVER_HPP
#define PLANEGEN_COVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "planegen/cone.hpp"
#include "planegen/geom.hpp"
#include "planegen/subst.hpp"

namespace pg {

// A finite set of edge-connected pattern representatives, used up to
// translation as the allowed links of covering chains.
struct CoverSet {
  std::string name;
  std::vector<Pattern> patterns;
};

// The eight-pattern cover set used with the Brun substitutions.
const CoverSet& cover_brun();
// The ten-pattern cover set used with the Jacobi-Perron substitutions.
const CoverSet& cover_jp();

// All translates of cover patterns contained in P, deduplicated and sorted.
std::vector<Pattern> cover_occurrences(const Pattern& P, const CoverSet& L);

// True iff every pair of faces of P is linked by a chain of translated cover
// patterns inside P with consecutive chain members sharing a face. One-face
// patterns count as covered by convention.
bool is_covered(const Pattern& P, const CoverSet& L);

// is_covered plus: every edge-connected two-face subset of P is contained in
// some translated cover pattern lying inside P.
bool is_strongly_covered(const Pattern& P, const CoverSet& L);

struct CoverFailure {
  std::size_t substitution_index;
  std::size_t pattern_index;
  Pattern image;
};

// For each substitution and each cover pattern, checks that the dual image of
// the pattern is covered; returns the list of failures (empty = certified).
std::vector<CoverFailure> verify_cover_preservation(const std::vector<Substitution>& subs,
                                                    const CoverSet& L);

// Canonical translation representatives of all disconnected two-face pairs
// {f0, g0} whose dual images produce an edge-connected two-face pattern
// {f, g} with f in S(f0) and g in S(g0). The preimage pair must fit, up to
// translation, into a discrete plane with normal in the given cone; the
// image pair ranges over the adjacency tables (which already encode
// realizability in some positive plane).
std::vector<Pattern> enumerate_disconnected_preimage_pairs(const Substitution& s,
                                                           const Cone& cone);

// A surrounds P: the two are disjoint, the boundary of P union A stays away
// from the closed faces of P, and A is strongly covered. P must be simply
// connected (throws otherwise).
bool is_L_annulus(const Pattern& A, const Pattern& P, const CoverSet& L);

// All inclusion-minimal patterns P0 union A such that A is an L-annulus of
// P0 and P0 union A lies in a discrete plane with normal in the cone, with
// face positions bounded by the max-norm window. Every face of P0 must be
// admitted by the cone and P0 must fit jointly into a cone plane (throws
// otherwise). Results are in absolute coordinates since P0 is anchored.
std::vector<Pattern> enumerate_minimal_annulus_seeds(const Pattern& P0, const CoverSet& L,
                                                     const Cone& cone, int window);

// The faces forced into any surrounding of P0 inside the discrete plane with
// the given integer normal (faces searched within the max-norm window).
// Starting from the faces required to keep the boundary of the union away
// from the closed faces of P0, the set is grown to a fixpoint by two forcing
// rules, both evaluated inside the plane:
//  - for every edge-sharing face pair touching the current surrounding that
//    lies in no cover-pattern translate inside P0 union A, add the faces
//    common to every completing translate available in the plane;
//  - apply each given substitution to P0 union A, run the same boundary and
//    completion analysis on the image (whose plane is the image plane), and
//    pull the forced image faces back to their unique preimage faces.
// The result is the annulus core: a subset of every surrounding of P0 in
// this plane that is closed under these necessity arguments.
Pattern forced_annulus_core(const Pattern& P0, const V3& normal, const CoverSet& L,
                            const std::vector<Substitution>& subs, int window);

}  // namespace pg

#endif
