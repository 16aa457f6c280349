#pragma once

#include <vector>

#include "gkz/intlinalg.hpp"

namespace gkz {

// One facet of a lattice polytope. The normal is the primitive inner
// normal: <normal, x> >= support for every point of the hull, with
// equality exactly on the incident points.
struct Facet {
  IntVec normal;
  Int support;
  std::vector<int> incident;  // sorted 0-based indices into the point list
};

struct HullResult {
  std::vector<IntVec> points;  // the input configuration, original order
  int dim = 0;                 // ambient dimension (= affine dimension)
  std::vector<int> vertices;   // sorted
  std::vector<Facet> facets;   // sorted lexicographically by normal
};

// Exact facet enumeration by incremental beneath-beyond with lexicographic
// insertion order. Input must be pairwise distinct and full-dimensional.
HullResult convex_hull(const std::vector<IntVec>& points);

// D! times the Euclidean volume, an integer. Star triangulation from the
// lexicographically smallest vertex; simplex pieces enter through the
// facet volumes, so the recursion bottoms out at lattice lengths.
Int normalized_volume(const std::vector<IntVec>& points);
Int normalized_volume(const HullResult& hull);

// Normalized (D-1)-volume of a facet measured in the induced lattice
// Z^D intersected with the facet's direction space. Facets of a
// 1-dimensional polytope are points and have volume 1.
Int facet_normalized_volume(const std::vector<IntVec>& points, const Facet& facet);
Int facet_normalized_volume(const HullResult& hull, const Facet& facet);

// <normal, point> - support; nonnegative for points of the hull, zero
// exactly on the facet.
Int lattice_distance(const Facet& facet, const IntVec& point);

// Raises the j0-th point (1-based) to height 1 and the others to height 0:
// {(a(j), 0) : j != j0} together with (a(j0), 1), original positions kept.
std::vector<IntVec> lift_polytope(const std::vector<IntVec>& points, int j0);

}  // namespace gkz
