#include "gkz/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace gkz {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

void validate_points(const std::vector<IntVec>& points) {
  if (points.empty())
    throw Error(ErrorCode::not_full_dimensional, "empty point set");
  const std::size_t d = points[0].size();
  if (d == 0)
    throw Error(ErrorCode::not_full_dimensional, "zero-dimensional ambient space");
  for (const IntVec& p : points)
    if (p.size() != d)
      throw Error(ErrorCode::parse_error, "points of mixed dimension");
  std::set<IntVec> seen;
  for (const IntVec& p : points)
    if (!seen.insert(p).second)
      throw Error(ErrorCode::duplicate_points, "duplicate point in configuration");
}

int affine_rank(const std::vector<IntVec>& points, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  std::vector<IntVec> diffs;
  diffs.reserve(idx.size() - 1);
  const IntVec& base = points[idx[0]];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    IntVec row(base.size());
    for (std::size_t j = 0; j < base.size(); ++j)
      row[j] = points[idx[k]][j] - base[j];
    diffs.push_back(std::move(row));
  }
  return lattice_rank(IntMat::from_rows(diffs));
}

// Normal of the hyperplane through D affinely independent points, via the
// cofactor expansion of the (D-1) x D difference matrix. Zero vector iff
// the points are affinely dependent.
IntVec hyperplane_normal(const std::vector<IntVec>& points,
                         const std::vector<int>& idx) {
  const int d = int(points[0].size());
  IntMat diffs(d - 1, d);
  const IntVec& base = points[idx[0]];
  for (int i = 1; i < d; ++i)
    for (int j = 0; j < d; ++j)
      diffs.at(i - 1, j) = points[idx[i]][j] - base[j];
  IntVec normal(d);
  IntMat minor(d - 1, d - 1);
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d - 1; ++i)
      for (int j = 0, mj = 0; j < d; ++j) {
        if (j == k) continue;
        minor.at(i, mj++) = diffs.at(i, j);
      }
    Int c = determinant(minor);
    normal[k] = (k % 2 == 0) ? c : Int(-c);
  }
  return normal;
}

struct TriFacet {
  std::vector<int> verts;  // sorted, size D
  IntVec normal;           // primitive inner normal
  Int support;
};

// Oriented primitive hyperplane through `verts`; the inner side is fixed by
// a reference point strictly interior to the hull (scaled to stay integral).
TriFacet make_tri_facet(const std::vector<IntVec>& points, std::vector<int> verts,
                        const IntVec& interior_sum, const Int& interior_scale) {
  IntVec raw = hyperplane_normal(points, verts);
  PrimitivePart prim = make_primitive(raw);
  if (sgn(prim.scale) == 0)
    throw Error(ErrorCode::internal, "degenerate facet simplex");
  Int support = dot(prim.primitive, points[verts[0]]);
  int side = cmp(dot(prim.primitive, interior_sum), interior_scale * support);
  if (side == 0)
    throw Error(ErrorCode::internal, "interior reference on facet hyperplane");
  if (side < 0) {
    for (Int& x : prim.primitive) x = -x;
    support = -support;
  }
  std::sort(verts.begin(), verts.end());
  return {std::move(verts), std::move(prim.primitive), std::move(support)};
}

// Every ridge of a closed simplicial surface must lie in exactly two
// facets; anything else means the incremental update went wrong.
void check_surface(const std::vector<TriFacet>& surface, int d) {
  std::map<std::vector<int>, int> ridge_count;
  for (const TriFacet& f : surface)
    for (int drop = 0; drop < d; ++drop) {
      std::vector<int> ridge;
      ridge.reserve(d - 1);
      for (int k = 0; k < d; ++k)
        if (k != drop) ridge.push_back(f.verts[k]);
      ++ridge_count[std::move(ridge)];
    }
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2)
      throw Error(ErrorCode::internal, "hull surface is not closed");
}

HullResult hull_1d(const std::vector<IntVec>& points) {
  int lo = 0, hi = 0;
  for (int j = 1; j < int(points.size()); ++j) {
    if (points[j][0] < points[lo][0]) lo = j;
    if (points[j][0] > points[hi][0]) hi = j;
  }
  HullResult hull;
  hull.points = points;
  hull.dim = 1;
  hull.vertices = {std::min(lo, hi), std::max(lo, hi)};
  Facet left{{Int(1)}, points[lo][0], {lo}};
  Facet right{{Int(-1)}, -points[hi][0], {hi}};
  hull.facets = {std::move(right), std::move(left)};  // lex order: -1 < 1
  return hull;
}

}  // namespace

HullResult convex_hull(const std::vector<IntVec>& points) {
  validate_points(points);
  const int d = int(points[0].size());
  const int m = int(points.size());

  std::vector<int> order(m);
  for (int j = 0; j < m; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(points[a], points[b]); });

  {
    int rank = affine_rank(points, order);
    if (rank < d)
      throw Error(ErrorCode::not_full_dimensional,
                  "point set spans dimension " + std::to_string(rank) +
                      " < " + std::to_string(d));
  }
  if (d == 1) return hull_1d(points);

  // Initial simplex: greedy extension of the lexicographic order.
  std::vector<int> simplex = {order[0]};
  for (int j = 1; j < m && int(simplex.size()) < d + 1; ++j) {
    simplex.push_back(order[j]);
    if (affine_rank(points, simplex) < int(simplex.size()) - 1)
      simplex.pop_back();
  }

  IntVec interior_sum(d, Int(0));
  for (int v : simplex)
    for (int k = 0; k < d; ++k) interior_sum[k] += points[v][k];
  const Int interior_scale = d + 1;

  std::vector<TriFacet> surface;
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<int> verts;
    for (int k = 0; k <= d; ++k)
      if (k != omit) verts.push_back(simplex[k]);
    surface.push_back(make_tri_facet(points, std::move(verts), interior_sum,
                                     interior_scale));
  }

  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int idx : order) {
    if (in_simplex.count(idx)) continue;
    const IntVec& p = points[idx];

    std::vector<char> visible(surface.size(), 0);
    bool any_visible = false;
    for (std::size_t f = 0; f < surface.size(); ++f) {
      if (cmp(dot(surface[f].normal, p), surface[f].support) < 0) {
        visible[f] = 1;
        any_visible = true;
      }
    }
    if (!any_visible) continue;  // p inside or on the current hull

    // Horizon: ridges covered by exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (std::size_t f = 0; f < surface.size(); ++f) {
      if (!visible[f]) continue;
      for (int drop = 0; drop < d; ++drop) {
        std::vector<int> ridge;
        ridge.reserve(d - 1);
        for (int k = 0; k < d; ++k)
          if (k != drop) ridge.push_back(surface[f].verts[k]);
        ++ridge_count[std::move(ridge)];
      }
    }

    std::vector<TriFacet> next;
    for (std::size_t f = 0; f < surface.size(); ++f)
      if (!visible[f]) next.push_back(std::move(surface[f]));
    for (auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(idx);
      next.push_back(
          make_tri_facet(points, std::move(verts), interior_sum, interior_scale));
    }
    surface = std::move(next);
    check_surface(surface, d);
  }

  // Merge coplanar simplices into facets, in canonical (normal-lex) order.
  std::set<std::pair<IntVec, Int>> planes;
  for (const TriFacet& f : surface) planes.insert({f.normal, f.support});

  HullResult hull;
  hull.points = points;
  hull.dim = d;
  for (const auto& [normal, support] : planes) {
    Facet facet{normal, support, {}};
    for (int j = 0; j < m; ++j) {
      int side = cmp(dot(normal, points[j]), support);
      if (side < 0)
        throw Error(ErrorCode::internal, "hull facet inequality violated");
      if (side == 0) facet.incident.push_back(j);
    }
    hull.facets.push_back(std::move(facet));
  }

  // A point is a vertex iff its incident facet normals span R^d.
  for (int j = 0; j < m; ++j) {
    std::vector<IntVec> normals;
    for (const Facet& f : hull.facets)
      if (std::binary_search(f.incident.begin(), f.incident.end(), j))
        normals.push_back(f.normal);
    if (int(normals.size()) >= d &&
        lattice_rank(IntMat::from_rows(normals)) == d)
      hull.vertices.push_back(j);
  }
  return hull;
}

Int normalized_volume(const HullResult& hull) {
  int apex = hull.vertices[0];
  for (int v : hull.vertices)
    if (lex_less(hull.points[v], hull.points[apex])) apex = v;
  Int total = 0;
  for (const Facet& facet : hull.facets) {
    Int dist = lattice_distance(facet, hull.points[apex]);
    if (sgn(dist) > 0) total += dist * facet_normalized_volume(hull, facet);
  }
  return total;
}

Int normalized_volume(const std::vector<IntVec>& points) {
  return normalized_volume(convex_hull(points));
}

Int facet_normalized_volume(const std::vector<IntVec>& points,
                            const Facet& facet) {
  const int d = int(points[0].size());
  if (d == 1) return 1;

  // Coordinates on the facet: rows 1..d-1 of u with u * normal^T = e1 form a
  // basis of the kernel lattice; coefficients come from the inverse.
  IntMat column(d, 1);
  for (int i = 0; i < d; ++i) column.at(i, 0) = facet.normal[i];
  HnfResult hnf = hermite_normal_form(column);
  if (hnf.h.at(0, 0) != 1)
    throw Error(ErrorCode::internal, "facet normal is not primitive");
  IntMat inv = unimodular_inverse(hnf.u);

  const IntVec& anchor = points[facet.incident[0]];
  std::vector<IntVec> coords;
  coords.reserve(facet.incident.size());
  for (int j : facet.incident) {
    IntVec diff(d);
    for (int k = 0; k < d; ++k) diff[k] = points[j][k] - anchor[k];
    IntVec c(d, Int(0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) c[k] += diff[i] * inv.at(i, k);
    if (sgn(c[0]) != 0)
      throw Error(ErrorCode::internal, "incident point off the facet plane");
    coords.emplace_back(c.begin() + 1, c.end());
  }
  return normalized_volume(coords);
}

Int facet_normalized_volume(const HullResult& hull, const Facet& facet) {
  return facet_normalized_volume(hull.points, facet);
}

Int lattice_distance(const Facet& facet, const IntVec& point) {
  return dot(facet.normal, point) - facet.support;
}

std::vector<IntVec> lift_polytope(const std::vector<IntVec>& points, int j0) {
  if (j0 < 1 || j0 > int(points.size()))
    throw Error(ErrorCode::index_out_of_range,
                "j0 = " + std::to_string(j0) + " out of range 1.." +
                    std::to_string(points.size()));
  std::vector<IntVec> lifted;
  lifted.reserve(points.size());
  for (int j = 0; j < int(points.size()); ++j) {
    IntVec q = points[j];
    q.push_back(j == j0 - 1 ? 1 : 0);
    lifted.push_back(std::move(q));
  }
  return lifted;
}

}  // namespace gkz
