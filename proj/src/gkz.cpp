#include "gkz/gkz.hpp"

#include <algorithm>
#include <set>

namespace gkz {

Configuration::Configuration(HullResult hull)
    : hull_(std::move(hull)), rank_(normalized_volume(hull_)) {}

Configuration Configuration::build(std::vector<IntVec> points) {
  if (points.size() < 2)
    throw Error(ErrorCode::not_full_dimensional,
                "configuration needs at least two points");
  {
    std::set<IntVec> seen;
    for (const IntVec& p : points)
      if (!seen.insert(p).second)
        throw Error(ErrorCode::duplicate_points,
                    "duplicate point in configuration");
  }
  Int index = affine_lattice_index(points);
  if (sgn(index) == 0)
    throw Error(ErrorCode::not_full_dimensional,
                "points do not span the ambient space");
  if (index != 1)
    throw Error(ErrorCode::not_affinely_generating,
                "points generate an affine sublattice of index " +
                    index.get_str());
  return Configuration(convex_hull(points));
}

std::pair<GaussRat, std::vector<GaussRat>> derive_alpha_beta(
    const std::vector<GaussRat>& gamma) {
  if (gamma.size() < 2)
    throw Error(ErrorCode::parse_error, "gamma needs at least two entries");
  GaussRat alpha = gamma.back();
  std::vector<GaussRat> beta;
  beta.reserve(gamma.size() - 1);
  const GaussRat one{Rat(1)};
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
    beta.push_back(-gamma[i] - one);
  return {std::move(alpha), std::move(beta)};
}

Parameter::Parameter(std::vector<GaussRat> g) : gamma(std::move(g)) {
  auto [a, b] = derive_alpha_beta(gamma);
  alpha = std::move(a);
  beta = std::move(b);
}

ResonanceReport nonresonance_check(const Configuration& config,
                                   const Parameter& param) {
  if (int(param.gamma.size()) != config.n())
    throw Error(ErrorCode::parse_error,
                "gamma has " + std::to_string(param.gamma.size()) +
                    " entries, expected " + std::to_string(config.n()));
  ResonanceReport report;
  const auto& facets = config.hull().facets;
  for (int fi = 0; fi < int(facets.size()); ++fi) {
    const Facet& facet = facets[fi];
    IntVec functional = facet.normal;
    functional.push_back(-facet.support);
    GaussRat pairing;
    for (int k = 0; k < config.n(); ++k)
      pairing = pairing + functional[k] * param.gamma[k];
    if (integer_membership(pairing))
      report.violations.push_back({fi, std::move(functional), pairing});
  }
  report.nonresonant = report.violations.empty();
  return report;
}

ResonantParameterError::ResonantParameterError(ResonanceReport report)
    : Error(ErrorCode::resonant_parameter,
            "parameter is resonant (" +
                std::to_string(report.violations.size()) +
                " facet functional(s) pair integrally)"),
      report_(std::move(report)) {}

FactoredCharPoly monodromy_at_infinity(const Configuration& config,
                                       const Parameter& param, int j0,
                                       bool force) {
  if (j0 < 1 || j0 > config.m())
    throw Error(ErrorCode::index_out_of_range,
                "j0 = " + std::to_string(j0) + " out of range 1.." +
                    std::to_string(config.m()));
  ResonanceReport resonance = nonresonance_check(config, param);
  if (!resonance.nonresonant && !force)
    throw ResonantParameterError(std::move(resonance));

  const HullResult& hull = config.hull();
  const IntVec& marked = config.points()[j0 - 1];
  std::vector<MonodromyFactor> factors;
  for (int fi = 0; fi < int(hull.facets.size()); ++fi) {
    const Facet& facet = hull.facets[fi];
    Int dist = lattice_distance(facet, marked);
    if (sgn(dist) <= 0) continue;  // a(j0) lies on this facet
    GaussRat exponent = facet.support * param.alpha;
    for (std::size_t i = 0; i < param.beta.size(); ++i)
      exponent = exponent + facet.normal[i] * param.beta[i];
    factors.push_back(make_factor(dist, std::move(exponent),
                                  facet_normalized_volume(hull, facet), fi));
  }
  return FactoredCharPoly::canonicalize(std::move(factors),
                                        resonance.nonresonant);
}

LiftedFacetCheck check_lifted_facet(const Configuration& config, int j0,
                                    int facet_index) {
  const HullResult& hull = config.hull();
  const Facet& facet = hull.facets.at(facet_index);
  const IntVec& marked = config.points()[j0 - 1];
  Int dist = lattice_distance(facet, marked);
  if (sgn(dist) <= 0)
    throw Error(ErrorCode::internal,
                "lifted-facet check needs positive lattice distance");

  std::vector<IntVec> lifted = lift_polytope(config.points(), j0);
  IntVec lifted_normal = facet.normal;
  lifted_normal.push_back(-dist);

  LiftedFacetCheck check;
  check.normal_primitive = make_primitive(lifted_normal).scale == 1;

  // Support and equality set of the lifted functional over the lift.
  std::vector<int> equality;
  bool support_ok = true;
  for (int j = 0; j < int(lifted.size()); ++j) {
    int side = cmp(dot(lifted_normal, lifted[j]), facet.support);
    if (side < 0) support_ok = false;
    if (side == 0) equality.push_back(j);
  }
  check.support_matches = support_ok && !equality.empty();

  std::vector<int> expected = facet.incident;
  expected.push_back(j0 - 1);
  std::sort(expected.begin(), expected.end());
  check.incidence_matches = equality == expected;

  if (check.support_matches && check.incidence_matches) {
    Facet lifted_facet{lifted_normal, facet.support, equality};
    check.volume_matches = facet_normalized_volume(lifted, lifted_facet) ==
                           facet_normalized_volume(hull, facet);
  }
  return check;
}

}  // namespace gkz
