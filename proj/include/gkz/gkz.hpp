#pragma once

#include <utility>
#include <vector>

#include "gkz/charpoly.hpp"
#include "gkz/polytope.hpp"

namespace gkz {

// A validated point configuration A = {a(1), ..., a(m)} in Z^(n-1):
// points distinct, affinely generating the lattice, full-dimensional hull.
class Configuration {
 public:
  static Configuration build(std::vector<IntVec> points);

  const std::vector<IntVec>& points() const { return hull_.points; }
  int n() const { return hull_.dim + 1; }
  int m() const { return int(hull_.points.size()); }
  const HullResult& hull() const { return hull_; }

  // Normalized volume of the hull: the generic solution rank, and the
  // degree of every monodromy polynomial the configuration produces.
  const Int& rank() const { return rank_; }

 private:
  explicit Configuration(HullResult hull);

  HullResult hull_;
  Int rank_;
};

// alpha = gamma_n, beta_i = -gamma_i - 1 for i = 1..n-1.
std::pair<GaussRat, std::vector<GaussRat>> derive_alpha_beta(
    const std::vector<GaussRat>& gamma);

struct Parameter {
  std::vector<GaussRat> gamma;
  GaussRat alpha;
  std::vector<GaussRat> beta;

  explicit Parameter(std::vector<GaussRat> g);
};

struct ResonanceViolation {
  int facet_index;    // into Configuration::hull().facets
  IntVec functional;  // (u, -h) in Z^n, primitive
  GaussRat pairing;   // <functional, gamma>, an integer for violations
};

struct ResonanceReport {
  bool nonresonant = true;
  std::vector<ResonanceViolation> violations;
};

// gamma is resonant iff some facet functional (u, -h) of the hull pairs
// integrally with it; every violating facet is reported.
ResonanceReport nonresonance_check(const Configuration& config,
                                   const Parameter& param);

class ResonantParameterError : public Error {
 public:
  explicit ResonantParameterError(ResonanceReport report);
  const ResonanceReport& report() const { return report_; }

 private:
  ResonanceReport report_;
};

// Characteristic polynomial of the j0-th monodromy at infinity (j0 is
// 1-based): one factor (t^d - exp(-2*pi*i*(alpha*h + <beta, u>)))^Vol per
// facet at positive lattice distance d from a(j0). Throws
// ResonantParameterError for resonant gamma unless force is set, in which
// case the result is marked uncertified.
FactoredCharPoly monodromy_at_infinity(const Configuration& config,
                                       const Parameter& param, int j0,
                                       bool force = false);

inline Int rank(const Configuration& config) { return config.rank(); }

// Exact certificate that lifting a(j0) to height 1 turns the facet into a
// face with primitive normal (u, -d), unchanged support, and unchanged
// normalized volume. Every field must come back true.
struct LiftedFacetCheck {
  bool normal_primitive = false;
  bool support_matches = false;
  bool incidence_matches = false;
  bool volume_matches = false;

  bool ok() const {
    return normal_primitive && support_matches && incidence_matches &&
           volume_matches;
  }
};

LiftedFacetCheck check_lifted_facet(const Configuration& config, int j0,
                                    int facet_index);

}  // namespace gkz
