// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "gkz/job.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace gkz;
using gkz::testing::TestRng;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %d. %-28s %s\n", pass ? "PASS" : "FAIL", number, name,
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  std::vector<IntVec> points;
  int dim;
};

// Shared random corpus: 210 configurations, 70 per dimension 1..3,
// coordinates in [-4, 4], at most 10 points, affinely generating.
std::vector<Instance> build_corpus() {
  TestRng rng(20240601);
  std::vector<Instance> corpus;
  for (int dim = 1; dim <= 3; ++dim)
    for (int k = 0; k < 70; ++k)
      corpus.push_back({testing::random_configuration(rng, dim), dim});
  return corpus;
}

void criterion_gauss_regression() {
  auto start = Clock::now();
  TestRng rng(1001);
  Configuration config = Configuration::build(testing::gauss_points());
  int done = 0, bad = 0;
  while (done < 50) {
    Rat a = rng.rational(6, 9), b = rng.rational(6, 9), c = rng.rational(6, 9);
    if (a.is_integer() || b.is_integer() || (c - a).is_integer() ||
        (c - b).is_integer())
      continue;
    Parameter param(testing::gauss_gamma(a, b, c));
    FactoredCharPoly got = monodromy_at_infinity(config, param, 1);
    if (!(got == oracle::gauss_regression(a, b, c)) || !got.certified()) ++bad;
    ++done;
  }
  double elapsed = seconds_since(start);
  bool pass = bad == 0 && elapsed < 1.0;
  report(1, "gauss-regression", pass,
         std::to_string(done) + " parameter triples, " +
             std::to_string(bad) + " mismatches, " + std::to_string(elapsed) +
             " s (limit 1 s)");
}

void criterion_degree_identity(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  long checked = 0, bad = 0;
  for (const Instance& inst : corpus) {
    Configuration config = Configuration::build(inst.points);
    Parameter param(testing::nonresonant_imaginary_gamma(config));
    for (int j0 = 1; j0 <= config.m(); ++j0) {
      FactoredCharPoly poly = monodromy_at_infinity(config, param, j0);
      if (poly.degree() != config.rank()) ++bad;
      ++checked;
    }
  }
  double elapsed = seconds_since(start);
  bool pass = bad == 0 && elapsed < 30.0;
  report(2, "degree-identity", pass,
         std::to_string(corpus.size()) + " configurations, " +
             std::to_string(checked) + " (config, j0) pairs, " +
             std::to_string(bad) + " mismatches, " + std::to_string(elapsed) +
             " s (limit 30 s)");
}

void criterion_lifted_facets(const std::vector<Instance>& corpus) {
  long checked = 0, bad = 0;
  for (const Instance& inst : corpus) {
    Configuration config = Configuration::build(inst.points);
    for (int j0 = 1; j0 <= config.m(); ++j0) {
      const IntVec& marked = config.points()[j0 - 1];
      for (int fi = 0; fi < int(config.hull().facets.size()); ++fi) {
        if (sgn(lattice_distance(config.hull().facets[fi], marked)) <= 0)
          continue;
        if (!check_lifted_facet(config, j0, fi).ok()) ++bad;
        ++checked;
      }
    }
  }
  report(3, "lifted-facet-lemma", bad == 0,
         std::to_string(checked) + " facet lifts, " + std::to_string(bad) +
             " failures");
}

void criterion_oracle_equivalence(const std::vector<Instance>& corpus) {
  long checked = 0, bad_hull = 0, bad_volume = 0;
  for (const Instance& inst : corpus) {
    HullResult hull = convex_hull(inst.points);
    std::set<std::pair<IntVec, Int>> got;
    for (const Facet& f : hull.facets) got.insert({f.normal, f.support});
    if (got != oracle::brute_facets(inst.points).facets) ++bad_hull;
    if (normalized_volume(hull) != oracle::ehrhart_volume(inst.points))
      ++bad_volume;
    ++checked;
  }
  report(4, "oracle-equivalence", bad_hull == 0 && bad_volume == 0,
         std::to_string(checked) + " instances, " + std::to_string(bad_hull) +
             " hull / " + std::to_string(bad_volume) + " volume mismatches");
}

void criterion_resonance_boundary() {
  Configuration config = Configuration::build(testing::gauss_points());
  // 20 values per axis with step 1/4, covering the integer slices -2..2
  std::vector<Rat> grid;
  for (long k = -8; k <= 11; ++k) grid.push_back(Rat(Int(k), Int(4)));
  long checked = 0, bad = 0;
  for (const Rat& a : grid)
    for (const Rat& b : grid)
      for (const Rat& c : grid) {
        Parameter param(testing::gauss_gamma(a, b, c));
        bool expected = !a.is_integer() && !b.is_integer() &&
                        !(c - a).is_integer() && !(c - b).is_integer();
        if (nonresonance_check(config, param).nonresonant != expected) ++bad;
        ++checked;
      }
  report(5, "resonance-boundary", bad == 0,
         std::to_string(checked) + " grid points, " + std::to_string(bad) +
             " misclassified");
}

void criterion_equivariance() {
  TestRng rng(6001);
  long triples = 0, bad = 0;
  while (triples < 120) {
    int dim = int(rng.uniform(1, 3));
    auto pts = testing::random_configuration(rng, dim);
    Configuration config = Configuration::build(pts);
    std::vector<GaussRat> gamma =
        testing::random_real_nonresonant_gamma(rng, config);
    Parameter param(gamma);
    int j0 = int(rng.uniform(1, config.m()));
    FactoredCharPoly expected = monodromy_at_infinity(config, param, j0);

    // translation by w with gamma_i' = gamma_i + gamma_n * w_i
    IntVec w(dim);
    for (auto& x : w) x = rng.uniform(-3, 3);
    std::vector<IntVec> shifted = pts;
    for (auto& p : shifted)
      for (int k = 0; k < dim; ++k) p[k] += w[k];
    std::vector<GaussRat> shifted_gamma = gamma;
    for (int i = 0; i < dim; ++i)
      shifted_gamma[i] = gamma[i] + w[i] * gamma[dim];
    if (!(monodromy_at_infinity(Configuration::build(shifted),
                                Parameter(shifted_gamma), j0) == expected))
      ++bad;

    // unimodular g with beta'' = g beta, gamma'' = g(gamma + 1) - 1
    IntMat g = testing::random_unimodular(rng, dim);
    std::vector<IntVec> mapped;
    for (const auto& p : pts) mapped.push_back(matvec(g, p));
    std::vector<GaussRat> mapped_gamma(dim + 1);
    for (int r = 0; r < dim; ++r) {
      GaussRat acc;
      for (int c = 0; c < dim; ++c)
        acc = acc + g.at(r, c) * (gamma[c] + GaussRat{Rat(1)});
      mapped_gamma[r] = acc - GaussRat{Rat(1)};
    }
    mapped_gamma[dim] = gamma[dim];
    if (!(monodromy_at_infinity(Configuration::build(mapped),
                                Parameter(mapped_gamma), j0) == expected))
      ++bad;

    ++triples;
  }
  report(6, "equivariance", bad == 0,
         std::to_string(triples) +
             " (instance, g, w) triples, both actions, " +
             std::to_string(bad) + " mismatches");
}

void criterion_roots_on_circle() {
  TestRng rng(7001);
  long roots_checked = 0, bad_roots = 0, evals_checked = 0, bad_evals = 0;

  auto check_poly = [&](const FactoredCharPoly& poly) {
    for (std::complex<double> root : root_list(poly)) {
      if (std::abs(std::abs(root) - 1.0) > 1e-12) ++bad_roots;
      ++roots_checked;
    }
    auto coeff = expand(poly);
    for (int rep = 0; rep < 4; ++rep) {
      std::complex<double> t(rng.uniform(-20, 20) / 10.0,
                             rng.uniform(-20, 20) / 10.0);
      std::complex<double> horner(0, 0);
      for (std::size_t i = coeff.size(); i-- > 0;) horner = horner * t + coeff[i];
      std::complex<double> direct = eval(poly, t);
      double scale = std::max(1.0, std::abs(direct));
      if (std::abs(direct - horner) > 1e-10 * scale) ++bad_evals;
      ++evals_checked;
    }
  };

  Configuration gauss = Configuration::build(testing::gauss_points());
  Parameter gauss_param(
      testing::gauss_gamma(Rat(Int(1), Int(3)), Rat(Int(1), Int(5)),
                           Rat(Int(1), Int(2))));
  check_poly(monodromy_at_infinity(gauss, gauss_param, 1));

  int instances = 0;
  while (instances < 30) {
    int dim = int(rng.uniform(1, 2));
    Configuration config = Configuration::build(
        testing::random_configuration(rng, dim, 7, 3));
    if (config.rank() > 40) continue;  // keep the expansion well-conditioned
    std::vector<GaussRat> gamma =
        testing::random_real_nonresonant_gamma(rng, config);
    Parameter param(gamma);
    int j0 = int(rng.uniform(1, config.m()));
    check_poly(monodromy_at_infinity(config, param, j0));
    ++instances;
  }

  report(7, "roots-on-circle", bad_roots == 0 && bad_evals == 0,
         std::to_string(roots_checked) + " roots, " +
             std::to_string(evals_checked) + " expand/eval probes, " +
             std::to_string(bad_roots + bad_evals) + " out of tolerance");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  auto corpus = build_corpus();
  criterion_gauss_regression();
  criterion_degree_identity(corpus);
  criterion_lifted_facets(corpus);
  criterion_oracle_equivalence(corpus);
  criterion_resonance_boundary();
  criterion_equivariance();
  criterion_roots_on_circle();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion/criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
