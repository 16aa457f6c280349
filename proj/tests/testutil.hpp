#pragma once

// Deterministic generators shared by the property and acceptance suites.

#include <random>
#include <set>
#include <vector>

#include "gkz/gkz.hpp"

namespace gkz::testing {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  Rat rational(long num_range, long max_den) {
    return Rat(Int(uniform(-num_range, num_range)), Int(uniform(1, max_den)));
  }

 private:
  std::mt19937_64 eng_;
};

// Distinct points in [-coord, coord]^dim that affinely generate Z^dim.
inline std::vector<IntVec> random_configuration(TestRng& rng, int dim,
                                                int max_m = 10,
                                                long coord = 4) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int m = int(rng.uniform(std::max(2, dim + 1), max_m));
    std::set<IntVec> pts;
    for (int tries = 0; int(pts.size()) < m && tries < 200; ++tries) {
      IntVec p(dim);
      for (int k = 0; k < dim; ++k) p[k] = rng.uniform(-coord, coord);
      pts.insert(std::move(p));
    }
    std::vector<IntVec> points(pts.begin(), pts.end());
    if (int(points.size()) == m && affine_lattice_index(points) == 1)
      return points;
  }
  throw Error(ErrorCode::internal, "random configuration generation stalled");
}

// Product of a few elementary operations, rejected until all entries fit
// in [-max_abs, max_abs].
inline IntMat random_unimodular(TestRng& rng, int dim, long max_abs = 2) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    IntMat g = IntMat::identity(dim);
    int ops = int(rng.uniform(1, 2 * dim + 2));
    for (int k = 0; k < ops; ++k) {
      int a = int(rng.uniform(0, dim - 1));
      int b = int(rng.uniform(0, dim - 1));
      switch (rng.uniform(0, 2)) {
        case 0:
          if (a != b) g.addmul_row(a, b, Int(rng.uniform(0, 1) ? 1 : -1));
          break;
        case 1:
          g.swap_rows(a, b);
          break;
        default:
          g.negate_row(a);
          break;
      }
    }
    bool ok = true;
    for (int i = 0; i < dim && ok; ++i)
      for (int j = 0; j < dim && ok; ++j)
        if (cmp(abs(g.at(i, j)), Int(max_abs)) > 0) ok = false;
    if (ok) return g;
  }
  throw Error(ErrorCode::internal, "random unimodular generation stalled");
}

// Purely imaginary gamma whose facet pairings are all nonreal: entries
// i * P^(n-k) with P exceeding twice every |normal| and |support| entry,
// so a vanishing pairing would force a zero functional.
inline std::vector<GaussRat> nonresonant_imaginary_gamma(
    const Configuration& config) {
  Int bound = 1;
  for (const Facet& f : config.hull().facets) {
    for (const Int& x : f.normal)
      if (mpz_cmpabs(x.get_mpz_t(), bound.get_mpz_t()) > 0) bound = abs(x);
    if (mpz_cmpabs(f.support.get_mpz_t(), bound.get_mpz_t()) > 0)
      bound = abs(f.support);
  }
  Int p = 2 * bound + 3;
  std::vector<GaussRat> gamma(config.n());
  Int power = 1;
  for (int k = config.n() - 1; k >= 0; --k) {
    gamma[k] = GaussRat{Rat(0), Rat(power)};
    power *= p;
  }
  return gamma;
}

inline std::vector<GaussRat> random_real_nonresonant_gamma(
    TestRng& rng, const Configuration& config) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<GaussRat> gamma;
    for (int k = 0; k < config.n(); ++k)
      gamma.push_back(GaussRat{rng.rational(4, 7)});
    Parameter param(gamma);
    if (nonresonance_check(config, param).nonresonant) return gamma;
  }
  throw Error(ErrorCode::internal, "nonresonant gamma sampling stalled");
}

// The classical Gauss parameter vector (c-1, -a, c-a-b-1).
inline std::vector<GaussRat> gauss_gamma(const Rat& a, const Rat& b,
                                         const Rat& c) {
  return {GaussRat{c - Rat(1)}, GaussRat{-a}, GaussRat{c - a - b - Rat(1)}};
}

inline const std::vector<IntVec>& gauss_points() {
  static const std::vector<IntVec> pts = {
      {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(0)}, {Int(-1), Int(1)}};
  return pts;
}

}  // namespace gkz::testing
