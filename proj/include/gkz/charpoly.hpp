#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

// One factor (t^degree - exp(-2*pi*i*exponent))^multiplicity.
//
// The exponent is kept twice: as produced by the formula and reduced with
// real part in [0, 1). The root only depends on the reduced value; the raw
// value and the integer shift keep the originating data recoverable.
struct MonodromyFactor {
  Int degree;
  GaussRat exponent;      // reduced
  GaussRat exponent_raw;
  Int exponent_shift;     // exponent_raw.re - exponent.re
  Int multiplicity;
  int facet_index = -1;   // position in the hull's canonical facet order
};

MonodromyFactor make_factor(Int degree, GaussRat raw_exponent, Int multiplicity,
                            int facet_index = -1);

// Product of monodromy factors in canonical form: sorted by (degree,
// reduced exponent), factors with equal key merged by adding
// multiplicities. The empty product is the constant polynomial 1.
class FactoredCharPoly {
 public:
  FactoredCharPoly() = default;

  static FactoredCharPoly canonicalize(std::vector<MonodromyFactor> factors,
                                       bool certified = true);

  const std::vector<MonodromyFactor>& factors() const { return factors_; }
  bool certified() const { return certified_; }
  Int degree() const;

  // Canonical equality: same (degree, reduced exponent, multiplicity) list.
  bool operator==(const FactoredCharPoly& o) const;

 private:
  std::vector<MonodromyFactor> factors_;
  bool certified_ = true;
};

// The same data read as (1 - exp(2*pi*i*exponent) * t^degree)^multiplicity.
// Per factor, t^d - exp(-2*pi*i*delta) = (-exp(-2*pi*i*delta)) *
// (1 - exp(2*pi*i*delta) * t^d), so the two products agree up to the
// scalar prod((-exp(-2*pi*i*delta))^multiplicity).
struct ZetaFactor {
  Int degree;
  GaussRat exponent;
  Int multiplicity;
};

std::vector<ZetaFactor> to_zeta_form(const FactoredCharPoly& p);

// Dense coefficients in ascending powers, length degree + 1, leading
// coefficient exactly 1. Computation carries extended-precision guard
// digits; `digits` (>= 1) is the significant-digit target used by callers
// when formatting.
std::vector<std::complex<double>> expand(const FactoredCharPoly& p,
                                         int digits = 15);

std::complex<double> eval(const FactoredCharPoly& p, std::complex<double> t);

// All roots with multiplicity (degree-many); intended for small degrees.
std::vector<std::complex<double>> root_list(const FactoredCharPoly& p);

// exp(-2*pi*i*exponent) in double precision.
std::complex<double> factor_root_power(const GaussRat& exponent);

// Canonical rendering: factors "(t^d - exp(-2*pi*i*(...)))^m" joined by
// " * "; exponents printed reduced, "p/q + (r/s)*i" when complex.
std::string to_text(const FactoredCharPoly& p);
std::string to_zeta_text(const FactoredCharPoly& p);

}  // namespace gkz
