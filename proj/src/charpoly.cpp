#include "gkz/charpoly.hpp"

#include <algorithm>
#include <cmath>

#include "gkz/errors.hpp"

namespace gkz {

namespace {

using CLD = std::complex<long double>;

long double to_ld(const Rat& r) { return (long double)r.to_double(); }

CLD exp_minus_2pi_i(const GaussRat& exponent) {
  const long double two_pi = 2.0L * acosl(-1.0L);
  // exp(-2*pi*i*(x + i*y)) = exp(2*pi*y) * exp(-2*pi*i*x)
  long double mag = expl(two_pi * to_ld(exponent.im));
  long double ang = -two_pi * to_ld(exponent.re);
  return {mag * cosl(ang), mag * sinl(ang)};
}

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw Error(ErrorCode::scale_guard,
                std::string(what) + " too large for numeric expansion");
  return v.get_si();
}

std::strong_ordering factor_key_cmp(const MonodromyFactor& a,
                                    const MonodromyFactor& b) {
  int c = cmp(a.degree, b.degree);
  if (c != 0) return c <=> 0;
  auto r = a.exponent.re <=> b.exponent.re;
  if (r != std::strong_ordering::equal) return r;
  return a.exponent.im <=> b.exponent.im;
}

}  // namespace

MonodromyFactor make_factor(Int degree, GaussRat raw_exponent, Int multiplicity,
                            int facet_index) {
  if (sgn(degree) <= 0)
    throw Error(ErrorCode::internal, "monodromy factor with degree <= 0");
  if (sgn(multiplicity) <= 0)
    throw Error(ErrorCode::internal, "monodromy factor with multiplicity <= 0");
  Int shift = raw_exponent.re.floor();
  GaussRat reduced{raw_exponent.re - Rat(shift), raw_exponent.im};
  return {std::move(degree), std::move(reduced), std::move(raw_exponent),
          std::move(shift), std::move(multiplicity), facet_index};
}

FactoredCharPoly FactoredCharPoly::canonicalize(
    std::vector<MonodromyFactor> factors, bool certified) {
  // The raw exponent is authoritative; reduction and shift are recomputed.
  for (MonodromyFactor& f : factors)
    f = make_factor(f.degree, f.exponent_raw, f.multiplicity, f.facet_index);
  std::sort(factors.begin(), factors.end(),
            [](const MonodromyFactor& a, const MonodromyFactor& b) {
              auto c = factor_key_cmp(a, b);
              if (c != std::strong_ordering::equal)
                return c == std::strong_ordering::less;
              return a.facet_index < b.facet_index;
            });
  std::vector<MonodromyFactor> merged;
  for (MonodromyFactor& f : factors) {
    if (!merged.empty() &&
        factor_key_cmp(merged.back(), f) == std::strong_ordering::equal) {
      MonodromyFactor& back = merged.back();
      back.multiplicity += f.multiplicity;
      if (!(back.exponent_raw == f.exponent_raw)) {
        // Distinct origins; only the reduced value is meaningful now.
        back.exponent_raw = back.exponent;
        back.exponent_shift = 0;
        back.facet_index = -1;
      }
    } else {
      merged.push_back(std::move(f));
    }
  }
  FactoredCharPoly p;
  p.factors_ = std::move(merged);
  p.certified_ = certified;
  return p;
}

Int FactoredCharPoly::degree() const {
  Int total = 0;
  for (const MonodromyFactor& f : factors_) total += f.degree * f.multiplicity;
  return total;
}

bool FactoredCharPoly::operator==(const FactoredCharPoly& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const MonodromyFactor& a = factors_[i];
    const MonodromyFactor& b = o.factors_[i];
    if (a.degree != b.degree || !(a.exponent == b.exponent) ||
        a.multiplicity != b.multiplicity)
      return false;
  }
  return true;
}

std::vector<ZetaFactor> to_zeta_form(const FactoredCharPoly& p) {
  std::vector<ZetaFactor> zeta;
  zeta.reserve(p.factors().size());
  for (const MonodromyFactor& f : p.factors())
    zeta.push_back({f.degree, f.exponent, f.multiplicity});
  return zeta;
}

std::vector<std::complex<double>> expand(const FactoredCharPoly& p,
                                         int digits) {
  if (digits < 1)
    throw Error(ErrorCode::parse_error, "digits must be >= 1");
  std::vector<CLD> coeff = {CLD(1.0L, 0.0L)};
  for (const MonodromyFactor& f : p.factors()) {
    long d = to_long(f.degree, "factor degree");
    long mult = to_long(f.multiplicity, "factor multiplicity");
    CLD rho = exp_minus_2pi_i(f.exponent);
    for (long rep = 0; rep < mult; ++rep) {
      std::vector<CLD> next(coeff.size() + d, CLD(0.0L, 0.0L));
      for (std::size_t i = 0; i < coeff.size(); ++i) {
        next[i + d] += coeff[i];
        next[i] -= rho * coeff[i];
      }
      coeff = std::move(next);
    }
  }
  std::vector<std::complex<double>> out(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i)
    out[i] = {double(coeff[i].real()), double(coeff[i].imag())};
  out.back() = {1.0, 0.0};
  return out;
}

std::complex<double> eval(const FactoredCharPoly& p, std::complex<double> t) {
  CLD acc(1.0L, 0.0L);
  CLD tl(t.real(), t.imag());
  for (const MonodromyFactor& f : p.factors()) {
    long d = to_long(f.degree, "factor degree");
    long mult = to_long(f.multiplicity, "factor multiplicity");
    CLD td(1.0L, 0.0L);
    for (long k = 0; k < d; ++k) td *= tl;
    CLD base = td - exp_minus_2pi_i(f.exponent);
    for (long k = 0; k < mult; ++k) acc *= base;
  }
  return {double(acc.real()), double(acc.imag())};
}

std::vector<std::complex<double>> root_list(const FactoredCharPoly& p) {
  const long double two_pi = 2.0L * acosl(-1.0L);
  std::vector<std::complex<double>> roots;
  for (const MonodromyFactor& f : p.factors()) {
    long d = to_long(f.degree, "factor degree");
    long mult = to_long(f.multiplicity, "factor multiplicity");
    // t^d = exp(-2*pi*i*delta): modulus exp(2*pi*Im(delta)/d), arguments
    // (-2*pi*Re(delta) + 2*pi*k)/d.
    long double mag = expl(two_pi * to_ld(f.exponent.im) / d);
    for (long k = 0; k < d; ++k) {
      long double ang = (-two_pi * to_ld(f.exponent.re) + two_pi * k) / d;
      std::complex<double> root(double(mag * cosl(ang)),
                                double(mag * sinl(ang)));
      for (long rep = 0; rep < mult; ++rep) roots.push_back(root);
    }
  }
  return roots;
}

std::complex<double> factor_root_power(const GaussRat& exponent) {
  CLD v = exp_minus_2pi_i(exponent);
  return {double(v.real()), double(v.imag())};
}

std::string to_text(const FactoredCharPoly& p) {
  if (p.factors().empty()) return "1";
  std::string out;
  for (const MonodromyFactor& f : p.factors()) {
    if (!out.empty()) out += " * ";
    out += "(t^" + f.degree.get_str() + " - exp(-2*pi*i*(" +
           f.exponent.str() + ")))^" + f.multiplicity.get_str();
  }
  return out;
}

std::string to_zeta_text(const FactoredCharPoly& p) {
  if (p.factors().empty()) return "1";
  std::string out;
  for (const ZetaFactor& f : to_zeta_form(p)) {
    if (!out.empty()) out += " * ";
    out += "(1 - exp(2*pi*i*(" + f.exponent.str() + "))*t^" +
           f.degree.get_str() + ")^" + f.multiplicity.get_str();
  }
  return out;
}

}  // namespace gkz
