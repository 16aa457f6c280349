#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "gkz/errors.hpp"

namespace gkz {

// Arbitrary-precision integer. All lattice data (coordinates, normals,
// supports, volumes) is carried exactly; no floating point enters until
// a polynomial is expanded for display.
using Int = mpz_class;

using IntVec = std::vector<Int>;

// Exact rational, always canonical: gcd(|num|, den) = 1, den >= 1.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p/q" or "p" with optional sign; denominator normalized positive.
  static Rat parse(const std::string& text);

  const mpq_class& value() const { return q_; }
  Int numerator() const { return Int(q_.get_num()); }
  Int denominator() const { return Int(q_.get_den()); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Largest integer <= value.
  Int floor() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Rat& o) const {
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

// Complex number with exact rational real and imaginary parts.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im.is_zero(); }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

  // "p/q" for real values, "p/q + (r/s)*i" otherwise.
  std::string str() const;
};

GaussRat operator*(const Rat& s, const GaussRat& z);
GaussRat operator*(const Int& s, const GaussRat& z);

// True iff value is a rational integer (im = 0 and re integral).
bool integer_membership(const GaussRat& value);

}  // namespace gkz
