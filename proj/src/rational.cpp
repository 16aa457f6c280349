#include "gkz/rational.hpp"

#include <cctype>

namespace gkz {

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0)
    throw Error(ErrorCode::parse_error, "rational with zero denominator");
  q_ = mpq_class(num) / mpq_class(den);
  q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  auto bad = [&] {
    return Error(ErrorCode::parse_error, "invalid rational \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  auto check_int = [&](const std::string& s) {
    // digits only; the single optional sign is stripped before this
    if (s.empty()) throw bad();
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
  };
  std::string body = text;
  bool negate = false;
  if (body[0] == '+' || body[0] == '-') {
    negate = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  mpq_class q;
  if (slash == std::string::npos) {
    check_int(body);
    q = mpq_class(mpz_class(body));
  } else {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (sgn(d) == 0) throw bad();
    q = mpq_class(mpz_class(num)) / mpq_class(d);
  }
  q.canonicalize();
  if (negate) q = -q;
  return Rat(q);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero())
    throw Error(ErrorCode::internal, "rational division by zero");
  return Rat(mpq_class(q_ / o.q_));
}

Int Rat::floor() const {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return f;
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string GaussRat::str() const {
  if (is_real()) return re.str();
  return re.str() + " + (" + im.str() + ")*i";
}

GaussRat operator*(const Rat& s, const GaussRat& z) {
  return {s * z.re, s * z.im};
}

GaussRat operator*(const Int& s, const GaussRat& z) {
  return Rat(s) * z;
}

bool integer_membership(const GaussRat& value) {
  return value.im.is_zero() && value.re.is_integer();
}

}  // namespace gkz
