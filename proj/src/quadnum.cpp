#include "realcurve/quadnum.hpp"

#include <cmath>
#include <sstream>

#include "realcurve/error.hpp"

namespace realcurve {

namespace {

// Removes square factors found by trial division; returns the cofactor k
// with d_in = k^2 * d_out.
Integer strip_squares(Integer& d) {
  Integer k = 1;
  Integer mag = abs(d);
  for (unsigned long p = 2; p < 2000; ++p) {
    const unsigned long pp = p * p;
    if (pp > mag) break;
    while (mpz_divisible_ui_p(mag.get_mpz_t(), pp) != 0) {
      mag /= pp;
      k *= p;
    }
  }
  d = d < 0 ? Integer(-mag) : mag;
  return k;
}

}  // namespace

bool same_field(const Integer& d1, const Integer& d2) {
  if (d1 == d2) return true;
  if ((d1 < 0) != (d2 < 0)) return false;
  Integer prod = d1 * d2;
  return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

QuadNum::QuadNum(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  normalize();
}

void QuadNum::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  const Integer k = strip_squares(d_);
  b_ *= Rational(k);
  if (d_ > 0 && mpz_perfect_square_p(d_.get_mpz_t()) != 0) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * Rational(r);
    b_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

QuadNum QuadNum::sqrt_of(const Rational& q) {
  // sqrt(n/m) = sqrt(n*m) / m
  const Integer nm = q.get_num() * q.get_den();
  if (nm == 0) return QuadNum(0);
  return QuadNum(0, Rational(1) / Rational(q.get_den()), nm);
}

QuadNum QuadNum::aligned(const QuadNum& o) const {
  if (o.b_ == 0 || b_ == 0 || o.d_ == d_) return o;
  if (!same_field(d_, o.d_))
    throw UnsupportedExtension("arithmetic across distinct quadratic fields");
  // sqrt(d2) = sqrt(d1 d2) / d1 * sqrt(d1)
  Integer prod = d_ * o.d_, r;
  mpz_sqrt(r.get_mpz_t(), prod.get_mpz_t());
  QuadNum out;
  out.a_ = o.a_;
  out.b_ = o.b_ * Rational(r) / Rational(d_);
  out.d_ = d_;
  return out;
}

QuadNum QuadNum::conj() const {
  QuadNum c = *this;
  c.b_ = -c.b_;
  return c;
}

Rational QuadNum::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

int QuadNum::sign() const {
  if (!is_real()) throw Error("sign of a non-real number");
  const int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

double QuadNum::re() const {
  if (d_ > 0) return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
  return a_.get_d();
}

double QuadNum::im() const {
  if (d_ < 0) return b_.get_d() * std::sqrt(-d_.get_d());
  return 0.0;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  if (b_ == 0) {
    const Rational a = a_ + o.a_;
    *this = o;
    a_ = a;
    return *this;
  }
  const QuadNum w = aligned(o);
  a_ += w.a_;
  b_ += w.b_;
  normalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) { return *this += QuadNum(-o.a_, -o.b_, o.d_); }

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  if (b_ == 0) {
    const Rational s = a_;
    *this = o;
    a_ *= s;
    b_ *= s;
    normalize();
    return *this;
  }
  const QuadNum w = aligned(o);
  const Rational a = a_ * w.a_ + Rational(d_) * b_ * w.b_;
  const Rational b = a_ * w.b_ + b_ * w.a_;
  a_ = a;
  b_ = b;
  normalize();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

bool operator==(const QuadNum& l, const QuadNum& r) {
  if (l.b_ == 0 && r.b_ == 0) return l.a_ == r.a_;
  if (l.b_ == 0 || r.b_ == 0) return false;
  if (!same_field(l.d_, r.d_)) return false;
  const QuadNum w = l.aligned(r);
  return l.a_ == w.a_ && l.b_ == w.b_;
}

QuadNum QuadNum::pow(int k) const {
  if (k < 0) return QuadNum(1) / pow(-k);
  QuadNum r(1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

int compare(const QuadNum& l, const QuadNum& r) { return (l - r).sign(); }

QuadNum eval(const UniPoly& p, const QuadNum& t) {
  QuadNum acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + QuadNum(p[i]);
  return acc;
}

std::string to_string(const QuadNum& v) {
  if (v.b() == 0) return to_string(v.a());
  std::ostringstream os;
  Rational b = v.b();
  const std::string rad = "sqrt(" + v.d().get_str() + ")";
  if (v.a() != 0) {
    os << to_string(v.a()) << (b < 0 ? " - " : " + ");
    if (b < 0) b = -b;
  } else if (b < 0) {
    os << "-";
    b = -b;
  }
  if (b != 1) os << to_string(b) << "*";
  os << rad;
  return os.str();
}

}  // namespace realcurve
