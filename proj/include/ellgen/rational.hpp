#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ellgen {

using BigInt = mpz_class;
using Rational = mpq_class;

// Rational with numerator p and denominator q, canonicalized.
Rational make_rational(long p, long q = 1);
Rational make_rational(const BigInt& p, const BigInt& q);

// n-th Bernoulli number in the convention B1 = -1/2.  Memoized behind a
// mutex; safe to call from several threads.
Rational bernoulli(int n);

// Sum of k-th powers of the positive divisors of n.  Rejects n < 1.
BigInt sigma(int k, long n);

BigInt binomial(long n, long k);

// "p/q" or "p" (decimal, optional leading minus).
Rational parse_rational(const std::string& s);
// Canonical "p/q" form with explicit denominator.
std::string rational_json_str(const Rational& r);
// Human form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

// Element of Q(i).  All arithmetic is exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// (-i)^k for any integer k.
GaussianRational minus_i_pow(long k);

// Accepts "p/q", "p", "i", "-i", "r/s*i", "p/q+r/s*i", "p/q-r/s*i".
GaussianRational parse_gaussian(const std::string& s);
std::string gaussian_str(const GaussianRational& g);

}  // namespace ellgen
