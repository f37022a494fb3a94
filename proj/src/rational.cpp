#include "ellgen/rational.hpp"

#include <mutex>
#include <vector>

namespace ellgen {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& p, const BigInt& q) {
  if (sgn(q) == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
  while (static_cast<int>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

BigInt sigma(int k, long n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be positive");
  if (k < 0) throw std::invalid_argument("sigma: negative power");
  BigInt total(0), p;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    total += p;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      total += p;
    }
  }
  return total;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  if (sgn(Rational(r.get_den())) <= 0) {
    if (sgn(Rational(r.get_den())) == 0)
      throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string rational_json_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational minus_i_pow(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(1)};
  }
}

GaussianRational parse_gaussian(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_gaussian: empty string");
  if (s == "i") return GaussianRational::i();
  if (s == "-i") return {Rational(0), Rational(-1)};
  auto star = s.find("*i");
  if (star == std::string::npos) return GaussianRational(parse_rational(s));
  // Split an optional real part off the front: "a+b*i" / "a-b*i" / "b*i".
  std::string head = s.substr(0, star);
  // Find the sign separating real and imaginary parts (skip a leading sign).
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < head.size(); ++p) {
    if ((head[p] == '+' || head[p] == '-') && head[p - 1] != '/') split = p;
  }
  if (split == std::string::npos) return {Rational(0), parse_rational(head)};
  Rational re = parse_rational(head.substr(0, split));
  std::string imtxt = head.substr(split);
  if (imtxt == "+") return {re, Rational(1)};
  if (imtxt == "-") return {re, Rational(-1)};
  if (imtxt[0] == '+') imtxt.erase(0, 1);
  return {re, parse_rational(imtxt)};
}

std::string gaussian_str(const GaussianRational& g) {
  if (g.is_zero()) return "0";
  if (sgn(g.im) == 0) return rational_str(g.re);
  std::string im = rational_str(g.im) + "*i";
  if (sgn(g.re) == 0) return im;
  if (sgn(g.im) > 0) return rational_str(g.re) + "+" + im;
  return rational_str(g.re) + im;  // the minus sign rides along
}

}  // namespace ellgen
