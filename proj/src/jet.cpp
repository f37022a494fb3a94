#include "ellgen/jet.hpp"

#include <sstream>

namespace ellgen {

JetElement::JetElement(int d_cap, int z_cap)
    : d_cap_(d_cap), z_cap_(z_cap), c_((d_cap + 1) * (z_cap + 1)) {
  if (d_cap < 0 || z_cap < 0) throw std::invalid_argument("JetElement: negative cap");
}

JetElement JetElement::constant(int d_cap, int z_cap, GaussianRational c) {
  JetElement j(d_cap, z_cap);
  j.c_[0] = std::move(c);
  return j;
}

JetElement JetElement::eps(int d_cap, int z_cap, const GaussianRational& c) {
  JetElement j(d_cap, z_cap);
  if (d_cap >= 1) j.c_[j.idx(1, 0)] = c;
  return j;
}

JetElement JetElement::zvar(int d_cap, int z_cap, const GaussianRational& c) {
  JetElement j(d_cap, z_cap);
  if (z_cap >= 1) j.c_[j.idx(0, 1)] = c;
  return j;
}

const GaussianRational& JetElement::at(int i, int j) const { return c_[idx(i, j)]; }

void JetElement::set(int i, int j, GaussianRational v) {
  if (i < 0 || i > d_cap_ || j < 0 || j > z_cap_)
    throw std::out_of_range("JetElement::set: index out of range");
  c_[idx(i, j)] = std::move(v);
}

const GaussianRational& JetElement::coeff(int i, int j) const {
  if (i < 0 || i > d_cap_ || j < 0 || j > z_cap_)
    throw std::out_of_range("JetElement::coeff: index out of range");
  return c_[idx(i, j)];
}

bool JetElement::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

void JetElement::check_caps(const JetElement& o) const {
  if (d_cap_ != o.d_cap_ || z_cap_ != o.z_cap_)
    throw std::invalid_argument("JetElement: cap mismatch");
}

JetElement JetElement::operator-() const {
  JetElement r(d_cap_, z_cap_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
  return r;
}

JetElement& JetElement::operator+=(const JetElement& o) {
  check_caps(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

JetElement& JetElement::operator-=(const JetElement& o) {
  check_caps(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

JetElement operator*(const JetElement& a, const JetElement& b) {
  a.check_caps(b);
  JetElement r(a.d_cap_, a.z_cap_);
  for (int i1 = 0; i1 <= a.d_cap_; ++i1) {
    for (int j1 = 0; j1 <= a.z_cap_; ++j1) {
      const GaussianRational& x = a.c_[a.idx(i1, j1)];
      if (x.is_zero()) continue;
      for (int i2 = 0; i1 + i2 <= a.d_cap_; ++i2) {
        for (int j2 = 0; j1 + j2 <= a.z_cap_; ++j2) {
          const GaussianRational& y = b.c_[b.idx(i2, j2)];
          if (y.is_zero()) continue;
          r.c_[r.idx(i1 + i2, j1 + j2)] += x * y;
        }
      }
    }
  }
  return r;
}

bool operator==(const JetElement& a, const JetElement& b) {
  a.check_caps(b);
  return a.c_ == b.c_;
}

JetElement JetElement::scaled(const GaussianRational& c) const {
  JetElement r(d_cap_, z_cap_);
  if (c.is_zero()) return r;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) r.c_[k] = c_[k] * c;
  return r;
}

JetElement JetElement::exp() const {
  if (!nilpotent()) throw std::domain_error("JetElement::exp: nonzero constant term");
  JetElement result = constant(d_cap_, z_cap_, GaussianRational(1));
  // invariant: term = this^{k-1}/(k-1)! at the top of iteration k
  JetElement term = result;
  int order = d_cap_ + z_cap_;
  for (int k = 1; k <= order; ++k) {
    term = (term * *this).scaled(GaussianRational(make_rational(1, k)));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

JetElement JetElement::inv() const {
  const GaussianRational& c0 = at(0, 0);
  if (c0.is_zero()) throw std::domain_error("JetElement::inv: non-unit constant term");
  GaussianRational c0inv = GaussianRational(1) / c0;
  // a = c0 (1 + n) with n nilpotent; 1/a = c0^{-1} sum (-n)^k
  JetElement n = scaled(c0inv);
  n -= constant(d_cap_, z_cap_, GaussianRational(1));
  JetElement result = constant(d_cap_, z_cap_, GaussianRational(1));
  JetElement power = result;
  int order = d_cap_ + z_cap_;
  for (int k = 1; k <= order; ++k) {
    power = power * n;
    if (power.is_zero()) break;
    if (k % 2 == 1)
      result -= power;
    else
      result += power;
  }
  return result.scaled(c0inv);
}

JetElement JetElement::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  JetElement result = constant(d_cap_, z_cap_, GaussianRational(1));
  JetElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

JetElement JetElement::eps_row(int d) const {
  if (d < 0 || d > d_cap_) throw std::out_of_range("JetElement::eps_row: cap too small");
  JetElement r(0, z_cap_);
  for (int j = 0; j <= z_cap_; ++j) r.c_[j] = c_[idx(d, j)];
  return r;
}

JetElement JetElement::shift_down_eps(int k) const {
  if (k < 0 || k > d_cap_) throw std::out_of_range("JetElement::shift_down_eps");
  JetElement r(d_cap_, z_cap_);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= z_cap_; ++j)
      if (!at(i, j).is_zero())
        throw std::domain_error("JetElement::shift_down_eps: not divisible by eps^k");
  for (int i = k; i <= d_cap_; ++i)
    for (int j = 0; j <= z_cap_; ++j) r.c_[r.idx(i - k, j)] = c_[idx(i, j)];
  return r;
}

std::string JetElement::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= d_cap_; ++i) {
    for (int j = 0; j <= z_cap_; ++j) {
      const GaussianRational& v = at(i, j);
      if (v.is_zero()) continue;
      if (!first) out << " + ";
      first = false;
      out << "(" << gaussian_str(v) << ")";
      if (i == 1) out << "*eps";
      if (i > 1) out << "*eps^" << i;
      if (j == 1) out << "*Z";
      if (j > 1) out << "*Z^" << j;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace ellgen
