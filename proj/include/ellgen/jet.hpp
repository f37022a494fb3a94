#pragma once

#include <string>
#include <vector>

#include "ellgen/rational.hpp"

namespace ellgen {

// Element of Q(i)[eps]/(eps^{dCap+1}) (x) Q(i)[Z]/(Z^{zCap+1}).
// Dense storage; every operation truncates degrees above the caps.
// Two elements interoperate only with equal caps.
class JetElement {
 public:
  JetElement(int d_cap, int z_cap);

  static JetElement constant(int d_cap, int z_cap, GaussianRational c);
  // c * eps
  static JetElement eps(int d_cap, int z_cap, const GaussianRational& c);
  // c * Z
  static JetElement zvar(int d_cap, int z_cap, const GaussianRational& c);

  int d_cap() const { return d_cap_; }
  int z_cap() const { return z_cap_; }

  const GaussianRational& at(int i, int j) const;
  void set(int i, int j, GaussianRational v);
  const GaussianRational& coeff(int i, int j) const;  // range-checked

  bool is_zero() const;
  // True iff the (0,0) coefficient is zero.
  bool nilpotent() const { return at(0, 0).is_zero(); }

  JetElement operator-() const;
  JetElement& operator+=(const JetElement& o);
  JetElement& operator-=(const JetElement& o);
  friend JetElement operator+(JetElement a, const JetElement& b) { return a += b; }
  friend JetElement operator-(JetElement a, const JetElement& b) { return a -= b; }
  friend JetElement operator*(const JetElement& a, const JetElement& b);
  JetElement& operator*=(const JetElement& o) { return *this = *this * o; }
  friend bool operator==(const JetElement& a, const JetElement& b);

  JetElement scaled(const GaussianRational& c) const;

  // exp of a nilpotent argument; rejects a nonzero constant term.
  JetElement exp() const;
  // Multiplicative inverse; rejects a zero constant term.
  JetElement inv() const;
  JetElement pow(long n) const;

  // The eps^d row as an element with d_cap 0 (pure Z-jet).
  JetElement eps_row(int d) const;
  // Divide by eps^k; every coefficient with eps-degree < k must vanish.
  // High rows become unknown and are zeroed, so use only when the quotient's
  // degree stays within d_cap - k of interest.
  JetElement shift_down_eps(int k) const;

  // Polynomial in eps, Z with "p/q+r/s*i" coefficients, lexicographic (i, j).
  std::string str() const;

 private:
  int d_cap_;
  int z_cap_;
  std::vector<GaussianRational> c_;  // (d_cap_+1) x (z_cap_+1), eps-major

  int idx(int i, int j) const { return i * (z_cap_ + 1) + j; }
  void check_caps(const JetElement& o) const;
};

}  // namespace ellgen
