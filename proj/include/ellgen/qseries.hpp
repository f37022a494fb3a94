#pragma once

#include <map>
#include <string>

#include "ellgen/jet.hpp"

namespace ellgen {

// Truncated Laurent-style series in q^{1/24} with JetElement coefficients.
// Exponents are integers in 1/24 units; terms with exponent >= cut are
// unknown and discarded.  Stored coefficients are never the zero element.
class QXSeries {
 public:
  QXSeries(int d_cap, int z_cap, long cut);

  static QXSeries zero(int d_cap, int z_cap, long cut) { return QXSeries(d_cap, z_cap, cut); }
  static QXSeries one(int d_cap, int z_cap, long cut);
  // jet * q^{n/24}
  static QXSeries monomial(JetElement jet, long n, long cut);

  int d_cap() const { return d_cap_; }
  int z_cap() const { return z_cap_; }
  long cut() const { return cut_; }
  bool is_zero() const { return terms_.empty(); }
  // Leading exponent; for the zero series this degenerates to cut.
  long lead() const { return terms_.empty() ? cut_ : terms_.begin()->first; }
  const std::map<long, JetElement>& terms() const { return terms_; }

  // Coefficient of q^{n/24} (zero jet when absent; n must be below cut).
  JetElement coeff(long n) const;

  void set_coeff(long n, JetElement jet);
  // Lower the cut (discarding newly out-of-window terms).
  QXSeries truncated(long new_cut) const;

  QXSeries operator-() const;
  friend QXSeries operator+(const QXSeries& a, const QXSeries& b);
  friend QXSeries operator-(const QXSeries& a, const QXSeries& b);
  friend QXSeries operator*(const QXSeries& a, const QXSeries& b);
  QXSeries& operator+=(const QXSeries& o) { return *this = *this + o; }
  QXSeries& operator*=(const QXSeries& o) { return *this = *this * o; }

  QXSeries scaled(const GaussianRational& c) const;
  QXSeries jet_scaled(const JetElement& j) const;
  // Multiply by q^{s/24} (shifts the validity window too).
  QXSeries shifted(long s) const;

  // Inverse; the leading coefficient must be an invertible jet.  The result
  // is exact to cut - 2*lead.
  QXSeries inv() const;
  // exp; the q^0 coefficient (if any) must be nilpotent.
  QXSeries exp() const;
  QXSeries pow(long n) const;

  // Map every coefficient through its eps^d row (result has d_cap 0).
  QXSeries eps_row(int d) const;
  // True when all exponents are multiples of 24.
  bool integer_exponents() const;

  // "q^(n/24): <jet>" lines, ascending n; integer exponents print as q^k.
  std::string str() const;

 private:
  int d_cap_;
  int z_cap_;
  long cut_;
  std::map<long, JetElement> terms_;

  void check_compat(const QXSeries& o) const;
};

// True when a and b agree on all exponents below upto (both must be exact
// that far).
bool qx_equal_upto(const QXSeries& a, const QXSeries& b, long upto);

// Dedekind eta to the k-th power (k may be negative); leading exponent k/24.
QXSeries eta_pow(long k, long cut, int d_cap = 0, int z_cap = 0);

// prod_{j>=1} (1 - q^j), the eta product without the q^{1/24} prefactor.
QXSeries euler_c(long cut, int d_cap = 0, int z_cap = 0);

// G_{k2} = -B_{k2}/(2 k2) + sum_n sigma_{k2-1}(n) q^n, for even k2 >= 2.
QXSeries eisenstein_raw(int k2, long cut);

// G_{k2} rescaled to constant term 1.
QXSeries eisenstein_normalized(int k2, long cut);

}  // namespace ellgen
