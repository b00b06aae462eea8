#pragma once

// Exact and high-precision arithmetic used by every other module:
// rationals (GMP), sparse two-variable Laurent polynomials, truncated power
// series, MPFR-backed complex numbers and exact Vandermonde solves.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knotapprox {

// mpq_class keeps itself canonical (lowest terms, positive denominator)
// after every arithmetic operation; values built from raw parts must go
// through make_rat.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
// Accepts "p", "p/q" or "-p/q"; throws Error(Parse) on malformed input or a
// zero denominator.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& r);
// n^p with the convention 0^0 = 1.
Rat int_pow(long base, int exponent);
Rat factorial(int n);

enum class VarLabels { VZ, AZ };

const char* first_var(VarLabels labels) noexcept;

class LaurentPoly2 {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rat>;

  explicit LaurentPoly2(VarLabels labels = VarLabels::VZ) : labels_(labels) {}

  static LaurentPoly2 constant(const Rat& c, VarLabels labels = VarLabels::VZ);
  static LaurentPoly2 monomial(const Rat& c, int e1, int e2,
                               VarLabels labels = VarLabels::VZ);

  VarLabels labels() const noexcept { return labels_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rat coeff(int e1, int e2) const;
  void add_term(const Rat& c, int e1, int e2);

  // max(|e1|, |e2|) over stored terms; 0 for the zero polynomial.
  int degree() const;
  // Lowest exponent of the second variable; throws Error(Domain) when zero.
  int min_e2() const;
  int max_e2() const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  LaurentPoly2& operator*=(const Rat& scalar);

  friend LaurentPoly2 operator+(LaurentPoly2 p, const LaurentPoly2& q) {
    p += q;
    return p;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 p, const LaurentPoly2& q) {
    p -= q;
    return p;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
  friend LaurentPoly2 operator*(LaurentPoly2 p, const Rat& s) {
    p *= s;
    return p;
  }
  friend bool operator==(const LaurentPoly2& p, const LaurentPoly2& q) {
    return p.labels_ == q.labels_ && p.terms_ == q.terms_;
  }

  // Multiply by first^e1 * second^e2.
  LaurentPoly2 shifted(int e1, int e2) const;
  LaurentPoly2 pow(unsigned n) const;
  LaurentPoly2 relabeled(VarLabels labels) const;

  // Sorted by descending z exponent, then descending first-variable
  // exponent, e.g. "v^2*z^2 - v^4 + 2*v^2".
  std::string to_string() const;

 private:
  void check_labels(const LaurentPoly2& other) const;

  VarLabels labels_;
  TermMap terms_;
};

LaurentPoly2 lp_add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 lp_mul(const LaurentPoly2& p, const LaurentPoly2& q);

// Truncated power series sum_{q <= order_cap} c_q x^q.
class Series {
 public:
  explicit Series(unsigned order_cap) : coeffs_(order_cap + 1) {}
  Series(unsigned order_cap, std::vector<Rat> coeffs);

  unsigned order_cap() const noexcept {
    return static_cast<unsigned>(coeffs_.size() - 1);
  }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  const Rat& operator[](unsigned q) const { return coeffs_.at(q); }
  Rat& operator[](unsigned q) { return coeffs_.at(q); }

  Series& operator+=(const Series& other);
  Series& operator*=(const Rat& scalar);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiply by x^k (k >= 0), dropping what falls past order_cap.
  Series shifted_up(unsigned k) const;

 private:
  std::vector<Rat> coeffs_;
};

Series exp_series(long c, unsigned order_cap);

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

// RAII wrapper over an MPFR value. Binary operations round to the larger of
// the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision_bits = kDefaultPrecisionBits);
  BigFloat(long value, unsigned precision_bits);
  BigFloat(const Rat& value, unsigned precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const noexcept;
  // Copy rounded to a different precision.
  BigFloat with_precision(unsigned precision_bits) const;
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  static BigFloat pi(unsigned precision_bits);

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const noexcept;
  // Scientific notation with `digits` significant digits; deterministic.
  std::string to_string(int digits = 30) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat pow(const BigFloat& x, long n);

 private:
  mpfr_t value_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

class CxFloat {
 public:
  explicit CxFloat(unsigned precision_bits = kDefaultPrecisionBits);
  CxFloat(BigFloat re, BigFloat im);
  CxFloat(const Rat& re, const Rat& im, unsigned precision_bits);

  // e^{i theta}
  static CxFloat expi(const BigFloat& theta);
  static CxFloat i(unsigned precision_bits);

  const BigFloat& real() const noexcept { return re_; }
  const BigFloat& imag() const noexcept { return im_; }
  unsigned precision() const noexcept;
  CxFloat with_precision(unsigned precision_bits) const;

  BigFloat abs() const;
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  CxFloat operator-() const { return {-re_, -im_}; }
  friend CxFloat operator+(const CxFloat& a, const CxFloat& b);
  friend CxFloat operator-(const CxFloat& a, const CxFloat& b);
  friend CxFloat operator*(const CxFloat& a, const CxFloat& b);
  friend CxFloat operator/(const CxFloat& a, const CxFloat& b);
  friend CxFloat operator*(const CxFloat& a, const BigFloat& s);
  friend bool operator==(const CxFloat& a, const CxFloat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  CxFloat pow(long n) const;
  // "re + im*i" using BigFloat::to_string for each part.
  std::string to_string(int digits = 30) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

CxFloat exp(const CxFloat& z);

// Solves V x = rhs where row r of V is (1, t, t^2, ..., t^{n-1}) with
// t = params[r]. Exact; throws Error(SingularMatrix) on repeated params.
std::vector<Rat> solve_vandermonde(std::span<const long> params,
                                   std::span<const Rat> rhs);
// Solves V^T s = rhs, i.e. sum_k params[k]^m s_k = rhs[m] for m < n.
std::vector<Rat> solve_vandermonde_transposed(std::span<const long> params,
                                              std::span<const Rat> rhs);

}  // namespace knotapprox
