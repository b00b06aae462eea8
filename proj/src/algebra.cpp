#include "knotapprox/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "knotapprox/error.hpp"

namespace knotapprox {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LabelMismatch: return "label-mismatch";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Unsupported: return "unsupported-input";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::LemmaViolation: return "lemma-violation";
    case ErrorKind::UnderDetermined: return "under-determined";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::MissingFamily: return "missing-family";
    case ErrorKind::InvalidIndex: return "invalid-index";
    case ErrorKind::DecompositionFailure: return "decomposition-failure";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Rat helpers

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  const auto bad = [&](const char* why) {
    return ParseError(0, std::string(why) + " in rational '" + text + "'");
  };
  if (text.empty()) throw bad("empty");
  const auto slash = text.find('/');
  const auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad("malformed");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw bad("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(10); }

Rat int_pow(long base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::Domain, "0 to a negative power");
    Rat r = int_pow(base, -exponent);
    return Rat(1) / r;
  }
  mpz_class z;
  mpz_class b(base);
  mpz_pow_ui(z.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(z);
}

Rat factorial(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "factorial of a negative number");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(z);
}

// ---------------------------------------------------------------------------
// LaurentPoly2

const char* first_var(VarLabels labels) noexcept {
  return labels == VarLabels::VZ ? "v" : "a";
}

LaurentPoly2 LaurentPoly2::constant(const Rat& c, VarLabels labels) {
  return monomial(c, 0, 0, labels);
}

LaurentPoly2 LaurentPoly2::monomial(const Rat& c, int e1, int e2,
                                    VarLabels labels) {
  LaurentPoly2 p(labels);
  p.add_term(c, e1, e2);
  return p;
}

Rat LaurentPoly2::coeff(int e1, int e2) const {
  const auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly2::add_term(const Rat& c, int e1, int e2) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly2::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max({d, std::abs(e.first), std::abs(e.second)});
  return d;
}

int LaurentPoly2::min_e2() const {
  if (terms_.empty()) throw Error(ErrorKind::Domain, "zero polynomial has no z-degree");
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::min(m, e.second);
  return m;
}

int LaurentPoly2::max_e2() const {
  if (terms_.empty()) throw Error(ErrorKind::Domain, "zero polynomial has no z-degree");
  int m = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) m = std::max(m, e.second);
  return m;
}

void LaurentPoly2::check_labels(const LaurentPoly2& other) const {
  if (labels_ != other.labels_)
    throw Error(ErrorKind::LabelMismatch,
                std::string("cannot combine polynomials in (") +
                    first_var(labels_) + ",z) and (" + first_var(other.labels_) +
                    ",z)");
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  check_labels(other);
  for (const auto& [e, c] : other.terms_) add_term(c, e.first, e.second);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) {
  check_labels(other);
  for (const auto& [e, c] : other.terms_) add_term(-c, e.first, e.second);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  p.check_labels(q);
  LaurentPoly2 r(p.labels_);
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_)
      r.add_term(cp * cq, ep.first + eq.first, ep.second + eq.second);
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int e1, int e2) const {
  LaurentPoly2 r(labels_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.first + e1, e.second + e2}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
  LaurentPoly2 result = constant(1, labels_);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly2 LaurentPoly2::relabeled(VarLabels labels) const {
  LaurentPoly2 r(*this);
  r.labels_ = labels;
  return r;
}

namespace {

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.first.second != y.first.second) return x.first.second > y.first.second;
    return x.first.first > y.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (e.first != 0) factors.push_back(power(first_var(labels_), e.first));
    if (e.second != 0) factors.push_back(power("z", e.second));
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

LaurentPoly2 lp_add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }
LaurentPoly2 lp_mul(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

// ---------------------------------------------------------------------------
// Series

Series::Series(unsigned order_cap, std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_cap + 1);
}

Series& Series::operator+=(const Series& other) {
  const std::size_t n = std::min(coeffs_.size(), other.coeffs_.size());
  coeffs_.resize(n);
  for (std::size_t q = 0; q < n; ++q) coeffs_[q] += other.coeffs_[q];
  return *this;
}

Series& Series::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const unsigned cap = std::min(a.order_cap(), b.order_cap());
  Series r(cap);
  for (unsigned i = 0; i <= cap; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; i + j <= cap; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

Series Series::shifted_up(unsigned k) const {
  Series r(order_cap());
  for (unsigned q = 0; q + k <= order_cap(); ++q) r.coeffs_[q + k] = coeffs_[q];
  return r;
}

Series exp_series(long c, unsigned order_cap) {
  Series s(order_cap);
  Rat term(1);
  for (unsigned q = 0; q <= order_cap; ++q) {
    s[q] = term;
    term *= Rat(c);
    term /= Rat(q + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// BigFloat

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

unsigned checked_precision(unsigned bits) {
  if (bits < kMinPrecisionBits)
    throw Error(ErrorKind::Domain, "precision must be at least " +
                                       std::to_string(kMinPrecisionBits) + " bits");
  return bits;
}

unsigned joint_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(checked_precision(precision_bits)));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, kRnd);
}

BigFloat::BigFloat(const Rat& value, unsigned precision_bits) : BigFloat(precision_bits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(unsigned precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

unsigned BigFloat::precision() const noexcept {
  return static_cast<unsigned>(mpfr_get_prec(value_));
}

BigFloat BigFloat::pi(unsigned precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

double BigFloat::to_double() const noexcept { return mpfr_get_d(value_, kRnd); }

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_precision(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  BigFloat r(joint_precision(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.value_, x.value_, kRnd);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.value_, x.value_, kRnd);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.value_, x.value_, kRnd);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.value_, x.value_, kRnd);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.value_, x.value_, kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.value_, x.value_, n, kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

// ---------------------------------------------------------------------------
// CxFloat

CxFloat::CxFloat(unsigned precision_bits) : re_(precision_bits), im_(precision_bits) {}

CxFloat::CxFloat(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  // Keep both parts at the same precision.
  const unsigned p = std::max(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_ + BigFloat(p);
  if (im_.precision() != p) im_ = im_ + BigFloat(p);
}

CxFloat::CxFloat(const Rat& re, const Rat& im, unsigned precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

CxFloat CxFloat::expi(const BigFloat& theta) { return {cos(theta), sin(theta)}; }

CxFloat CxFloat::i(unsigned precision_bits) {
  return {BigFloat(0L, precision_bits), BigFloat(1L, precision_bits)};
}

CxFloat CxFloat::with_precision(unsigned precision_bits) const {
  return {re_.with_precision(precision_bits), im_.with_precision(precision_bits)};
}

unsigned CxFloat::precision() const noexcept { return re_.precision(); }

BigFloat CxFloat::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), kRnd);
  return r;
}

CxFloat operator+(const CxFloat& a, const CxFloat& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
CxFloat operator-(const CxFloat& a, const CxFloat& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

CxFloat operator*(const CxFloat& a, const CxFloat& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

CxFloat operator/(const CxFloat& a, const CxFloat& b) {
  const BigFloat den = b.re_ * b.re_ + b.im_ * b.im_;
  if (den.is_zero()) throw Error(ErrorKind::Domain, "complex division by zero");
  return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

CxFloat operator*(const CxFloat& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }

CxFloat CxFloat::pow(long n) const {
  if (n < 0) {
    CxFloat one(BigFloat(1L, precision()), BigFloat(0L, precision()));
    return one / pow(-n);
  }
  CxFloat result(BigFloat(1L, precision()), BigFloat(0L, precision()));
  CxFloat base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string CxFloat::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im_.sign() < 0) return re_.to_string(digits) + " - " + im.substr(1) + "*i";
  return re_.to_string(digits) + " + " + im + "*i";
}

CxFloat exp(const CxFloat& z) {
  const BigFloat mag = exp(z.real());
  return CxFloat::expi(z.imag()) * mag;
}

// ---------------------------------------------------------------------------
// Vandermonde

namespace {

void check_distinct(std::span<const long> params) {
  std::set<long> seen;
  for (long t : params)
    if (!seen.insert(t).second)
      throw Error(ErrorKind::SingularMatrix,
                  "Vandermonde parameter " + std::to_string(t) + " repeated");
}

// Row k holds the coefficients (ascending powers) of the Lagrange basis
// polynomial L_k with L_k(params[l]) = [k == l].
std::vector<std::vector<Rat>> lagrange_basis(std::span<const long> params) {
  const std::size_t n = params.size();
  // master(t) = prod_l (t - params[l]), degree n.
  std::vector<Rat> master(n + 1);
  master[0] = 1;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = l + 1; i > 0; --i)
      master[i] = master[i - 1] - Rat(params[l]) * master[i];
    master[0] = -Rat(params[l]) * master[0];
  }
  std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Rat t(params[k]);
    // Synthetic division of master by (t - params[k]).
    std::vector<Rat>& q = basis[k];
    Rat carry = 0;
    for (std::size_t i = n; i > 0; --i) {
      carry = master[i] + carry * t;
      q[i - 1] = carry;
    }
    Rat weight = 1;
    for (std::size_t l = 0; l < n; ++l)
      if (l != k) weight *= Rat(params[k] - params[l]);
    for (auto& c : q) c /= weight;
  }
  return basis;
}

}  // namespace

std::vector<Rat> solve_vandermonde(std::span<const long> params, std::span<const Rat> rhs) {
  if (params.size() != rhs.size())
    throw Error(ErrorKind::Domain, "Vandermonde system must be square");
  check_distinct(params);
  const auto basis = lagrange_basis(params);
  std::vector<Rat> x(params.size());
  for (std::size_t r = 0; r < params.size(); ++r) {
    if (rhs[r] == 0) continue;
    for (std::size_t c = 0; c < params.size(); ++c) x[c] += rhs[r] * basis[r][c];
  }
  return x;
}

std::vector<Rat> solve_vandermonde_transposed(std::span<const long> params,
                                              std::span<const Rat> rhs) {
  if (params.size() != rhs.size())
    throw Error(ErrorKind::Domain, "Vandermonde system must be square");
  check_distinct(params);
  const auto basis = lagrange_basis(params);
  std::vector<Rat> s(params.size());
  for (std::size_t k = 0; k < params.size(); ++k)
    for (std::size_t m = 0; m < params.size(); ++m) s[k] += basis[k][m] * rhs[m];
  return s;
}

}  // namespace knotapprox
