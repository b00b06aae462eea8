#pragma once

// Coefficient tables of link polynomials and the machinery that rebuilds
// each coefficient a_{kj} from finite-type invariants:
//
//   w_{Nq}  = x^q coefficient of P(v = e^{Nx}, z = x)
//   B_{mj}  = sum_k a_{kj} k^m / m!
//   a_{kj}  = sum_m B_{mj} lambda_{m,k},
//   lambda_{m,n} = (1/2pi) int_0^{2pi} (it)^m e^{-int} dt

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotapprox/algebra.hpp"
#include "knotapprox/diagram.hpp"

namespace knotapprox {

struct CoeffTable {
  int mu = 1;
  int degree_d = 0;
  // (k, j) -> a_{kj}; only nonzero entries are stored.
  std::map<std::pair<int, int>, Rat> entries;

  Rat at(int k, int j) const;
  // Throws Error(Domain) if an entry is zero or lies outside
  // |k| <= d, -mu+1 <= j <= d.
  void validate() const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

// Throws Error(LemmaViolation) if p has a z-power below -mu+1.
CoeffTable coeff_table(const LaurentPoly2& p, int mu);
LaurentPoly2 table_polynomial(const CoeffTable& t, VarLabels labels = VarLabels::VZ);

// {"mu": m, "d": d, "entries": [[k, j, "num/den"], ...]}
std::string table_to_json(const CoeffTable& t);
CoeffTable table_from_json(const std::string& text);

Rat w_direct(const CoeffTable& t, long N, int q);
// Full expansion of sum a_{kj} e^{Nkx} x^{j+mu-1} up to x^{Q+mu-1}: entry
// q+mu-1 is w_{Nq} for every q >= -mu+1.
Series substitute_v_exp_unshifted(const CoeffTable& t, long N, unsigned order_cap);
// Coefficients q = 0..Q; throws Error(LemmaViolation) when a negative power
// of x survives.
Series substitute_v_exp(const CoeffTable& t, long N, unsigned order_cap);

Rat B_coeff(const CoeffTable& t, int m, int j);
// Solves the Vandermonde system in N = 1..n; entry p is B_{p, q-p}.
std::vector<Rat> recover_B_from_w(const CoeffTable& t, int q, int n);

struct RecoveredColumn {
  int n = 0;
  std::vector<Rat> values;  // values[k + n] for k = -n..n

  const Rat& at(int k) const { return values.at(static_cast<std::size_t>(k + n)); }
};

// Solves sum_{|k|<=n} k^m s_k = m! B_{mj} for m = 0..2n.
RecoveredColumn recover_a_from_B(const CoeffTable& t, int j, int n);

// lambda_{m,n} via the integration-by-parts recurrence.
CxFloat lambda_weight(unsigned m, long n, unsigned precision_bits = kDefaultPrecisionBits);
// lambda_{0..m_max, n}.
std::vector<CxFloat> lambda_column(unsigned m_max, long n,
                                   unsigned precision_bits = kDefaultPrecisionBits);
// Closed-form finite sum; only defined for n != 0 (throws Error(Domain)).
CxFloat lambda_closed_form(unsigned m, long n, unsigned precision_bits = kDefaultPrecisionBits);
// Adaptive Gauss-Legendre quadrature of the defining integral.
CxFloat lambda_quadrature(unsigned m, long n, unsigned precision_bits = kDefaultPrecisionBits);
// |a - b| / max(|a|, 1); the floor keeps vanishing weights comparable.
double relative_deviation(const CxFloat& a, const CxFloat& b);

inline constexpr int kConvergenceTail = 20;

struct ApproxReport {
  int k = 0;
  int j = 0;
  Rat exact_value;
  std::vector<CxFloat> sequence;  // partial sums v^N for N = 0..N_max
  std::vector<double> errors;     // |v^N - a_{kj}|
  // First N from which every later partial sum equals a_{kj} exactly.
  std::optional<int> stabilized_at;
  // First N with error below the tolerance and a non-increasing error over
  // the kConvergenceTail partial sums ending at N.
  std::optional<int> certified_at;
  double tolerance = 1e-6;
  double max_abs_error_tail = 0.0;

  double final_error() const { return errors.empty() ? 0.0 : errors.back(); }
};

ApproxReport approx_sequence(const CoeffTable& t, int k, int j, int N_max,
                             unsigned precision_bits = kDefaultPrecisionBits,
                             double tolerance = 1e-6);

// sum_k a_{kj} z^k; throws Error(Domain) at z = 0 when negative k occur.
CxFloat f_eval(const CoeffTable& t, int j, const CxFloat& z);

using Evaluator = std::function<Rat(const LinkDiagram&)>;

struct FamilyMember {
  int order = 0;
  Evaluator eval;
};

struct WeakInvariant {
  int order = 0;
  Evaluator eval;
};

// Dispatches on the component count mu of its argument: the mu-member of the
// family when n >= mu, otherwise 0. Throws Error(MissingFamily) when some
// mu <= n has no member.
WeakInvariant assemble_weak(const std::map<int, FamilyMember>& family, int n);

}  // namespace knotapprox
