#include "knotapprox/approx.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <set>

#include "json.hpp"
#include "knotapprox/error.hpp"

namespace knotapprox {

// ---------------------------------------------------------------------------
// CoeffTable

Rat CoeffTable::at(int k, int j) const {
  const auto it = entries.find({k, j});
  return it == entries.end() ? Rat(0) : it->second;
}

void CoeffTable::validate() const {
  if (mu < 1) throw Error(ErrorKind::Domain, "mu must be positive");
  if (degree_d < 0) throw Error(ErrorKind::Domain, "degree must be non-negative");
  for (const auto& [kj, a] : entries) {
    const auto [k, j] = kj;
    if (a == 0)
      throw Error(ErrorKind::Domain, "zero entry stored at (" + std::to_string(k) + "," +
                                         std::to_string(j) + ")");
    if (std::abs(k) > degree_d || j > degree_d || j < -mu + 1)
      throw Error(ErrorKind::Domain, "entry (" + std::to_string(k) + "," + std::to_string(j) +
                                         ") outside the grid for mu=" + std::to_string(mu) +
                                         ", d=" + std::to_string(degree_d));
  }
}

CoeffTable coeff_table(const LaurentPoly2& p, int mu) {
  if (mu < 1) throw Error(ErrorKind::Domain, "mu must be positive");
  CoeffTable t;
  t.mu = mu;
  t.degree_d = p.degree();
  for (const auto& [e, c] : p.terms()) {
    if (e.second < -mu + 1)
      throw Error(ErrorKind::LemmaViolation,
                  "z^" + std::to_string(e.second) + " lies below the floor z^" +
                      std::to_string(-mu + 1) + " for a " + std::to_string(mu) +
                      "-component link");
    t.entries.emplace(e, c);
  }
  return t;
}

LaurentPoly2 table_polynomial(const CoeffTable& t, VarLabels labels) {
  LaurentPoly2 p(labels);
  for (const auto& [kj, a] : t.entries) p.add_term(a, kj.first, kj.second);
  return p;
}

std::string table_to_json(const CoeffTable& t) {
  nlohmann::json j;
  j["mu"] = t.mu;
  j["d"] = t.degree_d;
  j["entries"] = nlohmann::json::array();
  for (const auto& [kj, a] : t.entries)
    j["entries"].push_back({kj.first, kj.second, rat_to_string(a)});
  return j.dump();
}

CoeffTable table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, std::string("invalid JSON: ") + e.what());
  }
  CoeffTable t;
  try {
    t.mu = j.at("mu").get<int>();
    t.degree_d = j.at("d").get<int>();
    for (const auto& row : j.at("entries")) {
      if (!row.is_array() || row.size() != 3)
        throw ParseError(0, "table entry must be [k, j, \"num/den\"]");
      const int k = row[0].get<int>();
      const int jj = row[1].get<int>();
      const Rat a = row[2].is_string() ? parse_rat(row[2].get<std::string>())
                                       : Rat(row[2].get<long>());
      if (!t.entries.emplace(std::pair{k, jj}, a).second)
        throw ParseError(0, "duplicate table entry (" + std::to_string(k) + "," +
                                std::to_string(jj) + ")");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed coefficient table: ") + e.what());
  }
  t.validate();
  return t;
}

// ---------------------------------------------------------------------------
// w, B and the two Vandermonde recoveries

Rat w_direct(const CoeffTable& t, long N, int q) {
  if (q < -t.mu + 1)
    throw Error(ErrorKind::Domain, "w_{N,q} needs q >= -mu+1 = " + std::to_string(-t.mu + 1));
  Rat w = 0;
  for (const auto& [kj, a] : t.entries) {
    const int p = q - kj.second;
    if (p < 0 || p > q + t.mu - 1) continue;
    w += a * int_pow(N * kj.first, p) / factorial(p);
  }
  return w;
}

Series substitute_v_exp_unshifted(const CoeffTable& t, long N, unsigned order_cap) {
  const unsigned cap = order_cap + static_cast<unsigned>(t.mu - 1);
  Series s(cap);
  for (const auto& [kj, a] : t.entries) {
    const int shift = kj.second + t.mu - 1;
    if (shift < 0)
      throw Error(ErrorKind::LemmaViolation, "table entry below the z floor");
    Series term = exp_series(N * kj.first, cap).shifted_up(static_cast<unsigned>(shift));
    term *= a;
    s += term;
  }
  return s;
}

Series substitute_v_exp(const CoeffTable& t, long N, unsigned order_cap) {
  const Series full = substitute_v_exp_unshifted(t, N, order_cap);
  const unsigned lead = static_cast<unsigned>(t.mu - 1);
  for (unsigned i = 0; i < lead; ++i)
    if (full[i] != 0)
      throw Error(ErrorKind::LemmaViolation,
                  "x^" + std::to_string(static_cast<int>(i) - static_cast<int>(lead)) +
                      " survives the substitution v = e^{Nx}, z = x");
  std::vector<Rat> tail(full.coeffs().begin() + lead, full.coeffs().end());
  return Series(order_cap, std::move(tail));
}

Rat B_coeff(const CoeffTable& t, int m, int j) {
  if (m < 0) throw Error(ErrorKind::Domain, "B_{m,j} needs m >= 0");
  Rat b = 0;
  for (const auto& [kj, a] : t.entries)
    if (kj.second == j) b += a * int_pow(kj.first, m);
  return b / factorial(m);
}

std::vector<Rat> recover_B_from_w(const CoeffTable& t, int q, int n) {
  if (q < -t.mu + 1)
    throw Error(ErrorKind::Domain, "q must be at least -mu+1 = " + std::to_string(-t.mu + 1));
  if (n < q + t.mu)
    throw Error(ErrorKind::UnderDetermined, "need n >= q+mu = " + std::to_string(q + t.mu) +
                                                " equations, got " + std::to_string(n));
  std::vector<long> params(static_cast<std::size_t>(n));
  std::vector<Rat> rhs(static_cast<std::size_t>(n));
  for (int N = 1; N <= n; ++N) {
    params[N - 1] = N;
    rhs[N - 1] = w_direct(t, N, q);
  }
  return solve_vandermonde(params, rhs);
}

RecoveredColumn recover_a_from_B(const CoeffTable& t, int j, int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "n must be at least 1");
  const std::size_t size = static_cast<std::size_t>(2 * n + 1);
  std::vector<long> params(size);
  std::vector<Rat> rhs(size);
  for (int i = 0; i < 2 * n + 1; ++i) {
    params[i] = i - n;
    rhs[i] = factorial(i) * B_coeff(t, i, j);
  }
  return {n, solve_vandermonde_transposed(params, rhs)};
}

// ---------------------------------------------------------------------------
// lambda_{m,n}

namespace {

// Both the recurrence and the closed form cancel terms as large as
// m!/|n|^m against a result of size (2pi)^m; carry enough extra bits that
// the cancellation still leaves `prec` good ones.
unsigned lambda_guard_bits(unsigned m_max, long n) {
  double worst = 0.0;
  const double log2_base = std::log2(2.0 * std::numbers::pi * static_cast<double>(std::labs(n)));
  for (unsigned m = 1; m <= m_max; ++m)
    worst = std::max(worst, std::lgamma(m + 1.0) / std::log(2.0) - m * log2_base);
  return static_cast<unsigned>(std::ceil(worst)) + 32;
}

std::vector<CxFloat> lambda_column_raw(unsigned m_max, long n, unsigned prec) {
  std::vector<CxFloat> out;
  out.reserve(m_max + 1);
  const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  const CxFloat i = CxFloat::i(prec);
  if (n == 0) {
    // (2 pi i)^m / (m+1)
    CxFloat power(BigFloat(1L, prec), BigFloat(0L, prec));
    const CxFloat two_pi_i = i * two_pi;
    for (unsigned m = 0; m <= m_max; ++m) {
      out.push_back(power * (BigFloat(1L, prec) / BigFloat(static_cast<long>(m + 1), prec)));
      power = power * two_pi_i;
    }
    return out;
  }
  // J_m = I_m / (2 pi) with I_m = int_0^{2pi} t^m e^{-int} dt:
  //   J_0 = 0,  J_m = (-(2pi)^{m-1} + m J_{m-1}) / (i n),  lambda = i^m J_m.
  const BigFloat inv_n = BigFloat(1L, prec) / BigFloat(n, prec);
  CxFloat J(prec);
  CxFloat i_power(BigFloat(1L, prec), BigFloat(0L, prec));
  BigFloat two_pi_power(1L, prec);  // (2 pi)^{m-1}
  out.push_back(J);
  for (unsigned m = 1; m <= m_max; ++m) {
    const CxFloat numer =
        CxFloat(-two_pi_power, BigFloat(prec)) + J * BigFloat(static_cast<long>(m), prec);
    // divide by (i n): multiply by -i / n
    J = (numer * (-i)) * inv_n;
    i_power = i_power * i;
    out.push_back(i_power * J);
    two_pi_power = two_pi_power * two_pi;
  }
  return out;
}

}  // namespace

std::vector<CxFloat> lambda_column(unsigned m_max, long n, unsigned prec) {
  if (n == 0) return lambda_column_raw(m_max, n, prec);
  std::vector<CxFloat> out;
  out.reserve(m_max + 1);
  for (const CxFloat& x : lambda_column_raw(m_max, n, prec + lambda_guard_bits(m_max, n)))
    out.push_back(x.with_precision(prec));
  return out;
}

CxFloat lambda_weight(unsigned m, long n, unsigned prec) {
  return lambda_column(m, n, prec).back();
}

CxFloat lambda_closed_form(unsigned m, long n, unsigned out_prec) {
  if (n == 0) throw Error(ErrorKind::Domain, "closed form divides by n; undefined at n = 0");
  const unsigned prec = out_prec + lambda_guard_bits(m, n);
  const CxFloat two_pi_i = CxFloat::i(prec) * (BigFloat::pi(prec) * BigFloat(2L, prec));
  const BigFloat nn(n, prec);
  CxFloat sum(prec);
  for (unsigned p = 0; p < m; ++p) {
    // -(2 pi i)^{m-p-1} / n * m! / (n^p (m-p)!)
    const Rat falling = factorial(static_cast<int>(m)) / factorial(static_cast<int>(m - p));
    const BigFloat scale = BigFloat(falling, prec) / (pow(nn, static_cast<long>(p)) * nn);
    sum = sum - two_pi_i.pow(static_cast<long>(m - p - 1)) * scale;
  }
  return sum.with_precision(out_prec);
}

namespace {

struct GaussRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};

constexpr int kGaussPoints = 24;

// Legendre nodes/weights on [-1, 1] by Newton iteration at full precision.
GaussRule make_gauss_rule(int points, unsigned prec) {
  GaussRule rule;
  const BigFloat one(1L, prec), two(2L, prec);
  const BigFloat pi = BigFloat::pi(prec);
  BigFloat eps(1L, prec);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(prec) + 8, MPFR_RNDN);
  for (int i = 1; i <= points; ++i) {
    BigFloat x = cos(pi * BigFloat(make_rat(4 * i - 1, 4 * points + 2), prec));
    BigFloat dp(prec);
    for (int iter = 0; iter < 100; ++iter) {
      BigFloat p0 = one, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const BigFloat kk(static_cast<long>(k), prec);
        BigFloat p2 = ((two * kk - one) * x * p1 - (kk - one) * p0) / kk;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = BigFloat(static_cast<long>(points), prec) * (x * p1 - p0) / (x * x - one);
      const BigFloat step = p1 / dp;
      x = x - step;
      if (abs(step) < eps) break;
    }
    // Recompute the derivative at the converged node for the weight.
    BigFloat p0 = one, p1 = x;
    for (int k = 2; k <= points; ++k) {
      const BigFloat kk(static_cast<long>(k), prec);
      BigFloat p2 = ((two * kk - one) * x * p1 - (kk - one) * p0) / kk;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    dp = BigFloat(static_cast<long>(points), prec) * (x * p1 - p0) / (x * x - one);
    rule.weights.push_back(two / ((one - x * x) * dp * dp));
    rule.nodes.push_back(std::move(x));
  }
  return rule;
}

const GaussRule& gauss_rule(unsigned prec) {
  static std::mutex mutex;
  static std::map<unsigned, GaussRule> rules;
  std::lock_guard lock(mutex);
  auto it = rules.find(prec);
  if (it == rules.end()) it = rules.emplace(prec, make_gauss_rule(kGaussPoints, prec)).first;
  return it->second;
}

struct LambdaIntegrand {
  unsigned m;
  long n;
  unsigned prec;

  // (it)^m e^{-int}
  CxFloat operator()(const BigFloat& t) const {
    const CxFloat it(BigFloat(prec), t);
    return it.pow(static_cast<long>(m)) * CxFloat::expi(-(t * BigFloat(n, prec)));
  }
};

CxFloat gauss(const LambdaIntegrand& f, const GaussRule& rule, const BigFloat& a,
              const BigFloat& b) {
  const unsigned prec = a.precision();
  const BigFloat half(Rat(1, 2), prec);
  const BigFloat center = (a + b) * half;
  const BigFloat radius = (b - a) * half;
  CxFloat sum(prec);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum = sum + f(center + radius * rule.nodes[i]) * rule.weights[i];
  return sum * radius;
}

CxFloat adaptive(const LambdaIntegrand& f, const GaussRule& rule, const BigFloat& a,
                 const BigFloat& b, const CxFloat& whole, const BigFloat& tol, int depth) {
  const BigFloat mid = (a + b) * BigFloat(Rat(1, 2), a.precision());
  const CxFloat left = gauss(f, rule, a, mid);
  const CxFloat right = gauss(f, rule, mid, b);
  const CxFloat both = left + right;
  if ((both - whole).abs() <= tol || depth >= 40) return both;
  const BigFloat half_tol = tol * BigFloat(Rat(1, 2), tol.precision());
  return adaptive(f, rule, a, mid, left, half_tol, depth + 1) +
         adaptive(f, rule, mid, b, right, half_tol, depth + 1);
}

}  // namespace

CxFloat lambda_quadrature(unsigned m, long n, unsigned prec) {
  const GaussRule& rule = gauss_rule(prec);
  const LambdaIntegrand f{m, n, prec};
  const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  // Relative target 10^{-(prec/8 + 6)} against the integrand scale (2pi)^m.
  BigFloat tol = pow(BigFloat(10L, prec), -static_cast<long>(prec / 8 + 6)) *
                 max(BigFloat(1L, prec), pow(two_pi, static_cast<long>(m)));
  constexpr int kPanels = 8;
  const BigFloat width = two_pi / BigFloat(static_cast<long>(kPanels), prec);
  tol = tol / BigFloat(static_cast<long>(kPanels), prec);
  CxFloat total(prec);
  for (int p = 0; p < kPanels; ++p) {
    const BigFloat a = width * BigFloat(static_cast<long>(p), prec);
    const BigFloat b = width * BigFloat(static_cast<long>(p + 1), prec);
    total = total + adaptive(f, rule, a, b, gauss(f, rule, a, b), tol, 0);
  }
  return total * (BigFloat(1L, prec) / two_pi);
}

double relative_deviation(const CxFloat& a, const CxFloat& b) {
  const BigFloat one(1, a.precision());
  return ((a - b).abs() / max(a.abs(), one)).to_double();
}

// ---------------------------------------------------------------------------
// Partial sums of a_{kj} = sum_m B_{mj} lambda_{m,k}

ApproxReport approx_sequence(const CoeffTable& t, int k, int j, int N_max, unsigned prec,
                             double tolerance) {
  if (N_max < 0) throw Error(ErrorKind::Domain, "N_max must be non-negative");
  ApproxReport r;
  r.k = k;
  r.j = j;
  r.tolerance = tolerance;
  r.exact_value = t.at(k, j);
  const CxFloat exact(r.exact_value, Rat(0), prec);
  const std::vector<CxFloat> lambdas = lambda_column(static_cast<unsigned>(N_max), k, prec);

  // B_{mj} = sum_k a_{kj} k^m / m!, kept exact and converted per term.
  std::vector<std::pair<int, Rat>> column;
  for (const auto& [kj, a] : t.entries)
    if (kj.second == j) column.emplace_back(kj.first, a);

  CxFloat sum(prec);
  Rat inv_fact = 1;
  for (int m = 0; m <= N_max; ++m) {
    if (m > 0) inv_fact /= m;
    Rat b = 0;
    for (const auto& [kk, a] : column) b += a * int_pow(kk, m);
    b *= inv_fact;
    if (b != 0) sum = sum + lambdas[m] * BigFloat(b, prec);
    r.sequence.push_back(sum);
    r.errors.push_back((sum - exact).abs().to_double());
  }

  for (int n = N_max; n >= 0 && r.sequence[n] == exact; --n) r.stabilized_at = n;

  for (int n = kConvergenceTail - 1; n <= N_max; ++n) {
    if (!(r.errors[n] < tolerance)) continue;
    bool monotone = true;
    for (int i = n - kConvergenceTail + 2; i <= n && monotone; ++i)
      monotone = r.errors[i] <= r.errors[i - 1];
    if (monotone) {
      r.certified_at = n;
      break;
    }
  }
  const int end = r.certified_at.value_or(N_max);
  const int begin = std::max(0, end - kConvergenceTail + 1);
  for (int i = begin; i <= end; ++i) r.max_abs_error_tail = std::max(r.max_abs_error_tail, r.errors[i]);
  return r;
}

CxFloat f_eval(const CoeffTable& t, int j, const CxFloat& z) {
  CxFloat sum(z.precision());
  for (const auto& [kj, a] : t.entries) {
    if (kj.second != j) continue;
    if (kj.first < 0 && z.is_zero())
      throw Error(ErrorKind::Domain, "f_{L,j} has negative powers and is undefined at 0");
    sum = sum + z.pow(kj.first) * BigFloat(a, z.precision());
  }
  return sum;
}

// ---------------------------------------------------------------------------

WeakInvariant assemble_weak(const std::map<int, FamilyMember>& family, int n) {
  WeakInvariant w;
  for (int mu = 1; mu <= n; ++mu) {
    const auto it = family.find(mu);
    if (it == family.end())
      throw Error(ErrorKind::MissingFamily,
                  "no invariant supplied for " + std::to_string(mu) + "-component links");
    w.order = std::max(w.order, it->second.order);
  }
  w.eval = [family, n](const LinkDiagram& d) -> Rat {
    const int mu = components(d);
    if (n < mu) return Rat(0);
    return family.at(mu).eval(d);
  };
  return w;
}

}  // namespace knotapprox
