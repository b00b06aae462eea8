#include "knotapprox/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "knotapprox/error.hpp"

namespace knotapprox {

Rat extend_to_singular(const Evaluator& invariant, const LinkDiagram& d) {
  Rat total = 0;
  for (const SignedDiagram& r : resolve_singulars(d)) {
    if (r.sign > 0)
      total += invariant(r.diagram);
    else
      total -= invariant(r.diagram);
  }
  return total;
}

OrderCheckReport order_check(const std::string& name, const Evaluator& invariant,
                             int claimed_order, const std::vector<SingularSample>& samples) {
  OrderCheckReport report;
  report.invariant_name = name;
  report.claimed_order = claimed_order;
  bool all_zero = !samples.empty();
  for (const SingularSample& s : samples) {
    SampleResult r;
    r.id = s.id;
    r.singular_count = s.diagram.singular_count();
    if (r.singular_count != claimed_order + 1)
      throw Error(ErrorKind::Domain, "sample " + s.id + " has " +
                                         std::to_string(r.singular_count) +
                                         " double points, expected " +
                                         std::to_string(claimed_order + 1));
    try {
      r.value = extend_to_singular(invariant, s.diagram);
    } catch (const Error& e) {
      r.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    if (!r.value || *r.value != 0) all_zero = false;
    report.samples.push_back(std::move(r));
  }
  report.all_zero_at_q_plus_1 = all_zero;
  return report;
}

namespace {

LinkDiagram singularize(const BraidWord& b, const std::vector<std::size_t>& at) {
  LinkDiagram d = from_braid(b);
  for (std::size_t idx : at) d = make_singular(d, idx);
  return d;
}

std::string braid_text(const BraidWord& b) {
  std::string s = std::to_string(b.strands) + ":";
  for (int l : b.letters) s += " " + std::to_string(l);
  return s;
}

}  // namespace

std::vector<SingularSample> singular_samples(int double_points, int count, std::uint64_t seed,
                                             int max_crossings) {
  if (double_points < 1 || double_points > max_crossings)
    throw Error(ErrorKind::Domain, "double point count out of range");
  std::vector<SingularSample> out;
  const auto s = static_cast<std::size_t>(double_points);

  // sigma_1 powers on two strands first, singular at the leading crossings.
  for (int len = double_points; len <= max_crossings && static_cast<int>(out.size()) < count / 2;
       ++len) {
    BraidWord b{2, std::vector<int>(static_cast<std::size_t>(len), 1)};
    std::vector<std::size_t> at(s);
    std::iota(at.begin(), at.end(), std::size_t{0});
    out.push_back({"s1^" + std::to_string(len) + "/x" + std::to_string(double_points),
                   singularize(b, at)});
  }

  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len =
        std::uniform_int_distribution<int>(std::max(double_points, 2), max_crossings)(rng);
    BraidWord b{strands, {}};
    for (int i = 0; i < len; ++i) {
      const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      b.letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
    }
    std::vector<std::size_t> pos(static_cast<std::size_t>(len));
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(s);
    std::sort(pos.begin(), pos.end());
    std::string id = "braid " + braid_text(b) + " /x";
    for (std::size_t p : pos) id += " " + std::to_string(p);
    out.push_back({std::move(id), singularize(b, pos)});
  }
  return out;
}

Evaluator w_invariant(long N, int q, std::shared_ptr<SkeinEngine> engine) {
  return [N, q, engine](const LinkDiagram& d) {
    const CoeffTable t = coeff_table(engine->homflypt(d), components(d));
    return w_direct(t, N, q);
  };
}

Evaluator B_invariant(int m, int j, std::shared_ptr<SkeinEngine> engine) {
  // Goes through the A_n solve, so the value is a combination of w_{Nq}.
  return [m, j, engine](const LinkDiagram& d) {
    const int mu = components(d);
    const CoeffTable t = coeff_table(engine->homflypt(d), mu);
    const int q = m + j;
    if (q < -mu + 1) return Rat(0);
    const int n = std::max(q + mu, m + 1);
    return recover_B_from_w(t, q, n).at(static_cast<std::size_t>(m));
  };
}

bool z_lowbound_check(const LaurentPoly2& p, int mu) {
  return p.terms().empty() || p.min_e2() >= -mu + 1;
}

namespace {

using Univariate = std::map<int, Rat>;

// Exact division of a Laurent polynomial g by (s*(x - x^{-1}))^r.
std::optional<Univariate> divide_by_difference_power(const Univariate& g, int r, int s) {
  Univariate divisor{{0, 1}};
  for (int i = 0; i < r; ++i) {
    Univariate next;
    for (const auto& [e, c] : divisor) {
      next[e + 1] += c * s;
      next[e - 1] -= c * s;
    }
    divisor.clear();
    for (const auto& [e, c] : next)
      if (c != 0) divisor.emplace(e, c);
  }
  const Rat lead = divisor.rbegin()->second;
  const int floor = g.empty() ? 0 : g.begin()->first;
  Univariate rem = g;
  Univariate quotient;
  while (!rem.empty()) {
    const auto [top, c] = *rem.rbegin();
    const int shift = top - r;
    if (shift - r < floor) return std::nullopt;
    const Rat f = c / lead;
    quotient[shift] = f;
    for (const auto& [e, dc] : divisor) {
      Rat& slot = rem[e + shift];
      slot -= f * dc;
      if (slot == 0) rem.erase(e + shift);
    }
  }
  return quotient;
}

Univariate z_slice(const LaurentPoly2& p, int e2) {
  Univariate g;
  for (const auto& [e, c] : p.terms())
    if (e.second == e2) g[e.first] = c;
  return g;
}

LaurentPoly2 from_univariate(const Univariate& u, VarLabels labels) {
  LaurentPoly2 out(labels);
  for (const auto& [e, c] : u) out.add_term(c, e, 0);
  return out;
}

DeltaDecomposition peel(const LaurentPoly2& p, int mu, const LaurentPoly2& delta, int sign,
                        std::string name) {
  DeltaDecomposition dec;
  dec.basis_element = std::move(name);
  LaurentPoly2 rest = p;
  while (!rest.terms().empty() && rest.min_e2() < 0) {
    const int r = -rest.min_e2();
    if (r > mu - 1) {
      dec.obstruction = "z^" + std::to_string(-r) + " below the floor z^" + std::to_string(-mu + 1);
      dec.remainder = rest;
      return dec;
    }
    const auto h = divide_by_difference_power(z_slice(rest, -r), r, sign);
    if (!h) {
      dec.obstruction = "coefficient of z^" + std::to_string(-r) + " is not divisible by the " +
                        std::to_string(r) + "-th power of the basis numerator";
      dec.remainder = rest;
      return dec;
    }
    const LaurentPoly2 hp = from_univariate(*h, p.labels());
    dec.coefficients[r] = hp;
    dec.max_power = std::max(dec.max_power, r);
    rest = rest - delta.pow(static_cast<unsigned>(r)) * hp;
  }
  dec.remainder = rest;
  dec.ok = true;
  return dec;
}

}  // namespace

DeltaDecomposition delta_basis_decompose(const LaurentPoly2& p, int mu, DeltaBasis basis) {
  if (basis == DeltaBasis::Dubrovnik) {
    if (p.labels() != VarLabels::AZ)
      throw Error(ErrorKind::LabelMismatch, "Dubrovnik decomposition needs variables (a,z)");
    return peel(p, mu, dubrovnik_split_factor(), 1, "(a-a^-1+z)/z");
  }
  if (p.labels() != VarLabels::VZ)
    throw Error(ErrorKind::LabelMismatch, "HOMFLYPT decomposition needs variables (v,z)");
  DeltaDecomposition skein_sign = peel(p, mu, homflypt_split_factor(), -1, "(v^-1-v)/z");
  if (skein_sign.ok) return skein_sign;
  DeltaDecomposition other = peel(p, mu, homflypt_split_factor() * Rat(-1), 1, "(v-v^-1)/z");
  return other.ok ? other : skein_sign;
}

IdentityCheck dubrovnik_kauffman_identity_check(const LinkDiagram& d, std::size_t crossing_cap) {
  IdentityCheck out;
  try {
    const int mu = components(d);
    const LaurentPoly2 f = dubrovnik(d, crossing_cap);
    const LaurentPoly2 k = kauffman_from_dubrovnik(f, mu);
    const LaurentPoly2 back = dubrovnik_from_kauffman(k, mu);
    out.ok = back == f;
    out.detail = out.ok ? "F^K = " + k.to_string()
                        : "round trip gave " + back.to_string() + " instead of " + f.to_string();
  } catch (const Error& e) {
    out.ok = false;
    out.detail = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return out;
}

bool substitution_crosscheck(const CoeffTable& direct, const CoeffTable& series, long N_lo,
                             long N_hi, int q_lo, int q_hi) {
  if (direct.mu != series.mu) return false;
  const int mu = direct.mu;
  const int first = std::max(q_lo, -mu + 1);
  if (q_hi < first) return true;
  for (long N = N_lo; N <= N_hi; ++N) {
    const Series s =
        substitute_v_exp_unshifted(series, N, static_cast<unsigned>(std::max(q_hi, 0)));
    for (int q = first; q <= q_hi; ++q)
      if (w_direct(direct, N, q) != s[static_cast<unsigned>(q + mu - 1)])
        return false;
  }
  return true;
}

bool substitution_crosscheck(const CoeffTable& t, long N_lo, long N_hi, int q_lo, int q_hi) {
  return substitution_crosscheck(t, t, N_lo, N_hi, q_lo, q_hi);
}

CoeffTable mutate_table(const CoeffTable& t) {
  CoeffTable out = t;
  if (out.entries.empty()) {
    out.entries[{0, 0}] = 1;
    return out;
  }
  auto it = out.entries.begin();
  it->second += 1;
  if (it->second == 0) out.entries.erase(it);
  return out;
}

}  // namespace knotapprox
