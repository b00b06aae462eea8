#pragma once

// Desk-scale certification of finite-type claims and polynomial identities.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotapprox/approx.hpp"
#include "knotapprox/skein.hpp"

namespace knotapprox {

// Vassiliev extension: sum over all resolutions of sign * invariant.
Rat extend_to_singular(const Evaluator& invariant, const LinkDiagram& d);

struct SingularSample {
  std::string id;
  LinkDiagram diagram;
};

struct SampleResult {
  std::string id;
  int singular_count = 0;
  std::optional<Rat> value;  // empty when evaluation failed
  std::string error;
};

struct OrderCheckReport {
  std::string invariant_name;
  int claimed_order = 0;
  std::vector<SampleResult> samples;
  bool all_zero_at_q_plus_1 = false;
};

// Every sample must carry claimed_order + 1 double points (Error(Domain)
// otherwise). Per-sample failures are recorded, not thrown.
OrderCheckReport order_check(const std::string& name, const Evaluator& invariant,
                             int claimed_order, const std::vector<SingularSample>& samples);

// Singularised closures of pseudo-random braids with at most `max_crossings`
// crossings and exactly `double_points` double points. Deterministic in seed.
std::vector<SingularSample> singular_samples(int double_points, int count, std::uint64_t seed,
                                             int max_crossings = 8);

// w_{Nq} and B_{mj} as functions of a transverse diagram. The engine is
// shared so the memo table persists across evaluations.
Evaluator w_invariant(long N, int q, std::shared_ptr<SkeinEngine> engine);
Evaluator B_invariant(int m, int j, std::shared_ptr<SkeinEngine> engine);

bool z_lowbound_check(const LaurentPoly2& p, int mu);

enum class DeltaBasis { Homflypt, Dubrovnik };

struct DeltaDecomposition {
  bool ok = false;
  // Basis element used: "(v^-1-v)/z", "(v-v^-1)/z" or "(a-a^-1+z)/z".
  std::string basis_element;
  // delta^r coefficient (a Laurent polynomial in the first variable only).
  std::map<int, LaurentPoly2> coefficients;
  // Part with non-negative z powers left after peeling.
  LaurentPoly2 remainder;
  int max_power = 0;
  std::string obstruction;
};

// Greedy peeling of negative z powers into powers of the split factor. For
// HOMFLYPT both signs of (v - v^{-1}) are tried, skein sign first.
DeltaDecomposition delta_basis_decompose(const LaurentPoly2& p, int mu, DeltaBasis basis);

struct IdentityCheck {
  bool ok = false;
  std::string detail;
};

IdentityCheck dubrovnik_kauffman_identity_check(const LinkDiagram& d,
                                                std::size_t crossing_cap = kDefaultCrossingCap);

// w_direct on `direct` against the series expansion of `series`, for every
// N in [N_lo, N_hi] and q in [max(q_lo, -mu+1), q_hi].
bool substitution_crosscheck(const CoeffTable& direct, const CoeffTable& series, long N_lo,
                             long N_hi, int q_lo, int q_hi);
bool substitution_crosscheck(const CoeffTable& t, long N_lo, long N_hi, int q_lo, int q_hi);

// Adds 1 to the first stored entry (or stores a_{00} = 1 in an empty table).
CoeffTable mutate_table(const CoeffTable& t);

}  // namespace knotapprox
