#pragma once

// The verification suite run by `knotapprox verify` and the acceptance test.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotapprox/approx.hpp"
#include "knotapprox/corpus.hpp"
#include "knotapprox/skein.hpp"

namespace knotapprox {

struct SuiteOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::size_t crossing_cap = kDefaultCrossingCap;
  std::uint64_t seed = 1;
  // Number of corpus links whose pipeline table carries an injected fault.
  int mutate = 0;
  long N_lo = -3;
  long N_hi = 3;
  int q_max = 6;
  int q_max_recover = 4;
  int m_max_floor = 10;
  unsigned lambda_m_max = 12;
  long lambda_n_max = 6;
  double lambda_rel_tol = 1e-25;
  int approx_N_max = 200;
  double approx_tol = 1e-6;
  int samples_per_order = 12;
};

struct CheckLine {
  std::string subject;
  bool ok = true;
  std::string detail;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string summary;
  std::vector<CheckLine> lines;

  void add(std::string subject, bool ok, std::string detail = {});
};

// A corpus link with both polynomials and two coefficient tables: `table`
// is read off the polynomial, `pipeline` is what the reconstruction paths
// consume (equal to `table` unless a fault was injected).
struct PreparedLink {
  std::string name;
  LinkDiagram diagram;
  int mu = 1;
  std::optional<LaurentPoly2> homflypt;
  std::optional<LaurentPoly2> dubrovnik;
  std::optional<CoeffTable> table;
  std::optional<CoeffTable> pipeline;
  bool mutated = false;
  std::string error;
};

std::vector<PreparedLink> prepare_corpus(const std::vector<CorpusLink>& corpus,
                                         const SuiteOptions& opt);

CheckResult check_skein_axioms(const std::vector<PreparedLink>& links, const SuiteOptions& opt);
CheckResult check_normalization(const SuiteOptions& opt);
CheckResult check_z_floor(const std::vector<PreparedLink>& links);
CheckResult check_substitution(const std::vector<PreparedLink>& links, const SuiteOptions& opt);
CheckResult check_recover_B(const std::vector<PreparedLink>& links, const SuiteOptions& opt);
CheckResult check_stationarity(const std::vector<PreparedLink>& links);
CheckResult check_lambda(const SuiteOptions& opt);
CheckResult check_convergence(const std::vector<PreparedLink>& links, const SuiteOptions& opt);
CheckResult check_series_identity(const std::vector<PreparedLink>& links, const SuiteOptions& opt);
// w_{Nq} order witnessing plus the writhe negative control.
CheckResult check_order(const std::vector<SingularSample>& bundled, const SuiteOptions& opt);
// Observed vanishing thresholds of the recovered B_{mj}; informational.
CheckResult check_B_order(const std::vector<SingularSample>& bundled, const SuiteOptions& opt);
CheckResult check_kauffman(const std::vector<PreparedLink>& links, const SuiteOptions& opt);

const std::vector<std::string>& suite_check_names();

// Runs every check, or only the named one (Error(Domain) for unknown names).
std::vector<CheckResult> run_suite(const SuiteOptions& opt, const std::optional<std::string>& only);

// Samples with exactly `double_points` double points: bundled ones first,
// topped up from the seeded generator to at least `count`.
std::vector<SingularSample> samples_with(const std::vector<SingularSample>& bundled,
                                         int double_points, int count, std::uint64_t seed);

}  // namespace knotapprox
