// Acceptance criteria over the bundled corpus; one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "knotapprox/approx.hpp"
#include "knotapprox/commands.hpp"
#include "knotapprox/corpus.hpp"
#include "knotapprox/skein.hpp"
#include "knotapprox/suite.hpp"
#include "knotapprox/verify.hpp"
#include "json.hpp"

using namespace knotapprox;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string first_failure(const CheckResult& r) {
  for (const CheckLine& l : r.lines)
    if (!l.ok) return l.subject + ": " + l.detail;
  return r.summary;
}

Outcome from_check(const CheckResult& r) { return {r.passed, r.passed ? r.summary : first_failure(r)}; }

Outcome both(const Outcome& a, const Outcome& b) {
  return {a.ok && b.ok, a.ok ? b.detail : a.detail};
}

const std::vector<CorpusLink>& corpus() {
  static const std::vector<CorpusLink> c = load_corpus();
  return c;
}

const std::vector<PreparedLink>& prepared() {
  static const std::vector<PreparedLink> p = prepare_corpus(corpus(), SuiteOptions{});
  return p;
}

Outcome skein_axioms() {
  std::size_t max_crossings = 0;
  for (const CorpusLink& c : corpus()) max_crossings = std::max(max_crossings, c.diagram.crossing_count());
  if (max_crossings > 10) return {false, "corpus diagram above 10 crossings"};
  return from_check(check_skein_axioms(prepared(), SuiteOptions{}));
}

Outcome unknot_normalization() {
  RunConfig c;
  c.command = Command::Poly;
  c.format = OutputFormat::Json;
  c.pd = "empty-unknot";
  const RunResult r = run(c);
  if (r.exit_code != 0) return {false, "poly exited " + std::to_string(r.exit_code)};
  const auto j = nlohmann::json::parse(r.output);
  if (j["polynomials"].size() != 4) return {false, "expected four polynomials"};
  for (const auto& p : j["polynomials"])
    if (p["text"] != "1") return {false, p["name"].get<std::string>() + " = " + p["text"].get<std::string>()};
  return both({true, "poly: homflypt, delta, dubrovnik, kauffman all 1"},
              from_check(check_normalization(SuiteOptions{})));
}

Outcome z_floor() {
  bool mus[4] = {};
  for (const PreparedLink& l : prepared())
    if (l.mu <= 3) mus[l.mu] = true;
  if (!mus[1] || !mus[2] || !mus[3]) return {false, "corpus lacks a mu = 1, 2 or 3 link"};
  return from_check(check_z_floor(prepared()));
}

Outcome lambda_consistency() {
  const CheckResult r = check_lambda(SuiteOptions{});
  const unsigned prec = kDefaultPrecisionBits;
  const CxFloat one(Rat(1), Rat(0), prec);
  if (relative_deviation(lambda_weight(0, 0, prec), one) > 1e-70) return {false, "lambda_{0,0} != 1"};
  for (long n = -6; n <= 6; ++n)
    if (n != 0 && lambda_weight(0, n, prec).abs().to_double() > 1e-70)
      return {false, "lambda_{0," + std::to_string(n) + "} != 0"};
  return from_check(r);
}

Outcome order_witnessing() {
  const auto bundled = load_singular_samples();
  SuiteOptions opt;
  for (int q = 0; q <= 2; ++q)
    if (samples_with(bundled, q + 1, opt.samples_per_order, opt.seed + q).size() < 10)
      return {false, "fewer than 10 samples with " + std::to_string(q + 1) + " double points"};
  return from_check(check_order(bundled, opt));
}

// A fault in any one link's pipeline table must trip substitution,
// recover-B or stationarity.
Outcome mutation_sensitivity() {
  const SuiteOptions opt;
  std::size_t caught = 0, total = 0;
  std::string missed;
  for (std::size_t i = 0; i < prepared().size(); ++i) {
    if (!prepared()[i].table) continue;
    std::vector<PreparedLink> links{prepared()[i]};
    links[0].pipeline = mutate_table(*links[0].table);
    links[0].mutated = true;
    ++total;
    const bool detected = !check_substitution(links, opt).passed || !check_recover_B(links, opt).passed ||
                          !check_stationarity(links).passed;
    if (detected)
      ++caught;
    else
      missed += (missed.empty() ? "" : ", ") + links[0].name;
  }
  if (caught != total) return {false, "fault undetected on " + missed};
  return {true, "fault detected on " + std::to_string(caught) + "/" + std::to_string(total) + " links"};
}

}  // namespace

int main() {
  const SuiteOptions opt;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"skein axioms", skein_axioms},
      {"unknot normalization", unknot_normalization},
      {"z-exponent floor and delta basis", z_floor},
      {"two-path w equality", [&] { return from_check(check_substitution(prepared(), opt)); }},
      {"B from w round trip", [&] { return from_check(check_recover_B(prepared(), opt)); }},
      {"a from B round trip and stationarity", [&] { return from_check(check_stationarity(prepared())); }},
      {"lambda consistency", lambda_consistency},
      {"pointwise convergence", [&] { return from_check(check_convergence(prepared(), opt)); }},
      {"Vassiliev order witnessing", order_witnessing},
      {"Dubrovnik and Kauffman identity", [&] { return from_check(check_kauffman(prepared(), opt)); }},
      {"mutation sensitivity", mutation_sensitivity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu: %s (%s) [%.2fs]\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
