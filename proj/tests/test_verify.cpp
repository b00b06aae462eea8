#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotapprox/error.hpp"
#include "knotapprox/suite.hpp"
#include "knotapprox/verify.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Rat writhe_of(const LinkDiagram& d) { return Rat(writhe(d)); }

}  // namespace

TEST_SUITE("verify") {
TEST_CASE("extend_to_singular") {
  auto engine = std::make_shared<SkeinEngine>();
  const Evaluator w = w_invariant(1, 2, engine);
  const LinkDiagram trefoil = braid("2: 1 1 1");
  CHECK(extend_to_singular(w, trefoil) == w(trefoil));
  // The kink crossing switches by an isotopy.
  const LinkDiagram kink = make_singular(parse_pd("PD[X(1,1,2,2)]"), 0);
  CHECK(extend_to_singular(w, kink) == 0);
  // Two double points: + - - + over the four resolutions.
  const LinkDiagram two = make_singular(make_singular(trefoil, 0), 1);
  const Rat expected = w(trefoil) - w(switch_crossing(trefoil, 1)) - w(switch_crossing(trefoil, 0)) +
                       w(switch_crossing(switch_crossing(trefoil, 0), 1));
  CHECK(extend_to_singular(w, two) == expected);
  CHECK(extend_to_singular(writhe_of, two) == 0);
}

TEST_CASE("order_check") {
  auto engine = std::make_shared<SkeinEngine>();
  const auto ones = singular_samples(1, 12, 7);
  CHECK(order_check("w_{1,0}", w_invariant(1, 0, engine), 0, ones).all_zero_at_q_plus_1);
  const Evaluator constant = [](const LinkDiagram&) { return Rat(1); };
  CHECK(order_check("one", constant, 0, ones).all_zero_at_q_plus_1);
  const Evaluator positive_writhe = [](const LinkDiagram& d) { return Rat(writhe(d)); };
  CHECK_FALSE(order_check("writhe", positive_writhe, 0, ones).all_zero_at_q_plus_1);
  CHECK_THROWS_AS(order_check("one", constant, 1, ones), Error);
  CHECK_FALSE(order_check("one", constant, 0, {}).all_zero_at_q_plus_1);

  const auto big = std::vector<SingularSample>{{"big", make_singular(braid("2: 1 1 1 1 1"), 0)}};
  auto capped = std::make_shared<SkeinEngine>(3);
  const OrderCheckReport r = order_check("w", w_invariant(1, 0, capped), 0, big);
  REQUIRE(r.samples.size() == 1);
  CHECK_FALSE(r.samples[0].value.has_value());
  CHECK_FALSE(r.samples[0].error.empty());
  CHECK_FALSE(r.all_zero_at_q_plus_1);
}

TEST_CASE("finite order on generated samples") {
  auto engine = std::make_shared<SkeinEngine>();
  for (int q = 0; q <= 2; ++q) {
    const auto samples = singular_samples(q + 1, 10, 3);
    for (long N = 1; N <= 3; ++N)
      CHECK(order_check("w", w_invariant(N, q, engine), q, samples).all_zero_at_q_plus_1);
  }
}

TEST_CASE("singular sample generator") {
  for (int s = 1; s <= 3; ++s) {
    const auto a = singular_samples(s, 15, 11);
    const auto b = singular_samples(s, 15, 11);
    REQUIRE(a.size() == 15);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].id == b[i].id);
      CHECK(canonical_key(a[i].diagram) == canonical_key(b[i].diagram));
      CHECK(a[i].diagram.crossing_count() <= 8);
      std::size_t singular = 0;
      for (const Crossing& c : a[i].diagram.crossings()) singular += c.kind == CrossingKind::Singular;
      CHECK(singular == static_cast<std::size_t>(s));
    }
  }
  const auto other = singular_samples(2, 15, 12);
  bool differs = false;
  const auto base = singular_samples(2, 15, 11);
  for (std::size_t i = 0; i < other.size(); ++i) differs |= other[i].id != base[i].id;
  CHECK(differs);
}

TEST_CASE("bundled singular samples") {
  const auto bundled = load_singular_samples();
  CHECK(bundled.size() >= 10);
  for (int s = 1; s <= 3; ++s) CHECK(samples_with(bundled, s, 10, 1).size() >= 10);
}

TEST_CASE("z_lowbound_check") {
  CHECK(z_lowbound_check(LaurentPoly2::constant(1), 1));
  CHECK(z_lowbound_check(homflypt(parse_pd("PD[]; loops=2")), 2));
  CHECK_FALSE(z_lowbound_check(poly(VarLabels::VZ, {{1, 0, -2}}), 2));
}

TEST_CASE("delta_basis_decompose") {
  const DeltaDecomposition one = delta_basis_decompose(LaurentPoly2::constant(1), 1, DeltaBasis::Homflypt);
  CHECK(one.ok);
  CHECK(one.max_power == 0);
  CHECK(one.remainder == LaurentPoly2::constant(1));

  const DeltaDecomposition u2 =
      delta_basis_decompose(homflypt(parse_pd("PD[]; loops=2")), 2, DeltaBasis::Homflypt);
  CHECK(u2.ok);
  CHECK(u2.basis_element == "(v^-1-v)/z");
  CHECK(u2.max_power == 1);
  CHECK(u2.coefficients.at(1) == LaurentPoly2::constant(1));
  CHECK(u2.remainder.is_zero());

  const DeltaDecomposition t = delta_basis_decompose(homflypt(braid("2: 1 1 1")), 1, DeltaBasis::Homflypt);
  CHECK(t.ok);
  CHECK(t.max_power == 0);
  CHECK(t.remainder == homflypt(braid("2: 1 1 1")));

  CHECK_FALSE(delta_basis_decompose(poly(VarLabels::VZ, {{1, 0, -1}}), 2, DeltaBasis::Homflypt).ok);
  CHECK_FALSE(delta_basis_decompose(poly(VarLabels::VZ, {{1, 0, -2}}), 2, DeltaBasis::Homflypt).ok);

  for (const CorpusLink& c : load_corpus()) {
    CAPTURE(c.name);
    const int mu = components(c.diagram);
    const DeltaDecomposition h = delta_basis_decompose(homflypt(c.diagram), mu, DeltaBasis::Homflypt);
    const DeltaDecomposition f = delta_basis_decompose(dubrovnik(c.diagram), mu, DeltaBasis::Dubrovnik);
    CHECK(h.ok);
    CHECK(f.ok);
    CHECK(h.max_power <= mu - 1);
    CHECK(f.max_power <= mu - 1);
  }
}

TEST_CASE("Dubrovnik and Kauffman identity") {
  CHECK(dubrovnik_kauffman_identity_check(parse_pd("PD[]; loops=1")).ok);
  CHECK(dubrovnik_kauffman_identity_check(braid("2: 1 1")).ok);
  CHECK(dubrovnik_kauffman_identity_check(braid("2: 1 1 1")).ok);
  for (const CorpusLink& c : load_corpus()) CHECK(dubrovnik_kauffman_identity_check(c.diagram).ok);
}

TEST_CASE("substitution_crosscheck") {
  const CoeffTable u = coeff_table(LaurentPoly2::constant(1), 1);
  const CoeffTable t = coeff_table(homflypt(braid("2: 1 1 1")), 1);
  CHECK(substitution_crosscheck(u, -2, 2, 0, 5));
  CHECK(substitution_crosscheck(t, -2, 2, 0, 5));
  CHECK_FALSE(substitution_crosscheck(mutate_table(t), t, -2, 2, 0, 5));
  CHECK(mutate_table(t) != t);
  CHECK(mutate_table(CoeffTable{}).at(0, 0) == 1);
}

TEST_CASE("suite checks on a small option set") {
  SuiteOptions opt;
  const auto corpus = load_corpus();
  const auto links = prepare_corpus(corpus, opt);
  CHECK(check_z_floor(links).passed);
  CHECK(check_substitution(links, opt).passed);
  CHECK(check_recover_B(links, opt).passed);
  CHECK(check_stationarity(links).passed);
  CHECK(check_kauffman(links, opt).passed);
  CHECK(check_normalization(opt).passed);

  SuiteOptions faulty = opt;
  faulty.mutate = 1;
  const auto bad = prepare_corpus(corpus, faulty);
  CHECK_FALSE(check_substitution(bad, faulty).passed);
  CHECK_THROWS_AS(run_suite(opt, std::string("nope")), Error);
}
}
