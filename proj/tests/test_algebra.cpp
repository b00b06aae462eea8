#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotapprox/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("algebra") {
TEST_CASE("lp_add examples") {
  const auto a = poly(VarLabels::VZ, {{1, 1, 0}, {1, 0, 1}});
  const auto b = poly(VarLabels::VZ, {{1, 1, 0}, {-1, 0, 1}});
  CHECK(lp_add(a, b) == poly(VarLabels::VZ, {{2, 1, 0}}));
  CHECK(lp_add(a, LaurentPoly2(VarLabels::VZ)) == a);
  const auto c = poly(VarLabels::VZ, {{1, -1, 1}});
  const auto sum = lp_add(c, c * Rat(-1));
  CHECK(sum.terms().empty());
}

TEST_CASE("lp_mul examples") {
  const auto a = poly(VarLabels::VZ, {{1, 1, 0}, {-1, -1, 0}});
  const auto b = poly(VarLabels::VZ, {{1, 1, 0}, {1, -1, 0}});
  CHECK(lp_mul(a, b) == poly(VarLabels::VZ, {{1, 2, 0}, {-1, -2, 0}}));
  CHECK(lp_mul(a, LaurentPoly2::constant(1, VarLabels::VZ)) == a);
  CHECK(lp_mul(poly(VarLabels::VZ, {{1, 0, -1}}), poly(VarLabels::VZ, {{1, 0, 1}})) ==
        LaurentPoly2::constant(1, VarLabels::VZ));
}

TEST_CASE("mismatched labels are rejected") {
  const auto a = poly(VarLabels::VZ, {{1, 1, 0}});
  const auto b = poly(VarLabels::AZ, {{1, 1, 0}});
  CHECK_THROWS_AS(lp_add(a, b), Error);
  try {
    lp_mul(a, b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LabelMismatch);
  }
}

TEST_CASE("ring axioms on random operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4);
  auto random_poly = [&] {
    LaurentPoly2 p(VarLabels::VZ);
    for (int i = 0; i < 4; ++i) p.add_term(make_rat(c(rng), 1 + std::abs(c(rng))), e(rng), e(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    const LaurentPoly2 pq = p * q;
    for (const auto& [exp, coef] : pq.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("degree and to_string") {
  const auto p = poly(VarLabels::VZ, {{2, 2, 0}, {-1, 4, 0}, {1, 2, 2}});
  CHECK(p.degree() == 4);
  CHECK(p.to_string() == "v^2*z^2 - v^4 + 2*v^2");
  CHECK(LaurentPoly2(VarLabels::AZ).to_string() == "0");
}

TEST_CASE("Rat canonical form") {
  CHECK(make_rat(6, -4) == Rat(-3, 2));
  const Rat x = make_rat(6, -4);
  CHECK(x.get_den() > 0);
  CHECK(rat_to_string(x) == "-3/2");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(parse_rat("10/4") == Rat(5, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const int den = d(rng);
    if (den == 0) continue;
    Rat r = make_rat(d(rng), den) * make_rat(d(rng), 7) + make_rat(1, den);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    CHECK(g == 1);
    CHECK(r.get_den() > 0);
  }
}

TEST_CASE("exp_series examples") {
  CHECK(exp_series(0, 4).coeffs() == std::vector<Rat>{1, 0, 0, 0, 0});
  CHECK(exp_series(1, 3).coeffs() == std::vector<Rat>{1, 1, Rat(1, 2), Rat(1, 6)});
  CHECK(exp_series(-2, 2).coeffs() == std::vector<Rat>{1, -2, 2});
}

TEST_CASE("exp_series derivative relation") {
  for (long c : {-5L, -1L, 0L, 3L, 7L}) {
    const Series s = exp_series(c, 12);
    for (unsigned q = 0; q < 12; ++q) CHECK(Rat(q + 1) * s[q + 1] == Rat(c) * s[q]);
  }
}

TEST_CASE("series arithmetic truncates") {
  const Series a = exp_series(1, 3), b = exp_series(2, 3);
  const Series prod = a * b;
  CHECK(prod == exp_series(3, 3));
  CHECK(prod.order_cap() == 3);
  CHECK(a.shifted_up(2).coeffs() == std::vector<Rat>{0, 0, 1, 1});
}

TEST_CASE("solve_vandermonde examples") {
  const std::vector<long> p12{1, 2};
  const Rat b0(3), b1(11);
  const std::vector<Rat> rhs{b0, b1};
  CHECK(solve_vandermonde(p12, rhs) == std::vector<Rat>{2 * b0 - b1, b1 - b0});
  const std::vector<long> p123{1, 2, 3};
  CHECK(solve_vandermonde(p123, std::vector<Rat>{1, 1, 1}) == std::vector<Rat>{1, 0, 0});
}

TEST_CASE("vandermonde round trips on random vectors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int n = 1; n <= 9; ++n) {
    std::vector<long> params;
    for (long t = -(n / 2); static_cast<int>(params.size()) < n; ++t) params.push_back(t);
    std::vector<Rat> x(n);
    for (auto& xi : x) xi = make_rat(v(rng), 1 + std::abs(v(rng)));
    std::vector<Rat> rows(n), cols(n, 0);
    for (int r = 0; r < n; ++r) {
      Rat acc = 0, tp = 1;
      for (int c = 0; c < n; ++c) {
        acc += tp * x[c];
        tp *= params[r];
      }
      rows[r] = acc;
    }
    // sum_k t_k^m x_k for the transposed system
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) cols[m] += rat_pow(Rat(params[k]), m) * x[k];
    CHECK(solve_vandermonde(params, rows) == x);
    CHECK(solve_vandermonde_transposed(params, cols) == x);
  }
}

TEST_CASE("duplicate parameters are singular") {
  const std::vector<long> p{1, 2, 1};
  try {
    solve_vandermonde(p, std::vector<Rat>{1, 2, 3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("BigFloat precision floor and formatting") {
  CHECK_THROWS_AS(BigFloat(32), Error);
  const BigFloat third(Rat(1, 3), 128);
  CHECK(third.precision() == 128);
  CHECK(third.to_string(5) == "3.3333e-01");
  const BigFloat mixed = third + BigFloat(Rat(1, 3), 256);
  CHECK(mixed.precision() == 256);
  const CxFloat z = CxFloat::expi(BigFloat::pi(256));
  CHECK((z + CxFloat(Rat(1), Rat(0), 256)).abs().to_double() < 1e-70);
}
}
