#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotapprox/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kTrefoilPd = "PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]";

std::size_t error_position(const std::string& text) {
  try {
    parse_pd(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("diagram") {
TEST_CASE("parse_pd examples") {
  const LinkDiagram unknot = parse_pd("PD[]; loops=1");
  CHECK(unknot.crossing_count() == 0);
  CHECK(components(unknot) == 1);

  const LinkDiagram trefoil = parse_pd(kTrefoilPd);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(components(trefoil) == 1);
  CHECK(traced_components(trefoil) == 1);

  CHECK_THROWS_AS(parse_pd("PD[X(1,2,3)]"), ParseError);
  CHECK(error_position("PD[X(1,2,3)]") != std::string::npos);
}

TEST_CASE("parse_pd diagnostics carry positions") {
  CHECK(error_position("PD[X(1,2,3,4)") == 13);
  CHECK(error_position("PD[Y(1,2,3,4)]") == 3);
  CHECK(error_position("PD[X(1,1,1,1)]") != std::string::npos);
  CHECK(error_position("PD[X(1,2,3,4)]") != std::string::npos);
  CHECK(error_position("PD[]; loops=x") != std::string::npos);
  CHECK(error_position("# comment\nPD[]; loops=2") == std::string::npos);
}

TEST_CASE("singular crossings parse") {
  const LinkDiagram d = parse_pd("PD[S(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]");
  CHECK(d.singular_count() == 1);
  CHECK(components(d) == 1);
  CHECK_THROWS_AS(writhe(d), Error);
}

TEST_CASE("from_braid examples") {
  const LinkDiagram unknot = from_braid({1, {}});
  CHECK(unknot.crossing_count() == 0);
  CHECK(components(unknot) == 1);
  const LinkDiagram hopf = braid("2: 1 1");
  CHECK(components(hopf) == 2);
  CHECK(traced_components(hopf) == 2);
  const LinkDiagram trefoil = braid("2: 1 1 1");
  CHECK(components(trefoil) == 1);
  CHECK(traced_components(trefoil) == 1);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(components(braid("braid 4: 1")) == 3);
  CHECK_THROWS_AS(parse_braid("2: 1 2"), Error);
  CHECK_THROWS_AS(parse_braid("2 1 1"), ParseError);
}

TEST_CASE("writhe examples") {
  CHECK(writhe(parse_pd("PD[]; loops=1")) == 0);
  const LinkDiagram right = braid("2: 1 1 1");
  CHECK(writhe(right) == 3);
  CHECK(writhe(mirror(right)) == -3);
  CHECK(writhe(parse_pd(kTrefoilPd)) == -3);
}

TEST_CASE("crossing operations") {
  const LinkDiagram hopf = braid("2: 1 1");
  CHECK(canonical_key(switch_crossing(switch_crossing(hopf, 0), 0)) == canonical_key(hopf));
  const LinkDiagram smoothed = smooth_oriented(hopf, 0);
  CHECK(smoothed.crossing_count() == 1);
  CHECK(components(smoothed) == 1);
  CHECK(canonical_key(smoothed) == canonical_key(braid("2: 1")));

  const LinkDiagram s = make_singular(hopf, 1);
  CHECK(s.singular_count() == 1);
  const auto rs = resolve_singulars(s);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].sign == 1);
  CHECK(canonical_key(rs[0].diagram) == canonical_key(hopf));
  CHECK(rs[1].sign == -1);
  CHECK(canonical_key(rs[1].diagram) == canonical_key(switch_crossing(hopf, 1)));
  CHECK_THROWS_AS(smooth_oriented(s, 1), Error);
  CHECK_THROWS_AS(switch_crossing(hopf, 2), Error);

  // a negative crossing singularised resolves back to itself negatively
  const LinkDiagram neg = braid("2: -1 -1");
  const auto rn = resolve_singulars(make_singular(neg, 0));
  CHECK(canonical_key(rn[1].diagram) == canonical_key(neg));
}

TEST_CASE("resolve_singulars signs") {
  const LinkDiagram d = braid("2: 1 1 1");
  CHECK(resolve_singulars(d).size() == 1);
  const auto two = resolve_singulars(make_singular(make_singular(d, 0), 2));
  REQUIRE(two.size() == 4);
  CHECK(two[0].sign == 1);
  CHECK(two[1].sign == -1);
  CHECK(two[2].sign == -1);
  CHECK(two[3].sign == 1);
  const LinkDiagram three = make_singular(make_singular(make_singular(d, 0), 1), 2);
  const auto all = resolve_singulars(three);
  CHECK(all.size() == 8);
  int total = 0;
  for (const auto& r : all) {
    total += r.sign;
    CHECK(r.diagram.singular_count() == 0);
  }
  CHECK(total == 0);
}

TEST_CASE("smooth_unoriented keeps a valid orientation") {
  for (const char* w : {"2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1"})
    for (std::size_t c = 0; c < braid(w).crossing_count(); ++c) {
      const LinkDiagram d = braid(w);
      for (Smoothing m : {Smoothing::Zero, Smoothing::Infinity}) {
        const LinkDiagram s = smooth_unoriented(d, c, m);
        CHECK(s.crossing_count() == d.crossing_count() - 1);
        CHECK(components(s) == traced_components(s));
      }
    }
}

TEST_CASE("simplify examples") {
  const LinkDiagram kink = parse_pd("PD[X(1,1,2,2)]");
  CHECK(simplify(kink).crossing_count() == 0);
  const Simplified t = simplify_tracked(kink);
  CHECK(t.removed_writhe == 1);
  const LinkDiagram unknot = parse_pd("PD[]; loops=1");
  CHECK(simplify(unknot) == unknot);
  const LinkDiagram r2 = braid("2: 1 -1");
  const LinkDiagram reduced = simplify(r2);
  CHECK(reduced.crossing_count() == 0);
  CHECK(components(reduced) == 2);
  const LinkDiagram trefoil = braid("2: 1 1 1");
  CHECK(simplify(trefoil) == trefoil);
}

TEST_CASE("corpus invariants") {
  for (const CorpusLink& c : load_corpus()) {
    CAPTURE(c.name);
    const LinkDiagram& d = c.diagram;
    const int mu = components(d);
    CHECK(mu == traced_components(d));
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      CHECK(components(switch_crossing(d, i)) == mu);
      CHECK(components(make_singular(d, i)) == mu);
    }
    CHECK(components(simplify(d)) == mu);
    const std::string text = serialize_pd(d);
    const LinkDiagram back = parse_pd(text);
    CHECK(serialize_pd(back) == text);
    CHECK(canonical_key(back) == canonical_key(d));
    CHECK(writhe(back) == writhe(d));
  }
}

TEST_CASE("singular corpus round trips") {
  for (const SingularSample& s : load_singular_samples()) {
    CAPTURE(s.id);
    CHECK(s.diagram.singular_count() >= 1);
    const LinkDiagram back = parse_pd(serialize_pd(s.diagram));
    CHECK(canonical_key(back) == canonical_key(s.diagram));
    CHECK(components(s.diagram) == traced_components(s.diagram));
  }
}

TEST_CASE("canonical key ignores labels and crossing order") {
  const LinkDiagram a = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]");
  std::vector<Crossing> cs(a.crossings().rbegin(), a.crossings().rend());
  for (Crossing& c : cs)
    for (int& l : c.arcs) l = 3 * l + 7;
  const LinkDiagram b(cs, 0);
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(mirror(a)));
}
}
