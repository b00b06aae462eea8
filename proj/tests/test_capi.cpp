#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "knotapprox/knotapprox.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ka_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("diagram handles") {
  ka_diagram* d = nullptr;
  REQUIRE(ka_diagram_from_braid("2: 1 1 1", &d) == KA_OK);
  CHECK(ka_diagram_components(d) == 1);
  CHECK(ka_diagram_crossings(d) == 3);
  int w = 0;
  CHECK(ka_diagram_writhe(d, &w) == KA_OK);
  CHECK(w == 3);
  char* pd = nullptr;
  REQUIRE(ka_diagram_to_pd(d, &pd) == KA_OK);
  const std::string text = take(pd);
  ka_diagram* again = nullptr;
  REQUIRE(ka_diagram_from_pd(text.c_str(), &again) == KA_OK);
  CHECK(ka_diagram_crossings(again) == 3);
  ka_diagram_free(again);
  ka_diagram_free(d);

  ka_diagram* loaded = nullptr;
  REQUIRE(ka_diagram_load("hopf-pos", &loaded) == KA_OK);
  CHECK(ka_diagram_components(loaded) == 2);
  ka_diagram_free(loaded);
}

TEST_CASE("errors") {
  ka_diagram* d = nullptr;
  CHECK(ka_diagram_from_pd("PD[X(1,2,3)]", &d) == KA_ERR_PARSE);
  CHECK(std::string(ka_last_error()).find("position") != std::string::npos);
  CHECK(ka_diagram_load("/nonexistent/link.pd", &d) == KA_ERR_IO);
  CHECK(ka_diagram_from_pd(nullptr, &d) == KA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ka_status_name(KA_ERR_RESOURCE)) == "resource");

  REQUIRE(ka_diagram_from_braid("2: 1 1 1 1 1", &d) == KA_OK);
  ka_poly* p = nullptr;
  CHECK(ka_compute(d, KA_HOMFLYPT, 3, &p) == KA_ERR_RESOURCE);
  ka_diagram_free(d);
}

TEST_CASE("polynomials") {
  ka_diagram* d = nullptr;
  REQUIRE(ka_diagram_from_pd("PD[]; loops=1", &d) == KA_OK);
  for (ka_polynomial which : {KA_HOMFLYPT, KA_DUBROVNIK_DELTA, KA_DUBROVNIK, KA_KAUFFMAN}) {
    ka_poly* p = nullptr;
    REQUIRE(ka_compute(d, which, 16, &p) == KA_OK);
    char* s = nullptr;
    REQUIRE(ka_poly_to_string(p, &s) == KA_OK);
    CHECK(take(s) == "1");
    ka_poly_free(p);
  }
  ka_diagram_free(d);

  REQUIRE(ka_diagram_from_braid("2: 1 1 1", &d) == KA_OK);
  ka_poly* p = nullptr;
  REQUIRE(ka_compute(d, KA_HOMFLYPT, 16, &p) == KA_OK);
  REQUIRE(ka_poly_term_count(p) == 3);
  int e1 = 0, e2 = 0;
  char* c = nullptr;
  REQUIRE(ka_poly_term(p, 0, &e1, &e2, &c) == KA_OK);
  CHECK(e1 == 2);
  CHECK(e2 == 0);
  CHECK(take(c) == "2");
  CHECK(ka_poly_term(p, 3, &e1, &e2, &c) == KA_ERR_DOMAIN);
  ka_poly_free(p);
  ka_diagram_free(d);
}

TEST_CASE("tables") {
  ka_table* t = nullptr;
  REQUIRE(ka_table_from_json(R"({"mu": 1, "d": 0, "entries": [[0, 0, "1"]]})", &t) == KA_OK);
  char* s = nullptr;
  REQUIRE(ka_table_w(t, 3, 0, &s) == KA_OK);
  CHECK(take(s) == "1");
  REQUIRE(ka_table_B(t, 1, 0, &s) == KA_OK);
  CHECK(take(s) == "0");
  CHECK(ka_table_w(t, 1, -1, &s) == KA_ERR_DOMAIN);
  ka_table_free(t);

  ka_diagram* d = nullptr;
  REQUIRE(ka_diagram_from_braid("2: 1 1 1", &d) == KA_OK);
  REQUIRE(ka_table_from_diagram(d, 16, &t) == KA_OK);
  REQUIRE(ka_table_to_json(t, &s) == KA_OK);
  const std::string json = take(s);
  ka_table* back = nullptr;
  REQUIRE(ka_table_from_json(json.c_str(), &back) == KA_OK);
  REQUIRE(ka_table_to_json(back, &s) == KA_OK);
  CHECK(take(s) == json);
  ka_table_free(back);
  ka_table_free(t);
  ka_diagram_free(d);
}

TEST_CASE("runner") {
  ka_config* c = ka_config_new();
  REQUIRE(c);
  CHECK(ka_config_set(c, "command", "poly") == KA_OK);
  CHECK(ka_config_set(c, "braid", "2: 1 1") == KA_OK);
  CHECK(ka_config_set(c, "format", "json") == KA_OK);
  CHECK(ka_config_set(c, "bogus", "1") == KA_ERR_DOMAIN);
  CHECK(ka_config_set(c, "precision", "32") == KA_ERR_DOMAIN);
  CHECK(ka_config_set(c, "cap", "x") == KA_ERR_DOMAIN);
  char* report = nullptr;
  char* diag = nullptr;
  int code = -1;
  REQUIRE(ka_run(c, &report, &diag, &code) == KA_OK);
  CHECK(code == 0);
  CHECK(take(report).find("\"homflypt\"") != std::string::npos);
  take(diag);

  CHECK(ka_config_set(c, "cap", "1") == KA_OK);
  REQUIRE(ka_run(c, nullptr, &diag, &code) == KA_OK);
  CHECK(code == 3);
  CHECK_FALSE(take(diag).empty());
  ka_config_free(c);
}
