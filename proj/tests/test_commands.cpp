#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "json.hpp"

#include "doctest.h"
#include "knotapprox/commands.hpp"

using namespace knotapprox;

namespace {

RunConfig config(Command cmd, OutputFormat fmt = OutputFormat::Json) {
  RunConfig c;
  c.command = cmd;
  c.format = fmt;
  return c;
}

}  // namespace

TEST_CASE("command and format names") {
  CHECK(parse_command("poly") == Command::Poly);
  CHECK(parse_command("lambda") == Command::Lambda);
  CHECK_FALSE(parse_command("plot").has_value());
  CHECK(parse_format("tsv") == OutputFormat::Tsv);
  CHECK_FALSE(parse_format("csv").has_value());
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::Parse) == 2);
  CHECK(exit_code_for(ErrorKind::Io) == 2);
  CHECK(exit_code_for(ErrorKind::Resource) == 3);
  CHECK(exit_code_for(ErrorKind::Domain) == 4);
  CHECK(exit_code_for(ErrorKind::Consistency) == 5);
}

TEST_CASE("poly") {
  RunConfig c = config(Command::Poly);
  c.pd = "empty-unknot";
  const RunResult r = run(c);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j["polynomials"].size() == 4);
  for (const auto& p : j["polynomials"]) CHECK(p["text"] == "1");

  c.pd.reset();
  c.braid = "2: 1 1 1";
  c.which = "homflypt";
  c.format = OutputFormat::Tsv;
  const RunResult t = run(c);
  CHECK(t.exit_code == 0);
  CHECK(t.output.rfind("polynomial\te1\te2\tcoefficient\n", 0) == 0);
  CHECK(t.output.find("homflypt\t2\t2\t1\n") != std::string::npos);

  c.which = "jones";
  CHECK(run(c).exit_code == 4);
  c.which.reset();
  c.braid = "2: 1 x";
  CHECK(run(c).exit_code == 2);
  c.braid = "2: 1 1 1 1 1";
  c.crossing_cap = 3;
  const RunResult capped = run(c);
  CHECK(capped.exit_code == 3);
  CHECK_FALSE(capped.diagnostics.empty());
}

TEST_CASE("approx") {
  RunConfig c = config(Command::Approx);
  c.braid = "trefoil-right";
  const RunResult r = run(c);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const int d = j["d"];
  for (const auto& cell : j["cells"]) {
    CHECK(cell["stationary_n"].get<int>() <= d);
    CHECK(std::stod(cell["final_error"].get<std::string>()) < 1e-6);
  }
  c.q_max = -1;
  CHECK(run(c).exit_code == 4);
}

TEST_CASE("lambda and verify") {
  RunConfig c = config(Command::Lambda, OutputFormat::Tsv);
  c.N_max = 2;
  c.n_max = 2;
  const RunResult r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("m\tn\trecurrence", 0) == 0);

  RunConfig v = config(Command::Verify);
  v.only = "normalization";
  CHECK(run(v).exit_code == 0);
  v.only = "missing";
  CHECK(run(v).exit_code == 4);
}

TEST_CASE("json output is deterministic") {
  RunConfig c = config(Command::Approx);
  c.braid = "hopf-pos";
  c.N_max = 60;
  CHECK(run(c).output == run(c).output);
}
