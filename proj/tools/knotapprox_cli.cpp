// knotapprox: link polynomials and their finite-type approximations.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotapprox/knotapprox.h"

namespace {

struct Options {
  std::optional<std::string> pd, braid, table, which, only;
  std::optional<int> qmax, nmax, Nmax;
  unsigned precision = 256;
  unsigned long cap = 16;
  std::string format = "text";
  unsigned long long seed = 1;
  int mutate = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  auto* pd = cmd->add_option("--pd", o.pd, "PD code file or corpus name");
  auto* braid = cmd->add_option("--braid", o.braid, "braid word \"n: w1 w2 ...\" or file");
  auto* table = cmd->add_option("--table", o.table, "coefficient table JSON file");
  pd->excludes(braid)->excludes(table);
  braid->excludes(table);
  cmd->add_option("--which", o.which, "polynomial to print")
      ->check(CLI::IsMember({"homflypt", "dubrovnik", "kauffman"}));
  cmd->add_option("--qmax", o.qmax, "largest q for w_{Nq} and B recovery");
  cmd->add_option("--nmax", o.nmax, "largest n for M_n solves / |n| for lambda");
  cmd->add_option("--Nmax", o.Nmax, "partial-sum bound / largest m for lambda");
  cmd->add_option("--precision", o.precision, "float precision in bits")->check(CLI::Range(64u, 1u << 20));
  cmd->add_option("--cap", o.cap, "crossing cap for skein recursion")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "json, tsv or text")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
  cmd->add_option("--seed", o.seed, "seed for singular sample generation");
  cmd->add_option("--only", o.only, "run a single verification check");
  cmd->add_option("--mutate", o.mutate, "number of corpus tables given an injected fault")
      ->check(CLI::NonNegativeNumber);
}

bool set(ka_config* c, const char* key, const std::string& value) {
  if (ka_config_set(c, key, value.c_str()) == KA_OK) return true;
  std::cerr << "knotapprox: " << ka_last_error() << "\n";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link polynomials and their approximation by finite-type invariants"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> names = {"poly", "approx", "verify", "lambda"};
  std::vector<CLI::App*> cmds;
  cmds.push_back(app.add_subcommand("poly", "HOMFLYPT, Dubrovnik and Kauffman polynomials"));
  cmds.push_back(app.add_subcommand("approx", "recover a_{kj} through w, B and lambda"));
  cmds.push_back(app.add_subcommand("verify", "run the verification suite over the corpus"));
  cmds.push_back(app.add_subcommand("lambda", "tabulate the weights lambda_{m,n}"));
  for (auto* c : cmds) add_common(c, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ka_config* cfg = ka_config_new();
  if (!cfg) return 5;
  bool ok = true;
  for (std::size_t i = 0; i < cmds.size(); ++i)
    if (cmds[i]->parsed()) ok = ok && set(cfg, "command", names[i]);
  ok = ok && set(cfg, "format", o.format) && set(cfg, "precision", std::to_string(o.precision)) &&
       set(cfg, "cap", std::to_string(o.cap)) && set(cfg, "seed", std::to_string(o.seed)) &&
       set(cfg, "mutate", std::to_string(o.mutate));
  if (o.pd) ok = ok && set(cfg, "pd", *o.pd);
  if (o.braid) ok = ok && set(cfg, "braid", *o.braid);
  if (o.table) ok = ok && set(cfg, "table", *o.table);
  if (o.which) ok = ok && set(cfg, "which", *o.which);
  if (o.only) ok = ok && set(cfg, "only", *o.only);
  if (o.qmax) ok = ok && set(cfg, "qmax", std::to_string(*o.qmax));
  if (o.nmax) ok = ok && set(cfg, "nmax", std::to_string(*o.nmax));
  if (o.Nmax) ok = ok && set(cfg, "Nmax", std::to_string(*o.Nmax));
  if (!ok) {
    ka_config_free(cfg);
    return 4;
  }

  char* report = nullptr;
  char* diagnostics = nullptr;
  int code = 0;
  const ka_status st = ka_run(cfg, &report, &diagnostics, &code);
  ka_config_free(cfg);
  if (st != KA_OK) {
    std::cerr << "knotapprox: " << ka_last_error() << "\n";
    return 5;
  }
  std::fputs(report, stdout);
  if (diagnostics[0] != '\0') std::cerr << "knotapprox: " << diagnostics << "\n";
  ka_string_free(report);
  ka_string_free(diagnostics);
  return code;
}
