#include "knotapprox/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "knotapprox/approx.hpp"
#include "knotapprox/corpus.hpp"
#include "knotapprox/suite.hpp"

namespace knotapprox {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kDigits = 30;

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

// Left-aligned columns separated by two spaces.
std::string align(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out += (c ? "\t" : "") + r[c];
    out += "\n";
  }
  return out;
}

bool looks_inline(const std::string& s, char marker) {
  return s.find(marker) != std::string::npos;
}

struct LinkInput {
  std::string name;
  LinkDiagram diagram;
};

LinkInput read_link(const RunConfig& c) {
  if (c.pd) {
    if (looks_inline(*c.pd, '[')) return {"pd", parse_pd(*c.pd)};
    return {*c.pd, load_link(*c.pd)};
  }
  if (c.braid) {
    if (looks_inline(*c.braid, ':')) return {"braid " + *c.braid, from_braid(parse_braid(*c.braid))};
    return {*c.braid, load_link(*c.braid)};
  }
  throw Error(ErrorKind::Domain, "no input: give --pd, --braid or --table");
}

void require_positive(const std::optional<int>& v, const char* flag) {
  if (v && *v < 1) throw Error(ErrorKind::Domain, std::string(flag) + " must be positive");
}

Json terms_json(const LaurentPoly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, rat_to_string(c)});
  return terms;
}

// ---------------------------------------------------------------------------

RunResult cmd_poly(const RunConfig& c) {
  const LinkInput in = read_link(c);
  SkeinEngine engine(c.crossing_cap);
  const int mu = components(in.diagram);
  const std::string which = c.which.value_or("all");
  if (which != "all" && which != "homflypt" && which != "dubrovnik" && which != "kauffman")
    throw Error(ErrorKind::Domain, "unknown polynomial '" + which + "'");

  std::vector<std::pair<std::string, LaurentPoly2>> polys;
  if (which == "all" || which == "homflypt") polys.emplace_back("homflypt", engine.homflypt(in.diagram));
  if (which == "all" || which == "dubrovnik" || which == "kauffman") {
    const LaurentPoly2 delta = engine.dubrovnik_delta(in.diagram);
    const LaurentPoly2 f = delta.shifted(-writhe(in.diagram), 0);
    if (which != "kauffman") {
      polys.emplace_back("delta", delta);
      polys.emplace_back("dubrovnik", f);
    }
    if (which != "dubrovnik") polys.emplace_back("kauffman", kauffman_from_dubrovnik(f, mu));
  }

  RunResult r;
  switch (c.format) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "poly";
      j["input"] = in.name;
      j["components"] = mu;
      j["crossings"] = in.diagram.crossing_count();
      j["writhe"] = writhe(in.diagram);
      Json arr = Json::array();
      for (const auto& [name, p] : polys) {
        const bool vz = p.labels() == VarLabels::VZ;
        arr.push_back({{"name", name},
                       {"variables", vz ? Json::array({"v", "z"}) : Json::array({"a", "z"})},
                       {"text", p.to_string()},
                       {"terms", terms_json(p)}});
      }
      j["polynomials"] = arr;
      r.output = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Tsv: {
      std::vector<std::vector<std::string>> rows{{"polynomial", "e1", "e2", "coefficient"}};
      for (const auto& [name, p] : polys)
        for (const auto& [e, coef] : p.terms())
          rows.push_back({name, std::to_string(e.first), std::to_string(e.second), rat_to_string(coef)});
      r.output = tsv(rows);
      break;
    }
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> rows{
          {"link", in.name},
          {"components", std::to_string(mu)},
          {"crossings", std::to_string(in.diagram.crossing_count())},
          {"writhe", std::to_string(writhe(in.diagram))}};
      for (const auto& [name, p] : polys) rows.push_back({name, p.to_string()});
      r.output = align(rows);
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

struct Cell {
  int k, j;
  Rat exact;
  std::optional<int> stationary_n;
  ApproxReport report;
};

// Smallest n from which every M_n solve up to n_max reproduces column j.
std::optional<int> stationarity_index(const CoeffTable& t, int j, int n_max) {
  std::optional<int> index;
  for (int n = n_max; n >= 1; --n) {
    const RecoveredColumn col = recover_a_from_B(t, j, n);
    bool exact = true;
    for (int k = -n; k <= n && exact; ++k) exact = col.at(k) == t.at(k, j);
    for (const auto& [kj, a] : t.entries)
      if (kj.second == j && std::abs(kj.first) > n) exact = false;
    if (!exact) break;
    index = n;
  }
  return index;
}

RunResult cmd_approx(const RunConfig& c) {
  require_positive(c.n_max, "--nmax");
  require_positive(c.N_max, "--Nmax");
  std::string input;
  CoeffTable t;
  if (c.table) {
    input = *c.table;
    t = table_from_json(read_text_file(*c.table));
  } else {
    const LinkInput in = read_link(c);
    input = in.name;
    t = coeff_table(SkeinEngine(c.crossing_cap).homflypt(in.diagram), components(in.diagram));
  }
  const int q_max = c.q_max.value_or(4);
  if (q_max < -t.mu + 1)
    throw Error(ErrorKind::Domain, "--qmax " + std::to_string(q_max) + " is below -mu+1 = " +
                                       std::to_string(-t.mu + 1));
  const int n_max = c.n_max.value_or(std::max(1, t.degree_d) + 2);
  const int N_max = c.N_max.value_or(200);

  std::set<int> columns;
  for (const auto& [kj, a] : t.entries) columns.insert(kj.second);
  std::map<int, std::optional<int>> stationary;
  for (int j : columns) stationary[j] = stationarity_index(t, j, n_max);

  std::vector<Cell> cells;
  for (const auto& [kj, a] : t.entries)
    cells.push_back({kj.first, kj.second, a, stationary[kj.second],
                     approx_sequence(t, kj.first, kj.second, N_max, c.precision_bits)});

  // B recovered from w_{N,q}, N = 1..q+mu.
  std::vector<std::pair<int, std::vector<Rat>>> recovered;
  for (int q = -t.mu + 1; q <= q_max; ++q) recovered.emplace_back(q, recover_B_from_w(t, q, q + t.mu));

  auto opt_str = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };

  RunResult r;
  switch (c.format) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "approx";
      j["input"] = input;
      j["mu"] = t.mu;
      j["d"] = t.degree_d;
      j["n_max"] = n_max;
      j["N_max"] = N_max;
      j["precision_bits"] = c.precision_bits;
      Json arr = Json::array();
      for (const Cell& cell : cells) {
        Json errors = Json::array();
        for (double e : cell.report.errors) errors.push_back(sci(e));
        arr.push_back({{"k", cell.k},
                       {"j", cell.j},
                       {"exact", rat_to_string(cell.exact)},
                       {"stationary_n", cell.stationary_n ? Json(*cell.stationary_n) : Json()},
                       {"certified_N", cell.report.certified_at ? Json(*cell.report.certified_at) : Json()},
                       {"final_partial_sum", cell.report.sequence.back().to_string(kDigits)},
                       {"final_error", sci(cell.report.final_error())},
                       {"errors", errors}});
      }
      j["cells"] = arr;
      Json bs = Json::array();
      for (const auto& [q, b] : recovered) {
        Json vals = Json::array();
        for (const Rat& x : b) vals.push_back(rat_to_string(x));
        bs.push_back({{"q", q}, {"B", vals}});
      }
      j["B_from_w"] = bs;
      r.output = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Tsv: {
      std::vector<std::vector<std::string>> rows{
          {"k", "j", "exact", "stationary_n", "certified_N", "final_error"}};
      for (const Cell& cell : cells)
        rows.push_back({std::to_string(cell.k), std::to_string(cell.j), rat_to_string(cell.exact),
                        opt_str(cell.stationary_n), opt_str(cell.report.certified_at),
                        sci(cell.report.final_error())});
      r.output = tsv(rows);
      break;
    }
    case OutputFormat::Text: {
      std::string head = "input " + input + "  mu=" + std::to_string(t.mu) + "  d=" +
                         std::to_string(t.degree_d) + "  N_max=" + std::to_string(N_max) + "\n";
      std::vector<std::vector<std::string>> rows{
          {"k", "j", "exact", "stationary_n", "certified_N", "final_error"}};
      for (const Cell& cell : cells)
        rows.push_back({std::to_string(cell.k), std::to_string(cell.j), rat_to_string(cell.exact),
                        opt_str(cell.stationary_n), opt_str(cell.report.certified_at),
                        sci(cell.report.final_error())});
      r.output = head + align(rows);
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

RunResult cmd_verify(const RunConfig& c) {
  require_positive(c.n_max, "--nmax");
  require_positive(c.N_max, "--Nmax");
  SuiteOptions opt;
  opt.precision_bits = c.precision_bits;
  opt.crossing_cap = c.crossing_cap;
  opt.seed = c.seed;
  opt.mutate = c.mutate;
  if (c.q_max) opt.q_max = *c.q_max;
  if (c.n_max) opt.lambda_n_max = *c.n_max;
  if (c.N_max) opt.approx_N_max = *c.N_max;
  const std::vector<CheckResult> checks = run_suite(opt, c.only);
  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const CheckResult& x) { return x.passed; });

  RunResult r;
  r.exit_code = all ? 0 : 1;
  switch (c.format) {
    case OutputFormat::Json: {
      Json j;
      j["command"] = "verify";
      j["passed"] = all;
      Json arr = Json::array();
      for (const CheckResult& x : checks) {
        Json lines = Json::array();
        for (const CheckLine& l : x.lines)
          lines.push_back({{"subject", l.subject}, {"ok", l.ok}, {"detail", l.detail}});
        arr.push_back({{"name", x.name}, {"passed", x.passed}, {"summary", x.summary}, {"lines", lines}});
      }
      j["checks"] = arr;
      r.output = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Tsv: {
      std::vector<std::vector<std::string>> rows{{"check", "subject", "ok", "detail"}};
      for (const CheckResult& x : checks) {
        rows.push_back({x.name, "*", x.passed ? "1" : "0", x.summary});
        for (const CheckLine& l : x.lines) rows.push_back({x.name, l.subject, l.ok ? "1" : "0", l.detail});
      }
      r.output = tsv(rows);
      break;
    }
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> rows;
      for (const CheckResult& x : checks) {
        rows.push_back({x.passed ? "PASS" : "FAIL", x.name, x.summary});
        for (const CheckLine& l : x.lines)
          rows.push_back({"", l.ok ? "  ok" : "  FAIL", l.subject + "  " + l.detail});
      }
      r.output = align(rows);
      break;
    }
  }
  if (!all) r.diagnostics = "verification failed";
  return r;
}

// ---------------------------------------------------------------------------

RunResult cmd_lambda(const RunConfig& c) {
  require_positive(c.N_max, "--Nmax");
  require_positive(c.n_max, "--nmax");
  const unsigned m_max = static_cast<unsigned>(c.N_max.value_or(12));
  const long n_max = c.n_max.value_or(6);
  const unsigned prec = c.precision_bits;
  constexpr double flag_tol = 1e-25;

  struct Row {
    unsigned m;
    long n;
    CxFloat rec, quad;
    std::optional<CxFloat> closed;
    double dev_quad;
    std::optional<double> dev_closed;
  };
  std::vector<Row> rows;
  for (unsigned m = 0; m <= m_max; ++m)
    for (long n = -n_max; n <= n_max; ++n) {
      Row row{m, n, lambda_weight(m, n, prec), lambda_quadrature(m, n, prec), std::nullopt, 0.0,
              std::nullopt};
      row.dev_quad = relative_deviation(row.rec, row.quad);
      if (n != 0) {
        row.closed = lambda_closed_form(m, n, prec);
        row.dev_closed = relative_deviation(row.rec, *row.closed);
      }
      rows.push_back(std::move(row));
    }

  auto flag = [&](const Row& row) {
    return row.dev_closed && *row.dev_closed > flag_tol ? std::string("closed-form-deviates")
                                                        : std::string();
  };

  RunResult r;
  switch (c.format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const Row& row : rows)
        arr.push_back({{"m", row.m},
                       {"n", row.n},
                       {"recurrence", row.rec.to_string(kDigits)},
                       {"closed_form", row.closed ? Json(row.closed->to_string(kDigits)) : Json()},
                       {"quadrature", row.quad.to_string(kDigits)},
                       {"dev_closed_form", row.dev_closed ? Json(sci(*row.dev_closed)) : Json()},
                       {"dev_quadrature", sci(row.dev_quad)},
                       {"flag", flag(row)}});
      Json j;
      j["command"] = "lambda";
      j["precision_bits"] = prec;
      j["weights"] = arr;
      r.output = j.dump(2) + "\n";
      break;
    }
    case OutputFormat::Tsv:
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> table{
          {"m", "n", "recurrence", "closed_form", "quadrature", "dev_closed", "dev_quad", "flag"}};
      for (const Row& row : rows)
        table.push_back({std::to_string(row.m), std::to_string(row.n), row.rec.to_string(kDigits),
                         row.closed ? row.closed->to_string(kDigits) : "-",
                         row.quad.to_string(kDigits),
                         row.dev_closed ? sci(*row.dev_closed) : "-", sci(row.dev_quad), flag(row)});
      r.output = c.format == OutputFormat::Tsv ? tsv(table) : align(table);
      break;
    }
  }
  return r;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "poly") return Command::Poly;
  if (name == "approx") return Command::Approx;
  if (name == "verify") return Command::Verify;
  if (name == "lambda") return Command::Lambda;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
      return 2;
    case ErrorKind::Resource:
      return 3;
    case ErrorKind::Domain:
    case ErrorKind::UnderDetermined:
    case ErrorKind::InvalidIndex:
    case ErrorKind::MissingFamily:
    case ErrorKind::Unsupported:
    case ErrorKind::LabelMismatch:
      return 4;
    default:
      return 5;
  }
}

RunResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::Poly: return cmd_poly(config);
      case Command::Approx: return cmd_approx(config);
      case Command::Verify: return cmd_verify(config);
      case Command::Lambda: return cmd_lambda(config);
    }
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), {}, std::string(to_string(e.kind())) + " error: " + e.what()};
  } catch (const std::exception& e) {
    return {5, {}, std::string("internal error: ") + e.what()};
  }
  return {5, {}, "unknown command"};
}

}  // namespace knotapprox
