#include "knotapprox/knotapprox.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <string>

#include "knotapprox/approx.hpp"
#include "knotapprox/commands.hpp"
#include "knotapprox/corpus.hpp"
#include "knotapprox/error.hpp"
#include "knotapprox/skein.hpp"

using namespace knotapprox;

struct ka_diagram {
  LinkDiagram value;
};
struct ka_poly {
  LaurentPoly2 value;
};
struct ka_table {
  CoeffTable value;
};
struct ka_config {
  RunConfig value;
};

namespace {

thread_local std::string last_error;

ka_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return KA_ERR_PARSE;
    case ErrorKind::Io: return KA_ERR_IO;
    case ErrorKind::Resource: return KA_ERR_RESOURCE;
    case ErrorKind::Unsupported: return KA_ERR_UNSUPPORTED;
    case ErrorKind::LemmaViolation: return KA_ERR_LEMMA;
    case ErrorKind::Consistency: return KA_ERR_CONSISTENCY;
    case ErrorKind::SingularMatrix: return KA_ERR_SINGULAR_MATRIX;
    case ErrorKind::LabelMismatch: return KA_ERR_INVALID_ARGUMENT;
    default: return KA_ERR_DOMAIN;
  }
}

ka_status fail(ka_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
ka_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return KA_OK;
  } catch (const Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KA_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KA_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define KA_REQUIRE(cond)                                                        \
  do {                                                                          \
    if (!(cond)) return fail(KA_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

long parse_long(const char* value, const char* key) {
  long v = 0;
  const char* end = value + std::strlen(value);
  const auto [ptr, ec] = std::from_chars(value, end, v);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorKind::Domain, std::string(key) + " expects an integer, got '" + value + "'");
  return v;
}

}  // namespace

extern "C" {

const char* ka_last_error(void) { return last_error.c_str(); }

const char* ka_status_name(ka_status status) {
  switch (status) {
    case KA_OK: return "ok";
    case KA_ERR_PARSE: return "parse";
    case KA_ERR_IO: return "io";
    case KA_ERR_RESOURCE: return "resource";
    case KA_ERR_DOMAIN: return "domain";
    case KA_ERR_UNSUPPORTED: return "unsupported";
    case KA_ERR_LEMMA: return "lemma-violation";
    case KA_ERR_CONSISTENCY: return "consistency";
    case KA_ERR_SINGULAR_MATRIX: return "singular-matrix";
    case KA_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case KA_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void ka_string_free(char* s) { std::free(s); }

ka_status ka_diagram_from_pd(const char* text, ka_diagram** out) {
  KA_REQUIRE(text && out);
  return guard([&] { *out = new ka_diagram{parse_pd(text)}; });
}

ka_status ka_diagram_from_braid(const char* text, ka_diagram** out) {
  KA_REQUIRE(text && out);
  return guard([&] { *out = new ka_diagram{from_braid(parse_braid(text))}; });
}

ka_status ka_diagram_load(const char* ref, ka_diagram** out) {
  KA_REQUIRE(ref && out);
  return guard([&] { *out = new ka_diagram{load_link(ref)}; });
}

void ka_diagram_free(ka_diagram* d) { delete d; }

int ka_diagram_components(const ka_diagram* d) { return d ? components(d->value) : 0; }

size_t ka_diagram_crossings(const ka_diagram* d) { return d ? d->value.crossing_count() : 0; }

ka_status ka_diagram_writhe(const ka_diagram* d, int* out) {
  KA_REQUIRE(d && out);
  return guard([&] { *out = writhe(d->value); });
}

ka_status ka_diagram_to_pd(const ka_diagram* d, char** out) {
  KA_REQUIRE(d && out);
  return guard([&] { *out = dup(serialize_pd(d->value)); });
}

ka_status ka_compute(const ka_diagram* d, ka_polynomial which, size_t crossing_cap,
                     ka_poly** out) {
  KA_REQUIRE(d && out);
  return guard([&] {
    SkeinEngine engine(crossing_cap);
    switch (which) {
      case KA_HOMFLYPT: *out = new ka_poly{engine.homflypt(d->value)}; return;
      case KA_DUBROVNIK_DELTA: *out = new ka_poly{engine.dubrovnik_delta(d->value)}; return;
      case KA_DUBROVNIK: *out = new ka_poly{engine.dubrovnik(d->value)}; return;
      case KA_KAUFFMAN:
        *out = new ka_poly{kauffman_from_dubrovnik(engine.dubrovnik(d->value), components(d->value))};
        return;
    }
    throw Error(ErrorKind::Domain, "unknown polynomial selector");
  });
}

void ka_poly_free(ka_poly* p) { delete p; }

ka_status ka_poly_to_string(const ka_poly* p, char** out) {
  KA_REQUIRE(p && out);
  return guard([&] { *out = dup(p->value.to_string()); });
}

size_t ka_poly_term_count(const ka_poly* p) { return p ? p->value.terms().size() : 0; }

ka_status ka_poly_term(const ka_poly* p, size_t i, int* e1, int* e2, char** coefficient) {
  KA_REQUIRE(p && e1 && e2 && coefficient);
  if (i >= p->value.terms().size()) return fail(KA_ERR_DOMAIN, "term index out of range");
  return guard([&] {
    const auto it = std::next(p->value.terms().begin(), static_cast<std::ptrdiff_t>(i));
    *e1 = it->first.first;
    *e2 = it->first.second;
    *coefficient = dup(rat_to_string(it->second));
  });
}

ka_status ka_table_from_diagram(const ka_diagram* d, size_t crossing_cap, ka_table** out) {
  KA_REQUIRE(d && out);
  return guard([&] {
    *out = new ka_table{coeff_table(homflypt(d->value, crossing_cap), components(d->value))};
  });
}

ka_status ka_table_from_json(const char* json, ka_table** out) {
  KA_REQUIRE(json && out);
  return guard([&] { *out = new ka_table{table_from_json(json)}; });
}

void ka_table_free(ka_table* t) { delete t; }

ka_status ka_table_to_json(const ka_table* t, char** out) {
  KA_REQUIRE(t && out);
  return guard([&] { *out = dup(table_to_json(t->value)); });
}

ka_status ka_table_w(const ka_table* t, long N, int q, char** out) {
  KA_REQUIRE(t && out);
  return guard([&] { *out = dup(rat_to_string(w_direct(t->value, N, q))); });
}

ka_status ka_table_B(const ka_table* t, int m, int j, char** out) {
  KA_REQUIRE(t && out);
  return guard([&] { *out = dup(rat_to_string(B_coeff(t->value, m, j))); });
}

ka_config* ka_config_new(void) { return new (std::nothrow) ka_config{}; }

void ka_config_free(ka_config* c) { delete c; }

ka_status ka_config_set(ka_config* c, const char* key, const char* value) {
  KA_REQUIRE(c && key && value);
  return guard([&] {
    RunConfig& r = c->value;
    const std::string k = key;
    if (k == "command") {
      const auto cmd = parse_command(value);
      if (!cmd) throw Error(ErrorKind::Domain, std::string("unknown command '") + value + "'");
      r.command = *cmd;
    } else if (k == "format") {
      const auto f = parse_format(value);
      if (!f) throw Error(ErrorKind::Domain, std::string("unknown format '") + value + "'");
      r.format = *f;
    } else if (k == "pd") {
      r.pd = value;
    } else if (k == "braid") {
      r.braid = value;
    } else if (k == "table") {
      r.table = value;
    } else if (k == "which") {
      r.which = value;
    } else if (k == "only") {
      r.only = value;
    } else if (k == "qmax") {
      r.q_max = static_cast<int>(parse_long(value, key));
    } else if (k == "nmax") {
      r.n_max = static_cast<int>(parse_long(value, key));
    } else if (k == "Nmax") {
      r.N_max = static_cast<int>(parse_long(value, key));
    } else if (k == "precision") {
      const long p = parse_long(value, key);
      if (p < static_cast<long>(kMinPrecisionBits))
        throw Error(ErrorKind::Domain, "precision must be at least 64 bits");
      r.precision_bits = static_cast<unsigned>(p);
    } else if (k == "cap") {
      const long cap = parse_long(value, key);
      if (cap < 1) throw Error(ErrorKind::Domain, "cap must be positive");
      r.crossing_cap = static_cast<std::size_t>(cap);
    } else if (k == "seed") {
      r.seed = static_cast<std::uint64_t>(parse_long(value, key));
    } else if (k == "mutate") {
      const long m = parse_long(value, key);
      if (m < 0) throw Error(ErrorKind::Domain, "mutate must be non-negative");
      r.mutate = static_cast<int>(m);
    } else {
      throw Error(ErrorKind::Domain, "unknown configuration key '" + k + "'");
    }
  });
}

ka_status ka_run(const ka_config* c, char** report, char** diagnostics, int* exit_code) {
  KA_REQUIRE(c && exit_code);
  return guard([&] {
    const RunResult r = run(c->value);
    *exit_code = r.exit_code;
    if (report) *report = dup(r.output);
    if (diagnostics) *diagnostics = dup(r.diagnostics);
  });
}

}  // extern "C"
