#include "knotapprox/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "knotapprox/error.hpp"

namespace knotapprox {

namespace {

int kind_sign(CrossingKind k) {
  switch (k) {
    case CrossingKind::Positive: return 1;
    case CrossingKind::Negative: return -1;
    case CrossingKind::Singular: return 0;
  }
  return 0;
}

char kind_char(CrossingKind k) {
  switch (k) {
    case CrossingKind::Positive: return 'P';
    case CrossingKind::Negative: return 'N';
    case CrossingKind::Singular: return 'S';
  }
  return '?';
}

std::array<int, 4> rotate(const std::array<int, 4>& a, int start) {
  return {a[start % 4], a[(start + 1) % 4], a[(start + 2) % 4], a[(start + 3) % 4]};
}

using Incidence = std::unordered_map<int, ArcIncidence>;

Incidence incidence_of(const std::vector<Crossing>& crossings) {
  Incidence inc;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int label = crossings[c].arcs[s];
      auto& entry = inc[label];
      ArcEnd& end = is_incoming(crossings[c], s) ? entry.head : entry.tail;
      if (end.crossing >= 0)
        throw Error(ErrorKind::Parse, "arc " + std::to_string(label) + " is " +
                                          (is_incoming(crossings[c], s) ? "entered" : "left") +
                                          " twice (orientation inconsistency)");
      end = {static_cast<int>(c), s};
    }
  }
  for (const auto& [label, entry] : inc)
    if (entry.head.crossing < 0 || entry.tail.crossing < 0)
      throw Error(ErrorKind::Parse, "arc " + std::to_string(label) + " occurs only once");
  return inc;
}

// Arc following `label` along its component.
int next_arc(const std::vector<Crossing>& crossings, const Incidence& inc, int label) {
  const ArcEnd head = inc.at(label).head;
  return crossings[head.crossing].arcs[(head.slot + 2) % 4];
}

// ---------------------------------------------------------------------------
// Union-find over arc labels.

class LabelUnion {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_.emplace(x, x);
      return x;
    }
    if (it->second == x) return x;
    const int root = find(it->second);
    parent_[x] = root;
    return root;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller label becomes the representative.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::unordered_map<int, int> parent_;
};

struct RawCrossing {
  std::array<int, 4> arcs{};
  bool singular = false;
};

enum class HintMode { Strict, Soft };

// Builds an oriented diagram from unoriented crossing data. Slots 0/2 are
// the first strand (under-strand for transverse crossings), slots 1/3 the
// second. The orientation of each component follows the "slot 0 is
// incoming" hints; in Strict mode conflicting hints are an error and a
// component with no hint is oriented by arc-label order.
LinkDiagram orient(const std::vector<RawCrossing>& raw, int loops, HintMode mode) {
  std::unordered_map<int, std::vector<ArcEnd>> occ;
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (int s = 0; s < 4; ++s) occ[raw[c].arcs[s]].push_back({static_cast<int>(c), s});
  for (const auto& [label, ends] : occ)
    if (ends.size() != 2)
      throw Error(ErrorKind::Parse, "arc " + std::to_string(label) + " used " +
                                        std::to_string(ends.size()) + " times (expected 2)");

  const auto other_end = [&](int label, ArcEnd from) {
    const auto& ends = occ.at(label);
    return (ends[0].crossing == from.crossing && ends[0].slot == from.slot) ? ends[1] : ends[0];
  };

  // entering[c][s]: the traversal enters crossing c through slot s.
  std::vector<std::array<int, 4>> entering(raw.size(), {-1, -1, -1, -1});
  for (std::size_t c0 = 0; c0 < raw.size(); ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (entering[c0][s0] != -1) continue;
      // Trace the component through (c0, s0) treating s0 as entering.
      std::vector<ArcEnd> entered;
      ArcEnd cur{static_cast<int>(c0), s0};
      do {
        entered.push_back(cur);
        const int out_slot = (cur.slot + 2) % 4;
        cur = other_end(raw[cur.crossing].arcs[out_slot], {cur.crossing, out_slot});
      } while (!(cur.crossing == static_cast<int>(c0) && cur.slot == s0));

      // Votes: +1 keeps the traced direction, -1 reverses it.
      int vote = 0;
      for (const ArcEnd& e : entered) {
        if (e.slot % 2 != 0) continue;
        const int v = e.slot == 0 ? 1 : -1;
        if (vote == 0) {
          vote = v;
        } else if (vote != v && mode == HintMode::Strict) {
          throw Error(ErrorKind::Parse,
                      "orientation inconsistency along the component through crossing " +
                          std::to_string(e.crossing + 1));
        }
        if (mode == HintMode::Soft) break;
      }
      if (vote == 0) {
        vote = 1;
        if (mode == HintMode::Strict) {
          // Over-only component: at its first passage the strand runs from
          // label p to p+1, or from the largest label to the smallest.
          int lo = raw[entered[0].crossing].arcs[entered[0].slot];
          int hi = lo;
          for (const ArcEnd& e : entered) {
            lo = std::min(lo, raw[e.crossing].arcs[e.slot]);
            hi = std::max(hi, raw[e.crossing].arcs[e.slot]);
          }
          const ArcEnd first = *std::min_element(
              entered.begin(), entered.end(),
              [](const ArcEnd& a, const ArcEnd& b) { return a.crossing < b.crossing; });
          const int p = raw[first.crossing].arcs[1];
          const int q = raw[first.crossing].arcs[3];
          const bool one_to_three = q == p + 1 || (p == hi && q == lo && hi - lo >= 2);
          const bool traced_one_to_three = first.slot == 1;
          vote = one_to_three == traced_one_to_three ? 1 : -1;
        }
      }
      for (const ArcEnd& e : entered) {
        const int in_slot = vote > 0 ? e.slot : (e.slot + 2) % 4;
        entering[e.crossing][in_slot] = 1;
        entering[e.crossing][(in_slot + 2) % 4] = 0;
      }
    }
  }

  std::vector<Crossing> out;
  out.reserve(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const int e1 = entering[c][0] == 1 ? 0 : 2;
    const int e2 = entering[c][1] == 1 ? 1 : 3;
    Crossing x;
    if (!raw[c].singular) {
      x.arcs = rotate(raw[c].arcs, e1);
      x.kind = (e2 - e1 + 4) % 4 == 3 ? CrossingKind::Positive : CrossingKind::Negative;
    } else {
      const int start = (e2 - e1 + 4) % 4 == 3 ? e1 : e2;
      x.arcs = rotate(raw[c].arcs, start);
      x.kind = CrossingKind::Singular;
    }
    out.push_back(x);
  }
  return LinkDiagram(std::move(out), loops);
}

std::vector<RawCrossing> to_raw(const std::vector<Crossing>& crossings) {
  std::vector<RawCrossing> raw;
  raw.reserve(crossings.size());
  for (const Crossing& c : crossings) raw.push_back({c.arcs, c.kind == CrossingKind::Singular});
  return raw;
}

// Removes the flagged crossings, merges arcs along `joins`, and turns
// merged classes that no longer touch any crossing into loops.
struct Rebuilt {
  std::vector<Crossing> crossings;
  int loops = 0;
};

Rebuilt rebuild(const LinkDiagram& d, const std::vector<bool>& removed,
                const std::vector<std::pair<int, int>>& joins) {
  LabelUnion uf;
  for (const auto& [a, b] : joins) uf.join(a, b);

  Rebuilt r;
  r.loops = d.loops();
  std::set<int> live;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    if (removed[c]) continue;
    Crossing x = d.crossings()[c];
    for (int& a : x.arcs) {
      a = uf.find(a);
      live.insert(a);
    }
    r.crossings.push_back(x);
  }
  std::set<int> orphaned;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    if (!removed[c]) continue;
    for (int a : d.crossings()[c].arcs) {
      const int cls = uf.find(a);
      if (!live.count(cls)) orphaned.insert(cls);
    }
  }
  r.loops += static_cast<int>(orphaned.size());
  return r;
}

void check_index(const LinkDiagram& d, std::size_t idx) {
  if (idx >= d.crossing_count())
    throw Error(ErrorKind::InvalidIndex, "crossing index " + std::to_string(idx) +
                                             " out of range (diagram has " +
                                             std::to_string(d.crossing_count()) + " crossings)");
}

Crossing switched(const Crossing& c) {
  const auto& a = c.arcs;
  switch (c.kind) {
    case CrossingKind::Positive: return {{a[3], a[0], a[1], a[2]}, CrossingKind::Negative};
    case CrossingKind::Negative: return {{a[1], a[2], a[3], a[0]}, CrossingKind::Positive};
    case CrossingKind::Singular: break;
  }
  throw Error(ErrorKind::Unsupported, "cannot switch a singular crossing");
}

LinkDiagram replace_crossing(const LinkDiagram& d, std::size_t idx, const Crossing& c) {
  std::vector<Crossing> cs = d.crossings();
  cs[idx] = c;
  return LinkDiagram(std::move(cs), d.loops());
}

// ---------------------------------------------------------------------------
// PD text parser

class PdParser {
 public:
  explicit PdParser(const std::string& text) : text_(text) {}

  LinkDiagram parse() {
    skip_ws();
    expect_word("PD");
    skip_ws();
    expect('[');
    skip_ws();
    std::vector<RawCrossing> raw;
    std::vector<std::size_t> positions;
    if (peek() != ']') {
      for (;;) {
        positions.push_back(pos_);
        raw.push_back(parse_crossing());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          skip_ws();
          continue;
        }
        break;
      }
    }
    expect(']');
    skip_ws();
    int loops = 0;
    if (peek() == ';') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size()) {
        expect_word("loops");
        skip_ws();
        expect('=');
        skip_ws();
        loops = parse_int();
        skip_ws();
      }
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (raw.empty() && loops == 0) fail("empty diagram (no crossings and no loops)");

    // Label usage is checked here so the error can point at a crossing.
    std::map<int, std::vector<std::size_t>> uses;
    for (std::size_t c = 0; c < raw.size(); ++c)
      for (int a : raw[c].arcs) uses[a].push_back(c);
    for (const auto& [label, where] : uses)
      if (where.size() != 2)
        throw ParseError(positions[where.back()],
                         "arc " + std::to_string(label) + " used " +
                             std::to_string(where.size()) + " times (expected 2)");
    try {
      return orient(raw, loops, HintMode::Strict);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(positions.empty() ? 0 : positions.front(), e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(pos_, why); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(const char* w) {
    const std::string word(w);
    if (text_.compare(pos_, word.size(), word) != 0) fail("expected '" + word + "'");
    pos_ += word.size();
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) throw ParseError(start, "integer too large");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  RawCrossing parse_crossing() {
    RawCrossing rc;
    const char k = peek();
    if (k == 'X') {
      rc.singular = false;
    } else if (k == 'S') {
      rc.singular = true;
    } else {
      fail("expected crossing 'X(...)' or 'S(...)'");
    }
    ++pos_;
    skip_ws();
    expect('(');
    std::vector<int> labels;
    for (;;) {
      skip_ws();
      labels.push_back(parse_int());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (labels.size() != 4)
      fail("crossing has " + std::to_string(labels.size()) + " arc labels (expected 4)");
    expect(')');
    std::copy(labels.begin(), labels.end(), rc.arcs.begin());
    return rc;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Canonical relabelling

struct Labelled {
  std::vector<int> encoding;
  std::vector<Crossing> crossings;
};

Labelled label_from(const std::vector<Crossing>& cs, const Incidence& inc, int start,
                    int loops) {
  std::unordered_map<int, int> fresh;
  std::vector<int> order;
  std::vector<bool> visited(cs.size(), false);
  int counter = 1;

  const auto trace = [&](int e) {
    int cur = e;
    do {
      fresh.emplace(cur, counter++);
      const ArcEnd head = inc.at(cur).head;
      if (!visited[head.crossing]) {
        visited[head.crossing] = true;
        order.push_back(head.crossing);
      }
      cur = cs[head.crossing].arcs[(head.slot + 2) % 4];
    } while (cur != e);
  };

  trace(start);
  for (;;) {
    int next = -1;
    for (std::size_t i = 0; i < order.size() && next < 0; ++i)
      for (int a : cs[order[i]].arcs)
        if (!fresh.count(a)) {
          next = a;
          break;
        }
    if (next < 0) {
      for (std::size_t c = 0; c < cs.size() && next < 0; ++c)
        if (!visited[c]) next = cs[c].arcs[0];
    }
    if (next < 0) break;
    trace(next);
  }

  Labelled out;
  for (int c : order) {
    Crossing x = cs[c];
    for (int& a : x.arcs) a = fresh.at(a);
    out.encoding.push_back(static_cast<int>(x.kind));
    out.encoding.insert(out.encoding.end(), x.arcs.begin(), x.arcs.end());
    out.crossings.push_back(x);
  }
  out.encoding.push_back(-1);
  out.encoding.push_back(loops);
  return out;
}

Labelled canonical_labelling(const LinkDiagram& d) {
  if (d.crossings().empty()) return {{-1, d.loops()}, {}};
  const Incidence inc = incidence_of(d.crossings());
  std::optional<Labelled> best;
  for (const auto& [label, entry] : inc) {
    Labelled l = label_from(d.crossings(), inc, label, d.loops());
    if (!best || l.encoding < best->encoding) best = std::move(l);
  }
  return std::move(*best);
}

std::optional<std::size_t> find_kink(const LinkDiagram& d) {
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    if (x.kind == CrossingKind::Singular) continue;
    for (int s = 0; s < 4; ++s)
      if (x.arcs[s] == x.arcs[(s + 1) % 4]) return c;
  }
  return std::nullopt;
}

struct Bigon {
  std::size_t x = 0;
  std::size_t y = 0;
};

int slot_of(const Crossing& c, int label, bool over) {
  for (int s = over ? 1 : 0; s < 4; s += 2)
    if (c.arcs[s] == label) return s;
  return -1;
}

std::optional<Bigon> find_bigon(const LinkDiagram& d) {
  const auto& cs = d.crossings();
  for (std::size_t x = 0; x < cs.size(); ++x) {
    if (cs[x].kind == CrossingKind::Singular) continue;
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      if (cs[y].kind == CrossingKind::Singular) continue;
      for (int ox : {1, 3}) {
        const int e1 = cs[x].arcs[ox];
        const int oy = slot_of(cs[y], e1, true);
        if (oy < 0) continue;
        for (int ux : {0, 2}) {
          const int e2 = cs[x].arcs[ux];
          const int uy = slot_of(cs[y], e2, false);
          if (uy < 0 || e1 == e2) continue;
          const bool left = uy == (oy + 1) % 4 && ox == (ux + 1) % 4;
          const bool right = uy == (oy + 3) % 4 && ox == (ux + 3) % 4;
          if (left || right) return Bigon{x, y};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_incoming(const Crossing& c, int slot) noexcept {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return c.kind == CrossingKind::Negative;
    default: return c.kind != CrossingKind::Negative;
  }
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int loops)
    : crossings_(std::move(crossings)), loops_(loops) {
  if (loops_ < 0) throw Error(ErrorKind::Parse, "negative loop count");
  for (const Crossing& c : crossings_)
    for (int a : c.arcs)
      if (a < 0) throw Error(ErrorKind::Parse, "negative arc label");
  (void)incidence_of(crossings_);
}

LinkDiagram LinkDiagram::unlink(int components) { return LinkDiagram({}, components); }

int LinkDiagram::singular_count() const noexcept {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) {
    return c.kind == CrossingKind::Singular;
  }));
}

LinkDiagram parse_pd(const std::string& text) { return PdParser(text).parse(); }

std::string serialize_pd(const LinkDiagram& d) {
  const auto& cs = d.crossings();
  const Incidence inc = incidence_of(cs);
  std::unordered_map<int, int> fresh;
  int counter = 1;
  // Components in order of their first passage (crossing index, slot); each
  // is numbered from the arc entering that passage.
  for (std::size_t c = 0; c < cs.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int start = is_incoming(cs[c], s) ? cs[c].arcs[s] : cs[c].arcs[(s + 2) % 4];
      if (fresh.count(start)) continue;
      int cur = start;
      do {
        fresh.emplace(cur, counter++);
        cur = next_arc(cs, inc, cur);
      } while (cur != start);
    }
  }
  std::ostringstream out;
  out << "PD[";
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (c) out << ", ";
    out << (cs[c].kind == CrossingKind::Singular ? 'S' : 'X') << '(';
    for (int s = 0; s < 4; ++s) out << (s ? "," : "") << fresh.at(cs[c].arcs[s]);
    out << ')';
  }
  out << ']';
  if (d.loops() > 0) out << "; loops=" << d.loops();
  return out.str();
}

BraidWord parse_braid(const std::string& text) {
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.compare(pos, 5, "braid") == 0) pos += 5;
  skip();
  const auto read_int = [&](bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError(start, "expected an integer");
    if (pos - digits > 6) throw ParseError(start, "integer too large");
    return std::stoi(text.substr(start, pos - start));
  };
  BraidWord b;
  b.strands = read_int(false);
  if (b.strands < 1) throw ParseError(0, "braid needs at least one strand");
  skip();
  if (pos >= text.size() || text[pos] != ':') throw ParseError(pos, "expected ':'");
  ++pos;
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    const std::size_t at = pos;
    const int letter = read_int(true);
    if (letter == 0 || std::abs(letter) >= b.strands)
      throw ParseError(at, "braid letter " + std::to_string(letter) + " invalid for " +
                               std::to_string(b.strands) + " strands");
    b.letters.push_back(letter);
  }
  return b;
}

LinkDiagram from_braid(const BraidWord& b) {
  if (b.strands < 1) throw Error(ErrorKind::Domain, "braid needs at least one strand");
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  std::iota(at.begin(), at.end(), 1);
  int next = b.strands + 1;
  std::vector<Crossing> cs;
  for (int letter : b.letters) {
    const int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= b.strands)
      throw Error(ErrorKind::Domain, "braid letter " + std::to_string(letter) + " out of range");
    const int x = at[i], y = at[i + 1];
    const int x_out = next++, y_out = next++;
    if (letter > 0) {
      cs.push_back({{y, x_out, y_out, x}, CrossingKind::Positive});
    } else {
      cs.push_back({{x, y, x_out, y_out}, CrossingKind::Negative});
    }
    at[i] = y_out;
    at[i + 1] = x_out;
  }
  LabelUnion uf;
  for (int p = 0; p < b.strands; ++p) uf.join(at[p], p + 1);
  std::set<int> live;
  for (Crossing& c : cs)
    for (int& a : c.arcs) {
      a = uf.find(a);
      live.insert(a);
    }
  std::set<int> loops;
  for (int p = 0; p < b.strands; ++p)
    if (!live.count(uf.find(p + 1))) loops.insert(uf.find(p + 1));
  return LinkDiagram(std::move(cs), static_cast<int>(loops.size()));
}

int components(const LinkDiagram& d) {
  const auto& cs = d.crossings();
  const Incidence inc = incidence_of(cs);
  std::set<int> seen;
  int count = d.loops();
  for (const auto& [label, entry] : inc) {
    if (seen.count(label)) continue;
    ++count;
    int cur = label;
    do {
      seen.insert(cur);
      cur = next_arc(cs, inc, cur);
    } while (cur != label);
  }
  return count;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const Crossing& c : d.crossings()) {
    if (c.kind == CrossingKind::Singular)
      throw Error(ErrorKind::Unsupported, "writhe is undefined with singular crossings");
    w += kind_sign(c.kind);
  }
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (Crossing& c : cs)
    if (c.kind != CrossingKind::Singular) c = switched(c);
  return LinkDiagram(std::move(cs), d.loops());
}

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t idx) {
  check_index(d, idx);
  return replace_crossing(d, idx, switched(d.crossings()[idx]));
}

LinkDiagram smooth_oriented(const LinkDiagram& d, std::size_t idx) {
  check_index(d, idx);
  const Crossing& c = d.crossings()[idx];
  const auto& a = c.arcs;
  std::vector<std::pair<int, int>> joins;
  switch (c.kind) {
    case CrossingKind::Positive: joins = {{a[0], a[1]}, {a[3], a[2]}}; break;
    case CrossingKind::Negative: joins = {{a[0], a[3]}, {a[1], a[2]}}; break;
    case CrossingKind::Singular:
      throw Error(ErrorKind::Unsupported, "oriented smoothing of a singular crossing");
  }
  std::vector<bool> removed(d.crossing_count(), false);
  removed[idx] = true;
  Rebuilt r = rebuild(d, removed, joins);
  return LinkDiagram(std::move(r.crossings), r.loops);
}

LinkDiagram smooth_unoriented(const LinkDiagram& d, std::size_t idx, Smoothing mode) {
  check_index(d, idx);
  const auto& a = d.crossings()[idx].arcs;
  std::vector<std::pair<int, int>> joins;
  if (mode == Smoothing::Zero) {
    joins = {{a[0], a[1]}, {a[2], a[3]}};
  } else {
    joins = {{a[0], a[3]}, {a[1], a[2]}};
  }
  std::vector<bool> removed(d.crossing_count(), false);
  removed[idx] = true;
  Rebuilt r = rebuild(d, removed, joins);
  return orient(to_raw(r.crossings), r.loops, HintMode::Soft);
}

LinkDiagram make_singular(const LinkDiagram& d, std::size_t idx) {
  check_index(d, idx);
  const Crossing& c = d.crossings()[idx];
  const auto& a = c.arcs;
  switch (c.kind) {
    case CrossingKind::Positive: return replace_crossing(d, idx, {a, CrossingKind::Singular});
    case CrossingKind::Negative:
      return replace_crossing(d, idx, {{a[1], a[2], a[3], a[0]}, CrossingKind::Singular});
    case CrossingKind::Singular: break;
  }
  throw Error(ErrorKind::Unsupported, "crossing is already singular");
}

LinkDiagram resolve_singular(const LinkDiagram& d, std::size_t idx, int sign) {
  check_index(d, idx);
  const Crossing& c = d.crossings()[idx];
  if (c.kind != CrossingKind::Singular)
    throw Error(ErrorKind::Unsupported, "crossing is not singular");
  const Crossing positive{c.arcs, CrossingKind::Positive};
  return replace_crossing(d, idx, sign > 0 ? positive : switched(positive));
}

std::vector<SignedDiagram> resolve_singulars(const LinkDiagram& d) {
  std::vector<std::size_t> singular;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    if (d.crossings()[c].kind == CrossingKind::Singular) singular.push_back(c);
  const std::size_t total = std::size_t{1} << singular.size();
  std::vector<SignedDiagram> out;
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    LinkDiagram r = d;
    int sign = 1;
    for (std::size_t t = 0; t < singular.size(); ++t) {
      const bool negative = (mask >> t) & 1u;
      if (negative) sign = -sign;
      r = resolve_singular(r, singular[t], negative ? -1 : 1);
    }
    out.push_back({sign, std::move(r)});
  }
  return out;
}

Simplified simplify_tracked(const LinkDiagram& d) {
  Simplified s{d, 0};
  for (;;) {
    const LinkDiagram& cur = s.diagram;
    if (const auto k = find_kink(cur)) {
      const Crossing& c = cur.crossings()[*k];
      std::vector<bool> removed(cur.crossing_count(), false);
      removed[*k] = true;
      s.removed_writhe += kind_sign(c.kind);
      Rebuilt r = rebuild(cur, removed, {{c.arcs[0], c.arcs[2]}, {c.arcs[1], c.arcs[3]}});
      s.diagram = LinkDiagram(std::move(r.crossings), r.loops);
      continue;
    }
    if (const auto b = find_bigon(cur)) {
      const Crossing& x = cur.crossings()[b->x];
      const Crossing& y = cur.crossings()[b->y];
      std::vector<bool> removed(cur.crossing_count(), false);
      removed[b->x] = removed[b->y] = true;
      s.removed_writhe += kind_sign(x.kind) + kind_sign(y.kind);
      std::vector<std::pair<int, int>> joins;
      for (const Crossing* c : {&x, &y}) {
        joins.emplace_back(c->arcs[0], c->arcs[2]);
        joins.emplace_back(c->arcs[1], c->arcs[3]);
      }
      Rebuilt r = rebuild(cur, removed, joins);
      s.diagram = LinkDiagram(std::move(r.crossings), r.loops);
      continue;
    }
    break;
  }
  return s;
}

LinkDiagram simplify(const LinkDiagram& d) { return simplify_tracked(d).diagram; }

LinkDiagram canonicalize(const LinkDiagram& d) {
  Labelled l = canonical_labelling(d);
  return LinkDiagram(std::move(l.crossings), d.loops());
}

std::string canonical_key(const LinkDiagram& d) {
  const Labelled l = canonical_labelling(d);
  std::string key;
  key.reserve(l.encoding.size() * 3);
  for (std::size_t i = 0; i + 2 < l.encoding.size(); i += 5) {
    key += kind_char(static_cast<CrossingKind>(l.encoding[i]));
    for (int s = 1; s <= 4; ++s) {
      key += std::to_string(l.encoding[i + s]);
      key += s < 4 ? ',' : ';';
    }
  }
  key += "L" + std::to_string(d.loops());
  return key;
}

}  // namespace knotapprox
