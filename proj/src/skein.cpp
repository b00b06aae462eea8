#include "knotapprox/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "knotapprox/error.hpp"

namespace knotapprox {

namespace {

// First crossing met as an under-crossing before being met as an
// over-crossing. Components are visited in order of their smallest arc
// label, each starting from that arc, so the traversal depends only on the
// labels and survives crossing switches unchanged.
std::optional<std::size_t> first_ascending_crossing(const LinkDiagram& d) {
  const auto& cs = d.crossings();
  std::unordered_map<int, ArcEnd> head;
  std::vector<int> labels;
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int s = 0; s < 4; ++s)
      if (is_incoming(cs[c], s)) {
        head[cs[c].arcs[s]] = {static_cast<int>(c), s};
        labels.push_back(cs[c].arcs[s]);
      }
  std::sort(labels.begin(), labels.end());

  std::unordered_set<int> seen_arcs;
  std::vector<bool> met(cs.size(), false);
  for (int start : labels) {
    if (seen_arcs.count(start)) continue;
    int cur = start;
    do {
      seen_arcs.insert(cur);
      const ArcEnd h = head.at(cur);
      if (!met[h.crossing]) {
        met[h.crossing] = true;
        if (h.slot == 0) return static_cast<std::size_t>(h.crossing);
      }
      cur = cs[h.crossing].arcs[(h.slot + 2) % 4];
    } while (cur != start);
  }
  return std::nullopt;
}

int crossing_sign(const Crossing& c) { return c.kind == CrossingKind::Positive ? 1 : -1; }

}  // namespace

LaurentPoly2 homflypt_split_factor() {
  LaurentPoly2 d(VarLabels::VZ);
  d.add_term(1, -1, -1);
  d.add_term(-1, 1, -1);
  return d;
}

LaurentPoly2 dubrovnik_split_factor() {
  LaurentPoly2 d(VarLabels::AZ);
  d.add_term(1, 1, -1);
  d.add_term(-1, -1, -1);
  d.add_term(1, 0, 0);
  return d;
}

std::optional<LaurentPoly2> SkeinCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void SkeinCache::insert(const std::string& key, const LaurentPoly2& value) {
  std::lock_guard lock(mutex_);
  table_.insert_or_assign(key, value);
}

std::size_t SkeinCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

void SkeinCache::clear() {
  std::lock_guard lock(mutex_);
  table_.clear();
}

void SkeinEngine::check_input(const LinkDiagram& d) const {
  if (d.singular_count() > 0)
    throw Error(ErrorKind::Unsupported, "skein polynomials need a diagram without singular crossings");
  if (d.crossing_count() > crossing_cap_)
    throw Error(ErrorKind::Resource, "diagram has " + std::to_string(d.crossing_count()) +
                                         " crossings, above the cap of " +
                                         std::to_string(crossing_cap_));
}

LaurentPoly2 SkeinEngine::homflypt(const LinkDiagram& d) {
  check_input(d);
  return homflypt_rec(d);
}

LaurentPoly2 SkeinEngine::homflypt_rec(const LinkDiagram& d) {
  const LinkDiagram reduced = simplify(d);
  if (reduced.crossing_count() == 0)
    return homflypt_split_factor().pow(static_cast<unsigned>(reduced.loops() - 1));

  const std::string key = canonical_key(reduced);
  if (auto hit = homflypt_cache_.find(key)) return *hit;

  LaurentPoly2 result(VarLabels::VZ);
  const auto bad = first_ascending_crossing(reduced);
  if (!bad) {
    result = homflypt_split_factor().pow(static_cast<unsigned>(components(reduced) - 1));
  } else {
    const LaurentPoly2 switched = homflypt_rec(switch_crossing(reduced, *bad));
    const LaurentPoly2 smoothed = homflypt_rec(smooth_oriented(reduced, *bad));
    if (crossing_sign(reduced.crossings()[*bad]) > 0) {
      // P(L+) = v^2 P(L-) + v z P(L0)
      result = switched.shifted(2, 0) + smoothed.shifted(1, 1);
    } else {
      // P(L-) = v^{-2} P(L+) - v^{-1} z P(L0)
      result = switched.shifted(-2, 0) - smoothed.shifted(-1, 1);
    }
  }
  homflypt_cache_.insert(key, result);
  return result;
}

LaurentPoly2 SkeinEngine::dubrovnik_delta(const LinkDiagram& d) {
  check_input(d);
  return delta_rec(d);
}

LaurentPoly2 SkeinEngine::delta_rec(const LinkDiagram& d) {
  const Simplified s = simplify_tracked(d);
  const LinkDiagram& reduced = s.diagram;
  if (reduced.crossing_count() == 0)
    return dubrovnik_split_factor().pow(static_cast<unsigned>(reduced.loops() - 1))
        .shifted(s.removed_writhe, 0);

  const std::string key = canonical_key(reduced);
  LaurentPoly2 result(VarLabels::AZ);
  if (auto hit = delta_cache_.find(key)) {
    result = *hit;
  } else {
    const auto bad = first_ascending_crossing(reduced);
    if (!bad) {
      // A descending diagram is regularly isotopic to an unlink with curls.
      result = dubrovnik_split_factor()
                   .pow(static_cast<unsigned>(components(reduced) - 1))
                   .shifted(writhe(reduced), 0);
    } else {
      // D(K) = D(K switched) + z (D(K_0) - D(K_inf)), K viewed as L+.
      const LaurentPoly2 switched = delta_rec(switch_crossing(reduced, *bad));
      const LaurentPoly2 zero = delta_rec(smooth_unoriented(reduced, *bad, Smoothing::Zero));
      const LaurentPoly2 inf = delta_rec(smooth_unoriented(reduced, *bad, Smoothing::Infinity));
      result = switched + (zero - inf).shifted(0, 1);
    }
    delta_cache_.insert(key, result);
  }
  return result.shifted(s.removed_writhe, 0);
}

LaurentPoly2 SkeinEngine::dubrovnik(const LinkDiagram& d) {
  const LaurentPoly2 delta = dubrovnik_delta(d);
  return delta.shifted(-writhe(d), 0);
}

LaurentPoly2 homflypt(const LinkDiagram& d, std::size_t crossing_cap) {
  return SkeinEngine(crossing_cap).homflypt(d);
}

LaurentPoly2 dubrovnik_delta(const LinkDiagram& d, std::size_t crossing_cap) {
  return SkeinEngine(crossing_cap).dubrovnik_delta(d);
}

LaurentPoly2 dubrovnik(const LinkDiagram& d, std::size_t crossing_cap) {
  return SkeinEngine(crossing_cap).dubrovnik(d);
}

namespace {

LaurentPoly2 quarter_turn_substitution(const LaurentPoly2& f, int mu) {
  if (mu < 1) throw Error(ErrorKind::Domain, "component count must be positive");
  LaurentPoly2 out(VarLabels::AZ);
  const Rat link_sign = (mu - 1) % 2 == 0 ? Rat(1) : Rat(-1);
  for (const auto& [e, c] : f.terms()) {
    const int diff = e.second - e.first;
    if (diff % 2 != 0)
      throw Error(ErrorKind::Consistency,
                  "monomial a^" + std::to_string(e.first) + " z^" + std::to_string(e.second) +
                      " would keep an imaginary coefficient");
    // i^{diff} = (-1)^{diff/2}
    const Rat unit = (std::abs(diff / 2) % 2 == 0) ? Rat(1) : Rat(-1);
    out.add_term(c * unit * link_sign, e.first, e.second);
  }
  return out;
}

}  // namespace

LaurentPoly2 kauffman_from_dubrovnik(const LaurentPoly2& f, int mu) {
  return quarter_turn_substitution(f, mu);
}

LaurentPoly2 dubrovnik_from_kauffman(const LaurentPoly2& f, int mu) {
  return quarter_turn_substitution(f, mu);
}

}  // namespace knotapprox
