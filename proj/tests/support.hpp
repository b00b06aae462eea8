#pragma once

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "knotapprox/algebra.hpp"
#include "knotapprox/corpus.hpp"
#include "knotapprox/diagram.hpp"

namespace testing {

using namespace knotapprox;

inline Rat rat_pow(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= x;
  return e < 0 ? Rat(1 / r) : r;
}

inline Rat evaluate(const LaurentPoly2& p, const Rat& x, const Rat& y) {
  Rat s = 0;
  for (const auto& [e, c] : p.terms()) s += c * rat_pow(x, e.first) * rat_pow(y, e.second);
  return s;
}

inline LaurentPoly2 poly(VarLabels labels, std::initializer_list<std::tuple<long, int, int>> terms) {
  LaurentPoly2 p(labels);
  for (const auto& [c, e1, e2] : terms) p.add_term(Rat(c), e1, e2);
  return p;
}

// Component count by joining the two strands through every crossing.
inline int traced_components(const LinkDiagram& d) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : d.crossings()) {
    parent[find(c.arcs[0])] = find(c.arcs[2]);
    parent[find(c.arcs[1])] = find(c.arcs[3]);
  }
  std::set<int> roots;
  for (const auto& [label, _] : parent) roots.insert(find(label));
  return static_cast<int>(roots.size()) + d.loops();
}

inline LinkDiagram braid(const std::string& text) { return from_braid(parse_braid(text)); }

}  // namespace testing
