#pragma once

// Oriented link diagrams stored as planar-diagram (PD) crossings.
//
// Every crossing lists its four incident arc labels counterclockwise. In the
// stored (canonical) form arcs[0] is the incoming end of the first strand,
// which is the under-strand for transverse crossings, so arcs[2] is its
// outgoing end. The second strand runs arcs[3] -> arcs[1] for positive and
// singular crossings and arcs[1] -> arcs[3] for negative ones. A singular
// crossing therefore resolves to X(a,b,c,d) positively.
//
// Crossingless components are carried as an explicit loop count.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotapprox {

enum class CrossingKind : std::uint8_t { Positive, Negative, Singular };

struct Crossing {
  std::array<int, 4> arcs{};
  CrossingKind kind = CrossingKind::Positive;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Validates that every arc label occurs exactly twice, once entering and
  // once leaving a crossing. Throws Error(Parse) otherwise.
  LinkDiagram(std::vector<Crossing> crossings, int loops);

  static LinkDiagram unlink(int components);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int loops() const noexcept { return loops_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int singular_count() const noexcept;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int loops_ = 0;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

// `PD[X(a,b,c,d), S(a,b,c,d), ...]; loops=k`. Arc labels are non-negative
// integers; `#` starts a comment that runs to end of line.
LinkDiagram parse_pd(const std::string& text);
// Inverse of parse_pd up to arc relabelling: arcs are renumbered 1.. along
// each component so that re-parsing recovers the same orientation.
std::string serialize_pd(const LinkDiagram& d);

// `braid n: w1 w2 ...` (the leading "braid" keyword is optional).
BraidWord parse_braid(const std::string& text);
LinkDiagram from_braid(const BraidWord& b);

int components(const LinkDiagram& d);
// Throws Error(Unsupported) when a singular crossing is present.
int writhe(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);

enum class Smoothing { Zero, Infinity };

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t idx);
LinkDiagram smooth_oriented(const LinkDiagram& d, std::size_t idx);
// Smoothing of the unoriented shadow. With the crossing listed as (a,b,c,d)
// counterclockwise from an end of the under-strand, Zero joins a-b and c-d
// and Infinity joins a-d and b-c. The result is re-oriented component-wise.
LinkDiagram smooth_unoriented(const LinkDiagram& d, std::size_t idx, Smoothing mode);
LinkDiagram make_singular(const LinkDiagram& d, std::size_t idx);
// Replace a singular crossing by its positive (sign > 0) or negative resolution.
LinkDiagram resolve_singular(const LinkDiagram& d, std::size_t idx, int sign);

struct SignedDiagram {
  int sign = 1;
  LinkDiagram diagram;
};

// All 2^s resolutions. Entry i resolves the t-th singular crossing (in
// crossing order) negatively iff bit t of i is set.
std::vector<SignedDiagram> resolve_singulars(const LinkDiagram& d);

struct Simplified {
  LinkDiagram diagram;
  // Writhe carried by the removed Reidemeister I kinks.
  int removed_writhe = 0;
};

// Greedy Reidemeister I and II reductions on transverse crossings. Returns
// the input unchanged (same labels) when no move applies.
Simplified simplify_tracked(const LinkDiagram& d);
LinkDiagram simplify(const LinkDiagram& d);

// Relabelled form that is identical for diagrams differing only by arc
// labels and crossing order (up to the choice of traversal start).
LinkDiagram canonicalize(const LinkDiagram& d);
std::string canonical_key(const LinkDiagram& d);

// Crossing occurrences of each arc, used by traversal code.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
};

struct ArcIncidence {
  ArcEnd tail;  // slot where the arc leaves a crossing
  ArcEnd head;  // slot where the arc enters a crossing
};

bool is_incoming(const Crossing& c, int slot) noexcept;

}  // namespace knotapprox
