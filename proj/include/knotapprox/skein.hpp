#pragma once

// HOMFLYPT and Dubrovnik polynomials by skein recursion over descending
// diagrams.
//
//   v^{-1} P(L+) - v P(L-) = z P(L0),      P(unknot) = 1
//   D(L+) - D(L-) = z (D(L0) - D(Linf)),   D(positive curl) = a D,
//   D(unknot) = 1,                          F(L) = a^{-w(L)} D(L)
//
// The unoriented L0 / Linf are the Zero / Infinity smoothings of
// smooth_unoriented, taken with the crossing viewed as L+.

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "knotapprox/algebra.hpp"
#include "knotapprox/diagram.hpp"

namespace knotapprox {

inline constexpr std::size_t kDefaultCrossingCap = 16;

// (v^{-1} - v) / z
LaurentPoly2 homflypt_split_factor();
// (a - a^{-1}) / z + 1
LaurentPoly2 dubrovnik_split_factor();

// Memo table keyed by canonical diagram encoding. Insertions are guarded so
// one cache may be shared by concurrent computations.
class SkeinCache {
 public:
  std::optional<LaurentPoly2> find(const std::string& key) const;
  void insert(const std::string& key, const LaurentPoly2& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, LaurentPoly2> table_;
};

class SkeinEngine {
 public:
  explicit SkeinEngine(std::size_t crossing_cap = kDefaultCrossingCap)
      : crossing_cap_(crossing_cap) {}

  LaurentPoly2 homflypt(const LinkDiagram& d);
  // Regular-isotopy invariant of the unoriented shadow.
  LaurentPoly2 dubrovnik_delta(const LinkDiagram& d);
  LaurentPoly2 dubrovnik(const LinkDiagram& d);

  std::size_t crossing_cap() const noexcept { return crossing_cap_; }
  const SkeinCache& homflypt_cache() const noexcept { return homflypt_cache_; }
  const SkeinCache& delta_cache() const noexcept { return delta_cache_; }

 private:
  void check_input(const LinkDiagram& d) const;
  LaurentPoly2 homflypt_rec(const LinkDiagram& d);
  LaurentPoly2 delta_rec(const LinkDiagram& d);

  std::size_t crossing_cap_;
  SkeinCache homflypt_cache_;
  SkeinCache delta_cache_;
};

// One-shot helpers with a fresh cache per call.
LaurentPoly2 homflypt(const LinkDiagram& d, std::size_t crossing_cap = kDefaultCrossingCap);
LaurentPoly2 dubrovnik_delta(const LinkDiagram& d,
                             std::size_t crossing_cap = kDefaultCrossingCap);
LaurentPoly2 dubrovnik(const LinkDiagram& d, std::size_t crossing_cap = kDefaultCrossingCap);

// F^K(a', z') = (-1)^{mu-1} F^D(-i a', i z'). Each monomial a^k z^j picks up
// i^{j-k}; an odd j-k leaves an imaginary coefficient and raises
// Error(Consistency).
LaurentPoly2 kauffman_from_dubrovnik(const LaurentPoly2& f, int mu);
// F^D(a, z) = (-1)^{mu-1} F^K(i a, -i z).
LaurentPoly2 dubrovnik_from_kauffman(const LaurentPoly2& f, int mu);

}  // namespace knotapprox
