#pragma once

// Test-only oracle: the Dynnikov coordinate action of B_n on Z^{2n}. It never
// rewrites words, so it is independent of handle reduction.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "clasp/braid.hpp"

namespace clasp::oracle {

using Coord = std::int64_t;

struct DynnikovPair {
  Coord a = 0;
  Coord b = 1;
  friend bool operator==(const DynnikovPair&, const DynnikovPair&) = default;
};

inline Coord pos(Coord x) { return std::max<Coord>(x, 0); }
inline Coord neg(Coord x) { return std::min<Coord>(x, 0); }

/// Right action of one letter on the coordinate vector; s_i touches pairs i-1 and i.
inline void act(std::vector<DynnikovPair>& v, const Letter& l) {
  DynnikovPair& p = v[static_cast<std::size_t>(l.gen - 1)];
  DynnikovPair& q = v[static_cast<std::size_t>(l.gen)];
  const Coord a1 = p.a, b1 = p.b, a2 = q.a, b2 = q.b;
  if (l.sign > 0) {
    const Coord c = a1 - neg(b1) - a2 + pos(b2);
    p = {a1 + pos(b1) + pos(pos(b2) - c), b2 - pos(c)};
    q = {a2 + neg(b2) + neg(neg(b1) + c), b1 + pos(c)};
  } else {
    const Coord d = a1 + neg(b1) - a2 - pos(b2);
    p = {a1 - pos(b1) - pos(pos(b2) + d), b2 + neg(d)};
    q = {a2 - neg(b2) - neg(neg(b1) - d), b1 - neg(d)};
  }
}

inline std::vector<DynnikovPair> dynnikov_coordinates(const BraidWord& w) {
  std::vector<DynnikovPair> v(static_cast<std::size_t>(w.strands()));
  for (const Letter& l : w.letters()) act(v, l);
  return v;
}

/// Sign from the coordinates: trivial iff the base vector is fixed, otherwise
/// the first nonzero entry of (a_1, b_1 - 1, a_2, b_2 - 1, ...) decides.
inline SigmaSign dynnikov_sign(const BraidWord& w) {
  for (const DynnikovPair& p : dynnikov_coordinates(w)) {
    if (p.a != 0) return p.a > 0 ? SigmaSign::SigmaPositive : SigmaSign::SigmaNegative;
    if (p.b != 1) return p.b > 1 ? SigmaSign::SigmaPositive : SigmaSign::SigmaNegative;
  }
  return SigmaSign::Trivial;
}

}  // namespace clasp::oracle
