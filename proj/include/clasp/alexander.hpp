#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "clasp/diagram.hpp"
#include "clasp/error.hpp"
#include "clasp/laurent.hpp"

namespace clasp {

namespace poly {

/// Dense polynomial in Z[t], coefficients by ascending degree, no trailing zeros.
using Poly = std::vector<BigInt>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly from_terms(std::initializer_list<std::pair<int, int>> terms) {
  Poly p;
  for (auto [e, c] : terms) {
    if (p.size() <= static_cast<std::size_t>(e)) p.resize(static_cast<std::size_t>(e) + 1, 0);
    p[static_cast<std::size_t>(e)] += c;
  }
  trim(p);
  return p;
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  trim(a);
  return a;
}

inline Poly negate(Poly a) {
  for (BigInt& c : a) c = -c;
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != 0)
      for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  trim(out);
  return out;
}

/// a / b where the division is known to be exact in Z[t].
inline Poly exact_div(Poly a, const Poly& b) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InternalError("inexact polynomial division");
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw InternalError("inexact polynomial division");
    q[k] = lead / b.back();
    for (std::size_t m = 0; m < b.size(); ++m) a[k + m] -= q[k] * b[m];
  }
  trim(a);
  if (!a.empty()) throw InternalError("inexact polynomial division");
  trim(q);
  return q;
}

inline BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const BigInt& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline Poly primitive(Poly p) {
  const BigInt c = content(p);
  if (c > 1)
    for (BigInt& x : p) x /= c;
  if (!p.empty() && p.back() < 0) p = negate(std::move(p));
  return p;
}

/// Pseudo-remainder of a by b.
inline Poly prem(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const BigInt la = a.back();
    for (BigInt& c : a) c *= b.back();
    for (std::size_t m = 0; m < b.size(); ++m) a[shift + m] -= la * b[m];
    trim(a);
  }
  return a;
}

/// gcd in Z[t], with positive leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.empty()) return (!b.empty() && b.back() < 0) ? negate(b) : b;
  if (b.empty()) return gcd(b, a);
  const BigInt c = boost::multiprecision::gcd(content(a), content(b));
  Poly x = primitive(a), y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Poly r = primitive(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  for (BigInt& v : x) v *= c;
  return x;
}

/// Fraction-free determinant (Bareiss) of a square matrix over Z[t].
inline Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  Poly prev{1};
  bool negative = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(add(mul(m[k][k], m[i][j]), negate(mul(m[i][k], m[k][j]))), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negative ? negate(std::move(det)) : det;
}

}  // namespace poly

/// Lowest t-power 0 and positive lowest coefficient. Zero stays zero.
inline LaurentPoly normalize_up_to_units(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const auto& terms = p.terms();
  const int low = terms.begin()->first.first;
  const int sign = terms.begin()->second < 0 ? -1 : 1;
  LaurentPoly out;
  for (const auto& [e, c] : terms) out.add_term(e.first - low, e.second, sign * c);
  return out;
}

inline bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_up_to_units(a) == normalize_up_to_units(b);
}

/// One-variable Alexander polynomial from the Wirtinger presentation: Fox
/// derivatives with every generator sent to t, one column deleted, gcd of
/// the maximal minors, normalized up to units. The Hopf link gives 1 - t.
/// Diagrams whose shadow is disconnected are rejected.
inline LaurentPoly alexander_polynomial(const PlanarDiagram& d) {
  const int arcs = d.arc_count();
  const int crossings = d.crossing_count();
  if (crossings == 0) {
    if (d.component_count() == 1) return LaurentPoly(1);
    throw InputError("split diagram: the Alexander polynomial vanishes");
  }
  if (!d.loops().empty()) throw InputError("split diagram: a component has no crossings");

  std::vector<int> parent(static_cast<std::size_t>(arcs));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  // shadow connectivity
  for (const Crossing& c : d.crossings())
    for (int s = 1; s < 4; ++s) unite(c.arcs[0], c.arcs[static_cast<std::size_t>(s)]);
  for (int a = 0; a < arcs; ++a)
    if (find(a) != find(0)) throw InputError("split diagram: the projection is disconnected");

  // Wirtinger generators: arcs joined through over passes
  std::iota(parent.begin(), parent.end(), 0);
  for (const Crossing& c : d.crossings()) unite(c.arcs[1], c.arcs[3]);
  std::vector<int> generator(static_cast<std::size_t>(arcs), -1);
  int gens = 0;
  for (int a = 0; a < arcs; ++a) {
    int& g = generator[static_cast<std::size_t>(find(a))];
    if (g < 0) g = gens++;
    generator[static_cast<std::size_t>(a)] = g;
  }

  using poly::Poly;
  std::vector<std::vector<Poly>> fox(static_cast<std::size_t>(crossings), std::vector<Poly>(static_cast<std::size_t>(gens)));
  for (int x = 0; x < crossings; ++x) {
    const Crossing& c = d.crossings()[static_cast<std::size_t>(x)];
    const bool forward = d.orientation(d.under_component(x)) > 0;
    const int in = generator[static_cast<std::size_t>(c.arcs[forward ? 0 : 2])];
    const int out = generator[static_cast<std::size_t>(c.arcs[forward ? 2 : 0])];
    const int over = generator[static_cast<std::size_t>(c.arcs[1])];
    auto& row = fox[static_cast<std::size_t>(x)];
    auto put = [&](int g, const Poly& p) { row[static_cast<std::size_t>(g)] = poly::add(row[static_cast<std::size_t>(g)], p); };
    if (c.sign > 0) {
      put(in, poly::from_terms({{1, 1}}));
      put(over, poly::from_terms({{0, 1}, {1, -1}}));
      put(out, poly::from_terms({{0, -1}}));
    } else {
      put(in, poly::from_terms({{0, 1}}));
      put(over, poly::from_terms({{0, -1}, {1, 1}}));
      put(out, poly::from_terms({{1, -1}}));
    }
  }

  // delete the last column; take every maximal square minor
  const int cols = gens - 1;
  if (cols > crossings) return LaurentPoly();
  if (cols == 0) return LaurentPoly(1);
  Poly g;
  std::vector<bool> pick(static_cast<std::size_t>(crossings), false);
  std::fill(pick.begin(), pick.begin() + cols, true);
  // generators never fall short of crossings, so this is at most `crossings` subsets
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<std::vector<Poly>> sub;
    for (int r = 0; r < crossings; ++r) {
      if (!pick[static_cast<std::size_t>(r)]) continue;
      sub.emplace_back(fox[static_cast<std::size_t>(r)].begin(), fox[static_cast<std::size_t>(r)].begin() + cols);
    }
    g = poly::gcd(g, poly::determinant(std::move(sub)));
  } while (std::next_permutation(pick.begin(), pick.end()));

  LaurentPoly out;
  for (std::size_t e = 0; e < g.size(); ++e) out.add_term(static_cast<int>(e), 0, g[e]);
  return normalize_up_to_units(out);
}

}  // namespace clasp
