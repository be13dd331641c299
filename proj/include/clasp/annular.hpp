#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "clasp/braid.hpp"
#include "clasp/khovanov.hpp"

namespace clasp {

/// Triply graded homology of the k-preserving part of the differential.
inline HomologyTable akh(const PlanarDiagram& d, Ring ring, TorsionPlacement placement = TorsionPlacement::Source) {
  return detail::blockwise_homology(GradedComplex(d), ring, true, placement);
}
inline HomologyTable akh(const GradedComplex& c, Ring ring, TorsionPlacement placement = TorsionPlacement::Source) {
  return detail::blockwise_homology(c, ring, true, placement);
}

/// Rank of the map induced by d-2 on d0-homology, from (i, j, k) to
/// (i+1, j, k-2). Zero ranks are omitted.
///
/// With A = d0 out of the source, B = d0 into the target and phi = d-2 from
/// the source, the image of ker A under phi plus im B has dimension
/// rank [[A, 0], [phi, B]] - rank A, so the induced rank is that minus rank B.
inline std::map<Grading, std::size_t> d2_induced(const GradedComplex& c, Ring field) {
  if (field == Ring::Z) throw InputError("induced map ranks need a field");
  const detail::Buckets b = detail::bucket(c, true);
  std::vector<Grading> sources;
  for (const auto& [g, members] : b.members) {
    const Grading tgt{g.i + 1, g.j, g.k - 2};
    if (b.members.count(tgt)) sources.push_back(g);
  }
  const Field f = field == Ring::F2 ? Field::F2 : Field::Q;
  std::vector<std::size_t> ranks(sources.size(), 0);
  parallel_for(sources.size(), [&](std::size_t w) {
    using detail::Part;
    const Grading src = sources[w];
    const Grading src_next{src.i + 1, src.j, src.k};
    const Grading tgt{src.i + 1, src.j, src.k - 2};
    const Grading pre{src.i, src.j, src.k - 2};
    const SparseMatrix A = detail::block_matrix(c, b, src, src_next, Part::Keep, true);
    const SparseMatrix B = detail::block_matrix(c, b, pre, tgt, Part::Keep, true);
    const SparseMatrix phi = detail::block_matrix(c, b, src, tgt, Part::Drop, true);
    // block matrix [[A, 0], [phi, B]] on columns (src, pre)
    std::vector<MatrixEntry> e;
    for (const MatrixEntry& m : A.entries()) e.push_back(m);
    for (const MatrixEntry& m : phi.entries()) e.push_back({m.row + A.rows(), m.col, m.value});
    for (const MatrixEntry& m : B.entries()) e.push_back({m.row + A.rows(), m.col + A.cols(), m.value});
    const SparseMatrix M(A.rows() + phi.rows(), A.cols() + B.cols(), std::move(e));
    const std::size_t r = rank(M, f) - rank(A, f) - rank(B, f);
    ranks[w] = r;
  });
  std::map<Grading, std::size_t> out;
  for (std::size_t w = 0; w < sources.size(); ++w)
    if (ranks[w] > 0) out[sources[w]] = ranks[w];
  return out;
}

inline std::map<Grading, std::size_t> d2_induced(const PlanarDiagram& d, Ring field) {
  return d2_induced(GradedComplex(d), field);
}

/// V_n^i{a} with multiplicity: rank `multiplicity` at (i, a - n + 2p, -n + 2p)
/// for 0 <= p <= n.
struct Sl2Summand {
  int n = 0;
  int i = 0;
  int a = 0;
  std::size_t multiplicity = 1;
  friend auto operator<=>(const Sl2Summand&, const Sl2Summand&) = default;
};

inline std::string to_string(const Sl2Summand& s) {
  std::string out = "V_" + std::to_string(s.n) + "^" + std::to_string(s.i) + "{" + std::to_string(s.a) + "}";
  if (s.multiplicity != 1) out = std::to_string(s.multiplicity) + "*" + out;
  return out;
}

/// Splits graded ranks into sl2 characters. Within each (i, a = j - k)
/// column the rank r(k) must be symmetric in k, and V_n occurs
/// r(n) - r(n+2) times; anything else means the table is not a character.
inline std::vector<Sl2Summand> sl2_decompose(const HomologyTable& t) {
  if (!t.annular()) throw InputError("sl2 decomposition needs an annular table");
  if (t.ring() == Ring::F2) throw InputError("sl2 decomposition needs characteristic zero ranks");
  std::map<std::pair<int, int>, std::map<int, std::size_t>> columns;
  for (const auto& [g, h] : t.entries())
    if (h.free_rank > 0) columns[{g.i, g.j - g.k}][g.k] = h.free_rank;
  std::vector<Sl2Summand> out;
  for (const auto& [key, ranks] : columns) {
    auto r = [&](int k) {
      auto it = ranks.find(k);
      return it == ranks.end() ? std::size_t{0} : it->second;
    };
    int top = 0;
    for (const auto& [k, v] : ranks) {
      if (r(-k) != v)
        throw InternalError("annular ranks are not symmetric in k at i=" + std::to_string(key.first) +
                            ", j-k=" + std::to_string(key.second));
      top = std::max(top, std::abs(k));
    }
    for (int n = top; n >= 0; --n) {
      const std::size_t here = r(n), above = r(n + 2);
      if (here < above) throw InternalError("annular ranks do not form an sl2 character");
      if (here > above) out.push_back({n, key.first, key.second, here - above});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ranks of a direct sum of sl2 summands, for comparisons with tables.
inline HomologyTable sl2_table(const std::vector<Sl2Summand>& summands) {
  HomologyTable t(Ring::Q, true);
  for (const Sl2Summand& s : summands)
    for (int p = 0; p <= s.n; ++p) t.add_free({s.i, s.a - s.n + 2 * p, -s.n + 2 * p}, s.multiplicity);
  return t;
}

/// (i, j, k) of the Plamenevskaya class of the closure of w.
inline Grading plamenevskaya_grading(const BraidWord& w) {
  const NumericInvariants inv = numeric_invariants(w);
  return {0, inv.self_linking, -w.strands()};
}

/// Annular Jones polynomial by the state sum: inessential circles give
/// q + q^-1, essential ones q t + q^-1 t^-1.
inline LaurentPoly annular_jones(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n > 30) throw InputError("too many crossings for the state sum");
  StateResolver resolver(d);
  std::vector<int> arc_circle, winding;
  std::map<std::tuple<int, int, int>, BigInt> counts;  // (|s|, inessential, essential) -> states
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    resolver.trace(s, arc_circle, winding);
    const int essential = static_cast<int>(std::count_if(winding.begin(), winding.end(), [](int w) { return w != 0; }));
    counts[{std::popcount(s), static_cast<int>(winding.size()) - essential, essential}] += 1;
  }
  const LaurentPoly trivial = LaurentPoly::q(1) + LaurentPoly::q(-1);
  const LaurentPoly wraps = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1);
  LaurentPoly out;
  for (const auto& [key, num] : counts) {
    const auto [ones, inessential, essential] = key;
    const int sign = ((ones - d.n_minus()) % 2 == 0) ? 1 : -1;
    out += LaurentPoly::monomial(0, ones + d.n_plus() - 2 * d.n_minus(), sign * num) *
           trivial.pow(static_cast<unsigned>(inessential)) * wraps.pow(static_cast<unsigned>(essential));
  }
  return out;
}

}  // namespace clasp
