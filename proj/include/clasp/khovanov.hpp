#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "clasp/diagram.hpp"
#include "clasp/laurent.hpp"
#include "clasp/parallel.hpp"
#include "clasp/sparse_matrix.hpp"

namespace clasp {

struct Grading {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// Cube of resolutions with generators enumerated state by state. A label
/// bit set means the circle carries X, clear means 1. The differential is
/// stored row by row; each term records whether it keeps k or drops it by 2.
class GradedComplex {
 public:
  struct Term {
    std::uint32_t target;
    std::int8_t coeff;
    bool drops_k;
  };

  explicit GradedComplex(const PlanarDiagram& d, std::optional<int> basepoint_arc = std::nullopt)
      : crossings_(d.crossing_count()), reduced_(basepoint_arc.has_value()) {
    if (crossings_ > 24) throw InputError("diagram has too many crossings for the cube of resolutions");
    if (basepoint_arc && (*basepoint_arc < 0 || *basepoint_arc >= d.arc_count()))
      throw InputError("basepoint arc is not in the diagram");
    const std::uint64_t states = std::uint64_t{1} << crossings_;
    StateResolver resolver(d);
    states_.resize(states);
    std::uint32_t offset = 0;
    for (std::uint64_t s = 0; s < states; ++s) {
      StateInfo& info = states_[s];
      std::vector<int> winding;
      resolver.trace(s, info.arc_circle, winding);
      info.circles = static_cast<int>(winding.size());
      if (info.circles > 62) throw InputError("too many circles in a resolution");
      info.arc_circles = info.circles - static_cast<int>(d.loops().size());
      info.rep_arc.assign(static_cast<std::size_t>(info.arc_circles), -1);
      for (int a = d.arc_count() - 1; a >= 0; --a) info.rep_arc[static_cast<std::size_t>(info.arc_circle[static_cast<std::size_t>(a)])] = a;
      for (int c = 0; c < info.circles; ++c)
        if (winding[static_cast<std::size_t>(c)] != 0) info.essential |= std::uint64_t{1} << c;
      info.basepoint = basepoint_arc ? info.arc_circle[static_cast<std::size_t>(*basepoint_arc)] : -1;
      info.offset = offset;
      const int free_circles = info.circles - (reduced_ ? 1 : 0);
      if (offset + (std::uint64_t{1} << free_circles) > 0xffffffffULL) throw InputError("complex too large");
      offset += static_cast<std::uint32_t>(std::uint64_t{1} << free_circles);
    }
    size_ = offset;

    gradings_.resize(size_);
    state_of_.resize(size_);
    labels_.resize(size_);
    for (std::uint64_t s = 0; s < states; ++s) {
      const StateInfo& info = states_[s];
      const int ones = std::popcount(s);
      const std::uint32_t count = generators_in(s);
      for (std::uint32_t g = 0; g < count; ++g) {
        const std::uint64_t labels = expand(info, g);
        const std::uint32_t id = info.offset + g;
        const int x_count = std::popcount(labels);
        Grading gr;
        gr.i = ones - d.n_minus();
        gr.j = (info.circles - 2 * x_count) + ones + d.n_plus() - 2 * d.n_minus() + (reduced_ ? 1 : 0);
        gr.k = std::popcount(info.essential) - 2 * std::popcount(labels & info.essential);
        gradings_[id] = gr;
        state_of_[id] = s;
        labels_[id] = labels;
      }
    }
    build_differential(d);
    check_d_squared();
  }

  [[nodiscard]] std::uint32_t size() const { return size_; }
  [[nodiscard]] int crossing_count() const { return crossings_; }
  [[nodiscard]] bool reduced() const { return reduced_; }
  [[nodiscard]] const Grading& grading(std::uint32_t g) const { return gradings_[g]; }
  [[nodiscard]] std::uint64_t state(std::uint32_t g) const { return state_of_[g]; }
  [[nodiscard]] std::uint64_t labels(std::uint32_t g) const { return labels_[g]; }
  [[nodiscard]] int circles_in_state(std::uint64_t s) const { return states_[s].circles; }

  /// Differential terms leaving generator g.
  [[nodiscard]] std::pair<const Term*, const Term*> boundary(std::uint32_t g) const {
    return {terms_.data() + row_start_[g], terms_.data() + row_start_[g + 1]};
  }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  /// Exact check that the differential squares to zero. Each target of a
  /// two-step path has a fixed k shift, so this covers d0^2 = 0, the
  /// anticommutator of d0 and d-2, and d-2^2 = 0 at once.
  void check_d_squared() const {
    std::vector<std::pair<std::uint32_t, int>> acc;
    for (std::uint32_t g = 0; g < size_; ++g) {
      acc.clear();
      for (auto [a, ae] = boundary(g); a != ae; ++a)
        for (auto [b, be] = boundary(a->target); b != be; ++b) acc.emplace_back(b->target, a->coeff * b->coeff);
      std::sort(acc.begin(), acc.end());
      for (std::size_t p = 0; p < acc.size();) {
        std::size_t q = p;
        int sum = 0;
        while (q < acc.size() && acc[q].first == acc[p].first) sum += acc[q++].second;
        if (sum != 0) throw InternalError("differential does not square to zero");
        p = q;
      }
    }
  }

 private:
  struct StateInfo {
    std::vector<int> arc_circle;
    std::vector<int> rep_arc;
    std::uint64_t essential = 0;
    int circles = 0;
    int arc_circles = 0;
    int basepoint = -1;
    std::uint32_t offset = 0;
  };

  [[nodiscard]] std::uint32_t generators_in(std::uint64_t s) const {
    return static_cast<std::uint32_t>(std::uint64_t{1} << (states_[s].circles - (reduced_ ? 1 : 0)));
  }

  // label mask <-> index within the state; in the reduced complex the
  // basepoint bit is always set and is dropped from the index
  [[nodiscard]] std::uint64_t expand(const StateInfo& info, std::uint64_t index) const {
    if (!reduced_) return index;
    const std::uint64_t low = index & ((std::uint64_t{1} << info.basepoint) - 1);
    return low | (std::uint64_t{1} << info.basepoint) | ((index >> info.basepoint) << (info.basepoint + 1));
  }
  [[nodiscard]] std::uint64_t compress(const StateInfo& info, std::uint64_t labels) const {
    if (!reduced_) return labels;
    if (!((labels >> info.basepoint) & 1)) throw InternalError("reduced complex left its subcomplex");
    const std::uint64_t low = labels & ((std::uint64_t{1} << info.basepoint) - 1);
    return low | ((labels >> (info.basepoint + 1)) << info.basepoint);
  }

  void build_differential(const PlanarDiagram& d) {
    const std::uint64_t states = states_.size();
    std::vector<std::vector<Term>> rows(size_);
    std::vector<int> circle_map;
    for (std::uint64_t s = 0; s < states; ++s) {
      const StateInfo& from = states_[s];
      for (int c = 0; c < crossings_; ++c) {
        if ((s >> c) & 1) continue;
        const std::uint64_t t = s | (std::uint64_t{1} << c);
        const StateInfo& to = states_[t];
        const std::int8_t sign = (std::popcount(s & ((std::uint64_t{1} << c) - 1)) % 2) ? -1 : 1;
        const auto& arcs = d.crossings()[static_cast<std::size_t>(c)].arcs;
        const int a0 = from.arc_circle[static_cast<std::size_t>(arcs[0])];
        const int a2 = from.arc_circle[static_cast<std::size_t>(arcs[2])];
        const bool merge = a0 != a2;
        circle_map.assign(static_cast<std::size_t>(from.circles), -1);
        for (int k = 0; k < from.circles; ++k) {
          if (k == a0 || k == a2) continue;
          circle_map[static_cast<std::size_t>(k)] =
              k < from.arc_circles ? to.arc_circle[static_cast<std::size_t>(from.rep_arc[static_cast<std::size_t>(k)])]
                                   : to.arc_circles + (k - from.arc_circles);
        }
        const int p = to.arc_circle[static_cast<std::size_t>(arcs[0])];
        const int q = to.arc_circle[static_cast<std::size_t>(arcs[1])];
        if (merge ? to.circles != from.circles - 1 : (p == q || to.circles != from.circles + 1))
          throw InternalError("cube edge is neither a merge nor a split");

        const std::uint32_t count = generators_in(s);
        for (std::uint32_t g = 0; g < count; ++g) {
          const std::uint64_t L = expand(from, g);
          std::uint64_t base = 0;
          for (int k = 0; k < from.circles; ++k)
            if (circle_map[static_cast<std::size_t>(k)] >= 0 && ((L >> k) & 1))
              base |= std::uint64_t{1} << circle_map[static_cast<std::size_t>(k)];
          const std::uint32_t src = from.offset + g;
          auto emit = [&](std::uint64_t labels) {
            const std::uint32_t dst = to.offset + static_cast<std::uint32_t>(compress(to, labels));
            const int dk = gradings_[dst].k - gradings_[src].k;
            if (dk != 0 && dk != -2) throw InternalError("differential changes the annular grading by " + std::to_string(dk));
            if (gradings_[dst].j != gradings_[src].j || gradings_[dst].i != gradings_[src].i + 1)
              throw InternalError("differential does not have degree (1, 0)");
            rows[src].push_back({dst, sign, dk == -2});
          };
          if (merge) {
            const bool x0 = (L >> a0) & 1, x2 = (L >> a2) & 1;
            if (x0 && x2) continue;
            emit(base | ((x0 || x2) ? std::uint64_t{1} << p : 0));
          } else {
            const std::uint64_t bp = std::uint64_t{1} << p, bq = std::uint64_t{1} << q;
            if ((L >> a0) & 1) {
              emit(base | bp | bq);
            } else {
              emit(base | bq);
              emit(base | bp);
            }
          }
        }
      }
    }
    row_start_.assign(size_ + 1, 0);
    for (std::uint32_t g = 0; g < size_; ++g) row_start_[g + 1] = row_start_[g] + rows[g].size();
    terms_.reserve(row_start_[size_]);
    for (auto& r : rows) terms_.insert(terms_.end(), r.begin(), r.end());
  }

  int crossings_ = 0;
  bool reduced_ = false;
  std::uint32_t size_ = 0;
  std::vector<StateInfo> states_;
  std::vector<Grading> gradings_;
  std::vector<std::uint64_t> state_of_;
  std::vector<std::uint64_t> labels_;
  std::vector<std::size_t> row_start_;
  std::vector<Term> terms_;
};

inline GradedComplex build_cube(const PlanarDiagram& d, std::optional<int> basepoint_arc = std::nullopt) {
  return GradedComplex(d, basepoint_arc);
}

// ---------------------------------------------------------------------------
// Homology tables

class HomologyTable {
 public:
  HomologyTable() = default;
  HomologyTable(Ring ring, bool annular) : ring_(ring), annular_(annular) {}

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] bool annular() const { return annular_; }
  [[nodiscard]] const std::map<Grading, HomologyGroup>& entries() const { return entries_; }

  /// Stores a group; zero groups are dropped. k is ignored unless annular.
  void set(Grading g, HomologyGroup h) {
    if (!annular_) g.k = 0;
    if (h.free_rank == 0 && h.torsion.empty()) {
      entries_.erase(g);
      return;
    }
    entries_[g] = std::move(h);
  }
  void add_free(Grading g, std::size_t r) {
    if (!annular_) g.k = 0;
    if (r == 0) return;
    entries_[g].free_rank += r;
  }

  [[nodiscard]] HomologyGroup at(Grading g) const {
    if (!annular_) g.k = 0;
    auto it = entries_.find(g);
    return it == entries_.end() ? HomologyGroup{} : it->second;
  }
  [[nodiscard]] std::size_t free_rank(int i, int j, int k = 0) const { return at({i, j, k}).free_rank; }

  [[nodiscard]] std::size_t total_free_rank() const {
    std::size_t r = 0;
    for (const auto& [g, h] : entries_) r += h.free_rank;
    return r;
  }
  /// Number of cyclic torsion summands of even order.
  [[nodiscard]] std::size_t even_torsion_count() const {
    std::size_t r = 0;
    for (const auto& [g, h] : entries_)
      for (const BigInt& t : h.torsion)
        if (t % 2 == 0) ++r;
    return r;
  }

  /// Graded Euler characteristic: sum of (-1)^i q^j t^k times the free rank.
  [[nodiscard]] LaurentPoly euler_characteristic() const {
    LaurentPoly p;
    for (const auto& [g, h] : entries_)
      p.add_term(annular_ ? g.k : 0, g.j, (g.i % 2 == 0 ? 1 : -1) * BigInt(h.free_rank));
    return p;
  }

  /// Forgets the torsion and the k grading.
  [[nodiscard]] HomologyTable free_part_bigraded() const {
    HomologyTable out(ring_, false);
    for (const auto& [g, h] : entries_) out.add_free({g.i, g.j, 0}, h.free_rank);
    return out;
  }

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [g, h] : entries_) {
      nlohmann::json e;
      e["i"] = g.i;
      e["j"] = g.j;
      if (annular_) e["k"] = g.k;
      e["free"] = h.free_rank;
      nlohmann::json tors = nlohmann::json::array();
      for (const BigInt& t : h.torsion) {
        if (t <= std::numeric_limits<std::int64_t>::max()) tors.push_back(static_cast<std::int64_t>(t));
        else tors.push_back(t.str());
      }
      e["torsion"] = std::move(tors);
      arr.push_back(std::move(e));
    }
    return arr;
  }

  static HomologyTable from_json(const nlohmann::json& arr, Ring ring, bool annular) {
    HomologyTable t(ring, annular);
    for (const auto& e : arr) {
      HomologyGroup h;
      h.free_rank = e.at("free").get<std::size_t>();
      for (const auto& v : e.at("torsion")) h.torsion.emplace_back(v.get<std::int64_t>());
      t.set({e.at("i").get<int>(), e.at("j").get<int>(), annular ? e.at("k").get<int>() : 0}, std::move(h));
    }
    return t;
  }

  /// Human-readable grid. Bigraded tables: one row per j (descending), one
  /// column per i. Annular tables: one row per i (descending), one column
  /// per k, cells listing j^multiplicity.
  [[nodiscard]] std::string to_text() const {
    if (entries_.empty()) return "(zero)\n";
    std::set<int> rows, cols;
    std::map<std::pair<int, int>, std::string> cells;
    for (const auto& [g, h] : entries_) {
      const int row = annular_ ? g.i : g.j;
      const int col = annular_ ? g.k : g.i;
      rows.insert(row);
      cols.insert(col);
      std::string& cell = cells[{row, col}];
      std::string piece;
      if (annular_) {
        piece = std::to_string(g.j);
        if (h.free_rank != 1) piece += "^" + std::to_string(h.free_rank);
      } else if (h.free_rank > 0) {
        piece = std::to_string(h.free_rank);
      }
      for (const BigInt& t : h.torsion) piece += (piece.empty() ? "" : "+") + ("Z/" + t.str());
      if (annular_ && !h.torsion.empty() && h.free_rank == 0) piece = std::to_string(g.j) + ":" + piece;
      cell += (cell.empty() ? "" : " ") + piece;
    }
    std::size_t width = 4;
    for (const auto& [key, cell] : cells) width = std::max(width, cell.size() + 2);
    std::ostringstream os;
    auto pad = [&](const std::string& s) { os << std::string(width - std::min(width, s.size()), ' ') << s; };
    pad(annular_ ? "i\\k" : "j\\i");
    for (int c : cols) pad(std::to_string(c));
    os << '\n';
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      pad(std::to_string(*it));
      for (int c : cols) {
        auto found = cells.find({*it, c});
        pad(found == cells.end() ? "." : found->second);
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  Ring ring_ = Ring::Q;
  bool annular_ = false;
  std::map<Grading, HomologyGroup> entries_;
};

/// Where a torsion summand coming from d: C^i -> C^(i+1) is recorded.
/// Source puts it in degree i (the layout of the reference tables),
/// Target in degree i+1 (cohomology of the cochain complex).
enum class TorsionPlacement { Source, Target };

namespace detail {

/// Generators bucketed by grading, with their position inside the bucket.
struct Buckets {
  std::map<Grading, std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> local;
};

inline Buckets bucket(const GradedComplex& c, bool annular) {
  Buckets b;
  b.local.resize(c.size());
  for (std::uint32_t g = 0; g < c.size(); ++g) {
    Grading key = c.grading(g);
    if (!annular) key.k = 0;
    auto& v = b.members[key];
    b.local[g] = static_cast<std::uint32_t>(v.size());
    v.push_back(g);
  }
  return b;
}

enum class Part { All, Keep, Drop };

/// Matrix of one part of the differential from bucket `from` to bucket `to`
/// (rows index `to`). With annular keys off, buckets ignore k.
inline SparseMatrix block_matrix(const GradedComplex& c, const Buckets& b, const Grading& from, const Grading& to,
                                 Part part, bool annular_keys) {
  auto fi = b.members.find(from);
  auto ti = b.members.find(to);
  const int cols = fi == b.members.end() ? 0 : static_cast<int>(fi->second.size());
  const int rows = ti == b.members.end() ? 0 : static_cast<int>(ti->second.size());
  std::vector<MatrixEntry> entries;
  if (rows > 0 && cols > 0) {
    for (std::uint32_t g : fi->second) {
      for (auto [t, te] = c.boundary(g); t != te; ++t) {
        if ((part == Part::Keep && t->drops_k) || (part == Part::Drop && !t->drops_k)) continue;
        Grading tg = c.grading(t->target);
        if (!annular_keys) tg.k = 0;
        if (tg != to) continue;
        entries.push_back({static_cast<int>(b.local[t->target]), static_cast<int>(b.local[g]), t->coeff});
      }
    }
  }
  return SparseMatrix(rows, cols, std::move(entries));
}

/// Homology computed block by block: d preserves j, and in the annular case
/// only the k-preserving part is used, so (j, k) blocks are independent.
inline HomologyTable blockwise_homology(const GradedComplex& c, Ring ring, bool annular,
                                       TorsionPlacement placement = TorsionPlacement::Source) {
  const Buckets b = bucket(c, annular);
  // group gradings by (j, k); inside a group, d moves i up by one
  std::map<std::pair<int, int>, std::vector<Grading>> groups;
  for (const auto& [g, members] : b.members) groups[{g.j, g.k}].push_back(g);
  std::vector<std::vector<Grading>> work;
  for (auto& [key, list] : groups) work.push_back(std::move(list));
  std::vector<std::vector<std::pair<Grading, HomologyGroup>>> results(work.size());
  parallel_for(work.size(), [&](std::size_t w) {
    const auto& list = work[w];
    std::map<int, MapData> out_of;  // map C^i -> C^{i+1}
    for (const Grading& g : list) {
      Grading to = g;
      ++to.i;
      out_of[g.i] = analyse_map(block_matrix(c, b, g, to, annular ? Part::Keep : Part::All, annular), ring);
    }
    for (const Grading& g : list) {
      auto in = out_of.find(g.i - 1);
      const std::size_t dim = b.members.at(g).size();
      HomologyGroup h;
      const std::size_t in_rank = in == out_of.end() ? 0 : in->second.rank;
      h.free_rank = dim - out_of.at(g.i).rank - in_rank;
      if (placement == TorsionPlacement::Source) h.torsion = out_of.at(g.i).torsion;
      else if (in != out_of.end()) h.torsion = in->second.torsion;
      results[w].emplace_back(g, std::move(h));
    }
  });
  HomologyTable table(ring, annular);
  for (auto& r : results)
    for (auto& [g, h] : r) table.set(g, std::move(h));
  return table;
}

}  // namespace detail

/// Bigraded Khovanov homology of the full differential.
inline HomologyTable kh(const PlanarDiagram& d, Ring ring, TorsionPlacement placement = TorsionPlacement::Source) {
  return detail::blockwise_homology(GradedComplex(d), ring, false, placement);
}

/// Reduced Khovanov homology with the basepoint on the given arc.
inline HomologyTable reduced_kh(const PlanarDiagram& d, Ring ring, int basepoint_arc = 0) {
  if (d.arc_count() == 0) throw InputError("reduced homology needs a diagram with at least one arc");
  return detail::blockwise_homology(GradedComplex(d, basepoint_arc), ring, false);
}

inline HomologyTable kh(const GradedComplex& c, Ring ring, TorsionPlacement placement = TorsionPlacement::Source) {
  return detail::blockwise_homology(c, ring, false, placement);
}

/// Jones polynomial by the state sum, unnormalised: the unknot gives q + q^-1.
inline LaurentPoly jones(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n > 30) throw InputError("too many crossings for the state sum");
  StateResolver resolver(d);
  std::vector<int> arc_circle, winding;
  std::map<std::pair<int, int>, BigInt> counts;  // (|s|, circles) -> states
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    resolver.trace(s, arc_circle, winding);
    counts[{std::popcount(s), static_cast<int>(winding.size())}] += 1;
  }
  const LaurentPoly circle = LaurentPoly::q(1) + LaurentPoly::q(-1);
  LaurentPoly out;
  for (const auto& [key, num] : counts) {
    const auto [ones, circles] = key;
    const int sign = ((ones - d.n_minus()) % 2 == 0) ? 1 : -1;
    out += LaurentPoly::monomial(0, ones + d.n_plus() - 2 * d.n_minus(), sign * num) * circle.pow(static_cast<unsigned>(circles));
  }
  return out;
}

/// Homological degrees 2 lk(E, L - E) over all sublinks E, one per orientation.
inline std::vector<int> lee_homological_gradings(const PlanarDiagram& d) {
  const int m = d.component_count();
  if (m > 20) throw InputError("too many components");
  std::vector<std::vector<int>> lk(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) lk[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = lk[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = linking_number(d, a, b);
  std::vector<int> out;
  for (std::uint32_t e = 0; e < (1U << m); ++e) {
    int sum = 0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (((e >> a) & 1) && !((e >> b) & 1)) sum += lk[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    out.push_back(2 * sum);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clasp
