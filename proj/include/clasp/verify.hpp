#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clasp/alexander.hpp"
#include "clasp/annular.hpp"
#include "clasp/braid.hpp"
#include "clasp/diagram.hpp"
#include "clasp/fixtures.hpp"
#include "clasp/khovanov.hpp"
#include "clasp/parallel.hpp"

namespace clasp {

/// Outcome of one machine check. pass depends only on measured and bound.
struct Report {
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json measured = nlohmann::json::object();
  nlohmann::json bound = nlohmann::json::object();
  bool pass = false;
  std::string detail;

  [[nodiscard]] nlohmann::json to_json() const {
    return {{"claim", claim}, {"inputs", inputs}, {"measured", measured}, {"bound", bound}, {"pass", pass}};
  }
  [[nodiscard]] std::string to_text() const {
    std::string out = std::string(pass ? "PASS " : "FAIL ") + claim + "  " + inputs.dump() + '\n';
    if (!detail.empty()) out += detail;
    return out;
  }
};

namespace detail {

inline std::string cell(const HomologyGroup& h) {
  std::string s = std::to_string(h.free_rank);
  for (const BigInt& t : h.torsion) s += "+Z/" + t.str();
  return s;
}

/// Both tables side by side, one line per grading present in either.
inline std::string aligned_diff(const HomologyTable& expected, const HomologyTable& measured) {
  std::set<Grading> keys;
  for (const auto& [g, h] : expected.entries()) keys.insert(g);
  for (const auto& [g, h] : measured.entries()) keys.insert(g);
  std::ostringstream os;
  const bool annular = expected.annular();
  os << "  " << std::setw(14) << (annular ? "(i, j, k)" : "(i, j)") << std::setw(12) << "expected" << std::setw(12)
     << "measured" << '\n';
  for (const Grading& g : keys) {
    const HomologyGroup e = expected.at(g), m = measured.at(g);
    std::string label = "(" + std::to_string(g.i) + ", " + std::to_string(g.j);
    if (annular) label += ", " + std::to_string(g.k);
    label += ")";
    const bool same = e.free_rank == m.free_rank && e.torsion == m.torsion;
    os << (same ? "  " : "* ") << std::setw(14) << label << std::setw(12) << cell(e) << std::setw(12) << cell(m)
       << '\n';
  }
  return os.str();
}

inline HomologyTable parse_fixture_table(const fixtures::TableFixture& f) {
  HomologyTable t(f.ring, f.annular);
  std::istringstream in{std::string(f.data)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<long long> v;
    for (long long x; row >> x;) v.push_back(x);
    if (v.empty()) continue;
    if (f.annular) {
      if (v.size() != 4) throw InternalError("bad fixture row in " + std::string(f.id));
      t.add_free({static_cast<int>(v[0]), static_cast<int>(v[2]), static_cast<int>(v[1])}, static_cast<std::size_t>(v[3]));
    } else {
      if (v.size() < 3) throw InternalError("bad fixture row in " + std::string(f.id));
      HomologyGroup h = t.at({static_cast<int>(v[0]), static_cast<int>(v[1]), 0});
      h.free_rank += static_cast<std::size_t>(v[2]);
      for (std::size_t k = 3; k < v.size(); ++k) h.torsion.emplace_back(v[k]);
      std::sort(h.torsion.begin(), h.torsion.end());
      t.set({static_cast<int>(v[0]), static_cast<int>(v[1]), 0}, std::move(h));
    }
  }
  return t;
}

inline nlohmann::json word_inputs(const BraidWord& w, ClosureKind kind) {
  return {{"braid", w.str()}, {"index", w.strands()}, {"closure", to_string(kind)}};
}

inline void require_braid_or_clasp(ClosureKind kind) {
  if (kind != ClosureKind::Braid && kind != ClosureKind::Clasp)
    throw InputError("this check takes a braid or clasp closure");
}

inline PlanarDiagram split_loop_pair() {
  DiagramBuilder b;
  b.add_loop(1);
  b.add_loop(0);
  return b.build({}, {});
}

}  // namespace detail

/// rank AKh(closure; Q) against 2n (braid) or 4n (clasp).
inline Report check_rank_bound(const BraidWord& w, ClosureKind kind) {
  detail::require_braid_or_clasp(kind);
  const int n = w.strands();
  const std::size_t bound = static_cast<std::size_t>((kind == ClosureKind::Clasp ? 4 : 2) * n);
  const std::size_t r = akh(build_closure(w, kind), Ring::Q).total_free_rank();
  Report rep{"rank-bound", detail::word_inputs(w, kind), {{"rank", r}}, {{"at_least", bound}}, r >= bound, ""};
  return rep;
}

/// Mod 2: rank Kh <= rank AKh - 2(n-1), or - 4(n-1) for the clasp closure.
inline Report check_kh_akh_gap(const BraidWord& w, ClosureKind kind) {
  detail::require_braid_or_clasp(kind);
  const int n = w.strands();
  if (n < 2) throw InputError("the gap check needs at least two strands");
  if (dehornoy_sign(w) == SigmaSign::Trivial) throw InputError("the gap check needs a non-identity braid");
  const GradedComplex c(build_closure(w, kind));
  const std::size_t a = akh(c, Ring::F2).total_free_rank();
  const std::size_t k = kh(c, Ring::F2).total_free_rank();
  const long long gap = (kind == ClosureKind::Clasp ? 4 : 2) * (n - 1);
  const long long limit = static_cast<long long>(a) - gap;
  return {"kh-akh-gap", detail::word_inputs(w, kind), {{"kh_rank", k}, {"akh_rank", a}}, {{"kh_at_most", limit}},
          static_cast<long long>(k) <= limit, ""};
}

/// Annular Jones polynomials of c(s1^n s2^-1 s1 s2): the one-step skein
/// relation against n - 1 and the closed form in terms of n = 0, both
/// multiplied through by 1 + q^2.
inline Report check_skein_recursion(int n_lo, int n_hi) {
  if (n_lo > n_hi || n_lo < 0) throw InputError("skein range must be a non-empty range of non-negative integers");
  auto word = [](int n) {
    std::vector<Letter> l(static_cast<std::size_t>(n), Letter{1, 1});
    l.insert(l.end(), {Letter{2, -1}, Letter{1, 1}, Letter{2, 1}});
    return BraidWord(3, std::move(l));
  };
  auto J = [&](int n) { return annular_jones(build_closure(word(n), ClosureKind::Clasp)); };
  const LaurentPoly js = annular_jones(detail::split_loop_pair());
  const LaurentPoly one_q2 = LaurentPoly(1) + LaurentPoly::q(2);
  const LaurentPoly j0 = J(0);
  Report rep{"skein-recursion", {{"n_from", n_lo}, {"n_to", n_hi}}, {}, {}, true, ""};
  rep.measured["J(S)"] = js.str();
  LaurentPoly previous = n_lo > 0 ? J(n_lo - 1) : LaurentPoly();
  for (int n = n_lo; n <= n_hi; ++n) {
    const LaurentPoly jn = J(n);
    const int sign = n % 2 == 0 ? 1 : -1;
    const LaurentPoly closed =
        (LaurentPoly::q(1) + LaurentPoly::monomial(0, 1 - 2 * n, -sign)) * js + LaurentPoly::monomial(0, -2 * n, sign) * one_q2 * j0;
    const LaurentPoly stepped = LaurentPoly::q(-1) * js - LaurentPoly::q(-2) * previous;
    const bool closed_ok = one_q2 * jn == closed;
    const bool step_ok = n == 0 || jn == stepped;
    const std::string key = "n=" + std::to_string(n);
    rep.measured[key] = {{"J", jn.str()}, {"(1+q^2)J", (one_q2 * jn).str()}};
    rep.bound[key] = {{"closed_form", closed.str()}};
    if (n > 0) rep.bound[key]["recursion"] = stepped.str();
    rep.pass = rep.pass && closed_ok && step_ok;
    if (!step_ok) rep.detail += "  recursion fails at n=" + std::to_string(n) + '\n';
    if (!closed_ok) rep.detail += "  closed form fails at n=" + std::to_string(n) + '\n';
    previous = jn;
  }
  return rep;
}

/// If rank AKh(b(w); Q) is 2n, the sl2 decomposition must be
/// V_n^0{a} + V_{n-2}^{+-1}{b}. Otherwise the check does not apply.
inline Report check_minimal_rank(const BraidWord& w) {
  const int n = w.strands();
  if (n <= 2) throw InputError("the minimal rank check needs more than two strands");
  const HomologyTable t = akh(build_closure(w, ClosureKind::Braid), Ring::Q);
  Report rep{"minimal-rank", detail::word_inputs(w, ClosureKind::Braid), {}, {{"rank", 2 * n}}, true, ""};
  rep.measured["rank"] = t.total_free_rank();
  if (t.total_free_rank() != static_cast<std::size_t>(2 * n)) {
    rep.measured["applicable"] = false;
    return rep;
  }
  rep.measured["applicable"] = true;
  const std::vector<Sl2Summand> parts = sl2_decompose(t);
  nlohmann::json names = nlohmann::json::array();
  for (const Sl2Summand& s : parts) names.push_back(to_string(s));
  rep.measured["decomposition"] = names;
  rep.bound["decomposition"] = "V_n^0{a} + V_(n-2)^(+-1){b}";
  bool top = false, side = false;
  for (const Sl2Summand& s : parts) {
    if (s.multiplicity != 1) continue;
    if (s.n == n && s.i == 0) top = true;
    if (s.n == n - 2 && (s.i == 1 || s.i == -1)) side = true;
  }
  rep.pass = parts.size() == 2 && top && side;
  return rep;
}

inline constexpr std::string_view kClosedFormFixture = "b-sigma1-sigma2n-AKh-C";
inline constexpr std::string_view kPartialFixture = "c-s1inv3-s2-s1inv2-partial";
inline constexpr std::string_view kJSFixture = "J-S";
inline constexpr std::string_view kAlexanderFixture = "alexander";

inline std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : fixtures::tables()) ids.emplace_back(f.id);
  for (auto id : {kClosedFormFixture, kPartialFixture, kJSFixture, kAlexanderFixture}) ids.emplace_back(id);
  return ids;
}

/// Graded ranks of AKh(b(s1 s2^n); Q) from the closed formulas.
inline HomologyTable closed_form_b_sigma1_sigma2n(int n) {
  std::vector<Sl2Summand> s;
  if (n >= 1) {
    s = {{3, 0, n + 1, 1}, {1, 1, n + 3, 1}};
    for (int i = 1; i <= n - 1; ++i) s.push_back({1, 1 + i, n + 1 + 2 * i, 1});
  } else {
    s = {{3, 0, 1 + n, 1}, {1, 1, 3 + n, 1}, {1, 0, 1 + n, 1}};
    for (int i = -1; i >= n; --i) s.push_back({1, i, n + 1 + 2 * i, 1});
  }
  return sl2_table(s);
}

namespace detail {

inline Report check_table_fixture(const fixtures::TableFixture& f) {
  const BraidWord w = parse_braid(f.braid, f.index);
  const PlanarDiagram d = build_closure(w, f.closure);
  const HomologyTable expected = parse_fixture_table(f);
  const HomologyTable measured = f.annular ? akh(d, f.ring) : kh(d, f.ring);
  Report rep{std::string(f.id), word_inputs(w, f.closure), measured.to_json(), expected.to_json(), measured == expected, ""};
  rep.inputs["coeffs"] = to_string(f.ring);
  rep.inputs["anchor"] = f.anchor;
  if (!rep.pass) rep.detail = aligned_diff(expected, measured);
  return rep;
}

inline Report check_closed_forms() {
  Report rep{std::string(kClosedFormFixture), {{"n_from", -5}, {"n_to", 6}, {"closure", "braid"}}, {}, {}, true, ""};
  for (int n = -5; n <= 6; ++n) {
    std::vector<Letter> l{{1, 1}};
    for (int k = 0; k < std::abs(n); ++k) l.push_back({2, n > 0 ? 1 : -1});
    const HomologyTable measured = akh(build_closure(BraidWord(3, l), ClosureKind::Braid), Ring::Q);
    const HomologyTable expected = closed_form_b_sigma1_sigma2n(n);
    const std::string key = "n=" + std::to_string(n);
    rep.measured[key] = measured.to_json();
    rep.bound[key] = expected.to_json();
    if (!(measured == expected)) {
      rep.pass = false;
      rep.detail += "  " + key + '\n' + aligned_diff(expected, measured);
    }
  }
  return rep;
}

inline Report check_partial() {
  const BraidWord w = parse_braid(fixtures::kPartialBraid, 3);
  const PlanarDiagram clasp_d = build_closure(w, ClosureKind::Clasp);
  const PlanarDiagram braid_d = build_closure(w, ClosureKind::Braid);
  const HomologyTable t = akh(clasp_d, Ring::Q);
  nlohmann::json top = nlohmann::json::array(), bottom = nlohmann::json::array();
  std::set<std::pair<int, int>> top_support, bottom_support;
  std::size_t top_rank = 0, bottom_rank = 0;
  for (const auto& [g, h] : t.entries()) {
    if (g.k == 3) {
      top.push_back({{"i", g.i}, {"j", g.j}, {"free", h.free_rank}});
      top_support.insert({g.i, g.j});
      top_rank += h.free_rank;
    } else if (g.k == -3) {
      bottom.push_back({{"i", g.i}, {"j", g.j}, {"free", h.free_rank}});
      bottom_support.insert({g.i, g.j});
      bottom_rank += h.free_rank;
    }
  }
  // k = -3 mirrors k = 3 through the V_3 summands, shifted down by 6 in j
  std::set<std::pair<int, int>> want_top(fixtures::kPartialTopRows.begin(), fixtures::kPartialTopRows.end()), want_bottom;
  for (auto [i, j] : want_top) want_bottom.insert({i, j - 6});
  const bool rows_ok = top_rank == 2 && top_support == want_top && bottom_rank == 2 && bottom_support == want_bottom;

  const LaurentPoly stated = fixtures::partial_polynomial();
  const LaurentPoly j_clasp = annular_jones(clasp_d), j_braid = annular_jones(braid_d);
  const bool poly_ok = j_clasp == stated || j_braid == stated;

  Report rep{std::string(kPartialFixture), {{"braid", w.str()}, {"index", 3}}, {}, {}, rows_ok && poly_ok, ""};
  rep.measured = {{"clasp_k3", top}, {"clasp_k-3", bottom}, {"annular_jones_clasp", j_clasp.str()}, {"annular_jones_braid", j_braid.str()}};
  nlohmann::json want_rows = nlohmann::json::array();
  for (auto [i, j] : fixtures::kPartialTopRows) want_rows.push_back({{"i", i}, {"j", j}, {"free", 1}});
  rep.bound = {{"k3", want_rows}, {"annular_jones", stated.str()}};
  if (!rows_ok) rep.detail += "  k = +-3 rows differ\n";
  if (!poly_ok) {
    rep.detail += "  stated polynomial:  " + stated.str() + '\n';
    rep.detail += "  clasp closure:      " + j_clasp.str() + '\n';
    rep.detail += "  braid closure:      " + j_braid.str() + '\n';
    rep.detail += "  clasp - stated:     " + (j_clasp - stated).str() + '\n';
  }
  return rep;
}

inline Report check_js() {
  const LaurentPoly measured = annular_jones(split_loop_pair());
  LaurentPoly expected;
  for (auto [t, q] : {std::pair{-1, 0}, {-1, -2}, {1, 0}, {1, 2}}) expected.add_term(t, q, 1);
  Report rep{std::string(kJSFixture), {{"link", "essential loop + trivial loop"}}, {{"annular_jones", measured.str()}},
             {{"annular_jones", expected.str()}}, measured == expected, ""};
  return rep;
}

inline Report check_alexander_list() {
  Report rep{std::string(kAlexanderFixture), {{"closure", "augmented-clasp"}, {"index", 3}}, {}, {}, true, ""};
  for (const auto& f : fixtures::alexander()) {
    const PlanarDiagram d = build_closure(parse_braid(f.braid, 3), ClosureKind::AugmentedClasp);
    const int axis = d.component_count() - 1;
    const std::string a = alexander_polynomial(d).str();
    const std::string b = alexander_polynomial(reverse_component(d, axis)).str();
    const std::string key(f.braid);
    rep.measured[key] = {{"default_axis", a}, {"reversed_axis", b}};
    rep.bound[key] = {f.first, f.second};
    const bool ok = (a == f.first && b == f.second) || (a == f.second && b == f.first);
    if (!ok) rep.detail += "  " + key + ": got {" + a + ", " + b + "}\n";
    rep.pass = rep.pass && ok;
  }
  const std::string unknot = alexander_polynomial(build_closure(BraidWord(1), ClosureKind::Braid)).str();
  rep.measured["unknot"] = unknot;
  rep.bound["unknot"] = "1";
  rep.pass = rep.pass && unknot == "1";
  return rep;
}

}  // namespace detail

/// Recomputes one embedded fixture and compares it exactly.
inline Report check_table(std::string_view id) {
  for (const auto& f : fixtures::tables())
    if (f.id == id) return detail::check_table_fixture(f);
  if (id == kClosedFormFixture) return detail::check_closed_forms();
  if (id == kPartialFixture) return detail::check_partial();
  if (id == kJSFixture) return detail::check_js();
  if (id == kAlexanderFixture) return detail::check_alexander_list();
  throw InputError("unknown fixture '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Randomized corpus

struct CorpusOptions {
  int max_length_3 = 6;
  int random_4 = 200;
  int max_length_4 = 5;
  std::uint64_t seed = 20240601;
};

/// Every word in B_3 up to the length cap, then random words in B_4.
inline std::vector<BraidWord> corpus_words(const CorpusOptions& opt = {}) {
  std::vector<BraidWord> out;
  const std::vector<Letter> alphabet3 = {{1, 1}, {1, -1}, {2, 1}, {2, -1}};
  std::vector<std::vector<Letter>> layer{{}};
  for (int len = 0; len <= opt.max_length_3; ++len) {
    for (const auto& l : layer) out.emplace_back(3, l);
    if (len == opt.max_length_3) break;
    std::vector<std::vector<Letter>> next;
    for (const auto& l : layer)
      for (const Letter& a : alphabet3) {
        next.push_back(l);
        next.back().push_back(a);
      }
    layer = std::move(next);
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> length(1, opt.max_length_4), gen(1, 3), sign(0, 1);
  for (int k = 0; k < opt.random_4; ++k) {
    std::vector<Letter> l(static_cast<std::size_t>(length(rng)));
    for (Letter& x : l) x = {gen(rng), sign(rng) ? 1 : -1};
    out.emplace_back(4, std::move(l));
  }
  return out;
}

inline constexpr std::array<std::string_view, 10> kCorpusClaims = {
    "corpus-rank-bound",     "corpus-kh-akh-gap",      "corpus-sigma-negative", "corpus-euler-akh",
    "corpus-euler-kh",       "corpus-d-squared",       "corpus-universal-coefficients",
    "corpus-shumakovitch",   "corpus-akh-to-kh-bound", "corpus-sl2-character"};

/// Runs every corpus invariant on every word and closure type. One report
/// per invariant, listing up to five offending inputs.
inline std::vector<Report> check_corpus(const CorpusOptions& opt = {}) {
  const std::vector<BraidWord> words = corpus_words(opt);
  constexpr std::size_t claims = kCorpusClaims.size();
  // per job: (claim, failure text or empty)
  std::vector<std::vector<std::pair<int, std::string>>> outcome(words.size() * 2);
  parallel_for(words.size() * 2, [&](std::size_t job) {
    const BraidWord& w = words[job / 2];
    const ClosureKind kind = job % 2 == 0 ? ClosureKind::Braid : ClosureKind::Clasp;
    auto& out = outcome[job];
    const std::string name = w.str().empty() ? std::string("id") : w.str();
    const std::string tag = name + " [B_" + std::to_string(w.strands()) + ", " + to_string(kind) + "]";
    auto record = [&](std::size_t claim, bool ok, const std::string& why = "") {
      out.emplace_back(static_cast<int>(claim), ok ? std::string() : tag + (why.empty() ? "" : ": " + why));
    };
    const PlanarDiagram d = build_closure(w, kind);
    std::optional<GradedComplex> c;
    try {
      c.emplace(d);
      record(5, true);
    } catch (const InternalError& e) {
      record(5, false, e.what());
      return;
    }
    const HomologyTable akh_q = akh(*c, Ring::Q), akh_2 = akh(*c, Ring::F2);
    const HomologyTable kh_q = kh(*c, Ring::Q), kh_2 = kh(*c, Ring::F2), kh_z = kh(*c, Ring::Z);
    const int n = w.strands();

    const std::size_t bound = static_cast<std::size_t>((kind == ClosureKind::Clasp ? 4 : 2) * n);
    record(0, akh_q.total_free_rank() >= bound, "rank " + std::to_string(akh_q.total_free_rank()));

    if (n > 1 && dehornoy_sign(w) != SigmaSign::Trivial) {
      const long long gap = (kind == ClosureKind::Clasp ? 4 : 2) * (n - 1);
      const long long a = static_cast<long long>(akh_2.total_free_rank()), k = static_cast<long long>(kh_2.total_free_rank());
      record(1, k <= a - gap, "kh " + std::to_string(k) + ", akh " + std::to_string(a));
    }

    if (kind == ClosureKind::Braid && dehornoy_sign(w) == SigmaSign::SigmaNegative) {
      const int sl = numeric_invariants(w).self_linking;
      const HomologyTable want = sl2_table({{n, 0, n + sl, 1}, {n - 2, -1, n - 2 + sl, 1}});
      bool ok = true;
      for (const auto& [g, h] : want.entries()) ok = ok && akh_q.at(g).free_rank >= h.free_rank;
      std::size_t bottom = 0;
      for (const auto& [g, h] : akh_q.entries())
        if (g.k == -n) bottom += h.free_rank;
      ok = ok && bottom == 1 && akh_q.at({0, sl, -n}).free_rank == 1;
      record(2, ok);
    }

    record(3, akh_q.euler_characteristic() == annular_jones(d));
    record(4, kh_q.euler_characteristic() == jones(d));

    bool uc = kh_z.total_free_rank() == kh_q.total_free_rank() && akh(*c, Ring::Z).total_free_rank() == akh_q.total_free_rank();
    {
      // an even-order summand recorded at (i, j) adds an F2 class at i and at i+1
      HomologyTable want(Ring::F2, false);
      for (const auto& [g, h] : kh_z.entries()) {
        want.add_free(g, h.free_rank);
        for (const BigInt& t : h.torsion)
          if (t % 2 == 0) {
            want.add_free(g, 1);
            want.add_free({g.i + 1, g.j, 0}, 1);
          }
      }
      uc = uc && want == kh_2;
    }
    record(6, uc);

    if (d.arc_count() > 0) {
      const std::size_t red = reduced_kh(d, Ring::F2).total_free_rank();
      record(7, 2 * red == kh_2.total_free_rank(), "reduced " + std::to_string(red) + ", full " + std::to_string(kh_2.total_free_rank()));
    }

    record(8, kh_q.total_free_rank() <= akh_q.total_free_rank() && kh_2.total_free_rank() <= akh_2.total_free_rank());

    bool character = true;
    try {
      (void)sl2_decompose(akh_q);
    } catch (const InternalError&) {
      character = false;
    }
    record(9, character);
  });

  std::vector<Report> reports;
  std::vector<std::size_t> checked(claims, 0);
  std::vector<std::vector<std::string>> failures(claims);
  for (const auto& o : outcome)
    for (const auto& [claim, failure] : o) {
      ++checked[static_cast<std::size_t>(claim)];
      if (!failure.empty()) failures[static_cast<std::size_t>(claim)].push_back(failure);
    }
  for (std::size_t k = 0; k < claims; ++k) {
    Report rep{std::string(kCorpusClaims[k]),
               {{"b3_max_length", opt.max_length_3}, {"b4_random", opt.random_4}, {"b4_max_length", opt.max_length_4}, {"seed", opt.seed}},
               {{"checked", checked[k]}, {"violations", failures[k].size()}},
               {{"violations", 0}},
               failures[k].empty() && checked[k] > 0,
               ""};
    nlohmann::json sample = nlohmann::json::array();
    for (std::size_t f = 0; f < std::min<std::size_t>(5, failures[k].size()); ++f) {
      sample.push_back(failures[k][f]);
      rep.detail += "  " + failures[k][f] + '\n';
    }
    rep.measured["examples"] = sample;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace clasp
