// Prints one PASS/FAIL line per acceptance criterion. Known deviations are
// reported as FAIL but do not change the exit status; anything else does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "clasp/clasp.hpp"
#include "oracles/dynnikov.hpp"

using namespace clasp;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

int unexpected = 0;

void criterion(int id, const char* title, bool known_deviation, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string status = o.pass ? "PASS" : (known_deviation ? "FAIL (known deviation)" : "FAIL");
  if (!o.pass && !known_deviation) ++unexpected;
  char time[32];
  std::snprintf(time, sizeof time, "%.1fs", secs);
  std::cout << "criterion " << id << ": " << status << "  " << title << "  [" << time << "]";
  if (!o.note.empty()) std::cout << "  " << o.note;
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome o{true, ""};
  for (const Report& r : reports) {
    if (r.pass) continue;
    o.pass = false;
    o.note += "\n    " + r.claim + " failed\n" + r.detail;
  }
  return o;
}

BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), sign(0, 1);
  std::vector<Letter> l(static_cast<std::size_t>(len(rng)));
  for (Letter& x : l) x = {gen(rng), sign(rng) ? 1 : -1};
  return BraidWord(n, l);
}

}  // namespace

int main() {
  criterion(1, "Kh(L6a2; Z) table, runtime < 30 s", false, [] {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = from_reports({check_table("L6a2-Kh-Z")});
    const double s = seconds_since(t0);
    if (s >= 30) o = {false, "took " + std::to_string(s) + " s"};
    return o;
  });

  criterion(2, "Kh(L9n15; Z) table and F2 rank 12, runtime < 60 s", true, [] {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = from_reports({check_table("L9n15-Kh-Z")});
    const std::size_t f2 = kh(build_closure(parse_braid("s1 s2^3", 3), ClosureKind::AugmentedBraid), Ring::F2).total_free_rank();
    const double s = seconds_since(t0);
    o.note = "F2 rank " + std::to_string(f2) + (f2 == 12 ? " (ok)" : " (expected 12)") + o.note;
    // diagnostic only: the transcribed free part against the mirror closure
    for (const auto& f : fixtures::tables())
      if (f.id == "L9n15-Kh-Z") {
        const HomologyTable want = detail::parse_fixture_table(f).free_part_bigraded();
        const HomologyTable mirror_kh =
            kh(build_closure(parse_braid("s1^-1 s2^-3", 3), ClosureKind::AugmentedBraid), Ring::Z);
        o.note += std::string("    free part of the mirror closure s1^-1 s2^-3 ") +
                  (mirror_kh.free_part_bigraded() == want ? "matches" : "differs") + "; its Z/2 sits at";
        for (const auto& [g, h] : mirror_kh.entries())
          if (!h.torsion.empty()) o.note += " (" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
        o.note += "\n";
      }
    if (f2 != 12 || s >= 60) o.pass = false;
    return o;
  });

  criterion(3, "Kh(L6a2; F2) rank 20, reduced rank 10", false, [] {
    const PlanarDiagram d = build_closure(parse_braid("s1 s2^-1", 3), ClosureKind::AugmentedBraid);
    const std::size_t full = kh(d, Ring::F2).total_free_rank();
    bool ok = full == 20;
    std::string note = "full " + std::to_string(full) + ", reduced";
    for (int arc = 0; arc < d.arc_count(); ++arc) {
      const std::size_t red = reduced_kh(d, Ring::F2, arc).total_free_rank();
      ok = ok && red == 10;
      if (arc == 0 || red != 10) note += " " + std::to_string(red);
    }
    return Outcome{ok, note + " (corpus halving is part of criterion 10)"};
  });

  criterion(4, "AKh tables of c(s1^-1), c(s1), b(s1) and b(s1 s2^n)", false, [] {
    return from_reports({check_table("c-sigma-inv-AKh-C"), check_table("c-sigma-AKh-C"), check_table("b-sigma1-AKh-C"),
                         check_table(kClosedFormFixture)});
  });

  criterion(5, "annular Jones of s1^-3 s2 s1^-2, k = +-3 rows, J(S)", true, [] {
    return from_reports({check_table(kPartialFixture), check_table(kJSFixture)});
  });

  criterion(6, "skein recursion and closed form, n = 1..5", false,
            [] { return from_reports({check_skein_recursion(1, 5)}); });

  std::vector<Report> corpus;
  double corpus_secs = 0;
  {
    const auto t0 = std::chrono::steady_clock::now();
    corpus = check_corpus();
    corpus_secs = seconds_since(t0);
  }
  auto pick = [&](std::initializer_list<const char*> claims) {
    std::vector<Report> out;
    for (const char* c : claims)
      for (const Report& r : corpus)
        if (r.claim == c) out.push_back(r);
    return out;
  };
  auto counts = [](const std::vector<Report>& rs) {
    std::string s;
    for (const Report& r : rs)
      s += (s.empty() ? "" : ", ") + r.claim + " " + r.measured["checked"].dump() + " checked";
    return s;
  };

  criterion(7, "rank bound on the corpus, suite < 10 min", false, [&] {
    const auto rs = pick({"corpus-rank-bound"});
    Outcome o = from_reports(rs);
    o.note = counts(rs) + ", corpus " + std::to_string(static_cast<int>(corpus_secs)) + " s" + o.note;
    if (corpus_secs >= 600) o.pass = false;
    return o;
  });
  criterion(8, "sigma-negative structure on the corpus", false, [&] {
    const auto rs = pick({"corpus-sigma-negative"});
    Outcome o = from_reports(rs);
    o.note = counts(rs) + o.note;
    return o;
  });
  criterion(9, "mod 2 gap on the corpus", false, [&] {
    const auto rs = pick({"corpus-kh-akh-gap"});
    Outcome o = from_reports(rs);
    o.note = counts(rs) + o.note;
    return o;
  });
  criterion(10, "Euler characteristics, d^2 = 0, coefficients, halving on the corpus", false, [&] {
    const auto rs = pick({"corpus-euler-akh", "corpus-euler-kh", "corpus-d-squared", "corpus-universal-coefficients",
                          "corpus-shumakovitch"});
    Outcome o = from_reports(rs);
    o.note = counts(rs) + o.note;
    return o;
  });

  criterion(11, "Alexander polynomials up to units, unknot", false,
            [] { return from_reports({check_table(kAlexanderFixture)}); });

  criterion(12, "Dehornoy sign against Dynnikov coordinates; w w^-1 trivial", false, [] {
    std::mt19937_64 rng(12);
    std::size_t agree = 0, total = 0, trivial = 0;
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k < 400; ++k, ++total) {
        const BraidWord w = random_word(rng, n, 10);
        if (dehornoy_sign(w) == oracle::dynnikov_sign(w)) ++agree;
      }
    for (int k = 0; k < 1000; ++k) {
      const BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 3), 10);
      if (dehornoy_sign(w * inverse(w)) == SigmaSign::Trivial) ++trivial;
    }
    return Outcome{agree == total && trivial == 1000,
                   std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(trivial) + "/1000 trivial"};
  });

  return unexpected == 0 ? 0 : 1;
}
