#pragma once

#include <string_view>
#include <tuple>
#include <vector>

#include "clasp/diagram.hpp"
#include "clasp/laurent.hpp"
#include "clasp/sparse_matrix.hpp"

namespace clasp::fixtures {

/// A transcribed homology table. Bigraded rows read "i j free [torsion...]",
/// annular rows read "i k j multiplicity". '#' starts a comment.
struct TableFixture {
  std::string_view id;
  std::string_view anchor;
  std::string_view braid;
  int index;
  ClosureKind closure;
  Ring ring;
  bool annular;
  std::string_view data;
};

inline const std::vector<TableFixture>& tables() {
  static const std::vector<TableFixture> all = {
      {"L6a2-Kh-Z", "integral Khovanov table of L6a2", "s1 s2^-1", 3, ClosureKind::AugmentedBraid, Ring::Z, false,
       R"(# i j free torsion
 0  -2  1
 0  -4  1
-1  -4  1
-2  -6  1  2
-2  -8  1
-3  -8  1  2
-3 -10  1
-4 -10  1  2
-4 -12  1
-5 -12  0  2
-5 -14  1
-6 -14  1
-6 -16  1
)"},
      {"L9n15-Kh-Z", "integral Khovanov table of L9n15", "s1 s2^3", 3, ClosureKind::AugmentedBraid, Ring::Z, false,
       R"(# i j free torsion
 0  -6  1
 0  -8  1
-2  -8  0  2
-2 -10  1
-4 -12  1
-4 -14  1
-3 -14  1
-6 -16  1
-5 -16  1
-6 -18  1
-5 -18  1
)"},
      {"b-sigma1-AKh-C", "AKh of b(s1): V_3^0{1} + V_1^0{1} + V_1^1{3}", "s1", 3, ClosureKind::Braid, Ring::Q, true,
       R"(# i k j mult
0 -3 -2 1
0 -1  0 2
0  1  2 2
0  3  4 1
1 -1  2 1
1  1  4 1
)"},
      {"b-sigma1inv-sigma2inv-AKh-C", "AKh of b(s1^-1 s2^-1)", "s1^-1 s2^-1", 3, ClosureKind::Braid, Ring::Q, true,
       R"(# i k j mult
 0 -3 -5 1
 0 -1 -3 1
 0  1 -1 1
 0  3  1 1
-1 -1 -5 1
-1  1 -3 1
)"},
      {"b-sigma1inv-AKh-C", "AKh of b(s1^-1)", "s1^-1", 3, ClosureKind::Braid, Ring::Q, true,
       R"(# i k j mult
 0 -3 -4 1
 0 -1 -2 2
 0  1  0 2
 0  3  2 1
-1 -1 -4 1
-1  1 -2 1
)"},
      {"c-sigma-inv-AKh-C", "AKh of c(s1^-1), rank 14", "s1^-1", 3, ClosureKind::Clasp, Ring::Q, true,
       R"(# i k j mult
 0 -3 -5 1
 0 -1 -3 2
 0  1 -1 2
 0  3  1 1
-1 -3 -7 1
-1 -1 -5 2
-1  1 -3 2
-1  3 -1 1
-2 -1 -7 1
-2  1 -5 1
)"},
      {"c-sigma-AKh-C", "AKh of c(s1), rank 18", "s1", 3, ClosureKind::Clasp, Ring::Q, true,
       R"(# i k j mult
 1 -1  1 1
 1  1  3 1
 0 -3 -3 1
 0 -1 -1 3
 0  1  1 3
 0  3  3 1
-1 -3 -5 1
-1 -1 -3 2
-1  1 -1 2
-1  3  1 1
-2 -1 -5 1
-2  1 -3 1
)"},
      {"b-s1inv3-s2-s1inv2-s2inv-AKh-C", "AKh of b(s1^-3 s2 s1^-2 s2^-1)", "s1^-3 s2 s1^-2 s2^-1", 3,
       ClosureKind::Braid, Ring::Q, true,
       R"(# i k j mult
 0 -3  -8 1
 0 -1  -6 1
 0  1  -4 1
 0  3  -2 1
-1 -1  -8 1
-1  1  -6 1
-2 -1  -8 2
-2  1  -6 2
-3 -1 -10 1
-3  1  -8 1
-4 -1 -12 1
-4  1 -10 1
-5 -1 -14 1
-5  1 -12 1
)"},
      {"b-s1inv3-s2-s1inv2-AKh-C", "AKh of b(s1^-3 s2 s1^-2)", "s1^-3 s2 s1^-2", 3, ClosureKind::Braid, Ring::Q, true,
       R"(# i k j mult
 1 -1  -5 1
 1  1  -3 1
 0 -3  -7 1
 0 -1  -5 2
 0  1  -3 2
 0  3  -1 1
-1 -1  -7 1
-1  1  -5 1
-2 -1  -9 1
-2  1  -7 1
-3 -1 -11 1
-3  1  -9 1
-4 -1 -13 1
-4  1 -11 1
-5 -1 -15 1
-5  1 -13 1
)"},
  };
  return all;
}

/// Annular Jones polynomial stated for the clasp-type link built on
/// s1^-3 s2 s1^-2, with the (i, j) support of its k = 3 part.
inline constexpr std::string_view kPartialBraid = "s1^-3 s2 s1^-2";
inline LaurentPoly partial_polynomial() {
  LaurentPoly p;
  for (auto [t, q, c] : {std::tuple{-3, 1, -1}, {-3, -1, 1}, {-1, 3, -1}, {-1, 1, 2}, {1, 5, -1}, {1, 3, 2}, {3, 7, -1}, {3, 5, 1}})
    p.add_term(t, q, c);
  return p;
}
inline const std::vector<std::pair<int, int>> kPartialTopRows = {{3, 7}, {2, 5}};

/// Alexander polynomials of augmented clasp closures, as an unordered pair
/// {one axis orientation, the other}.
struct AlexanderFixture {
  std::string_view braid;
  std::string_view first;
  std::string_view second;
};

inline const std::vector<AlexanderFixture>& alexander() {
  static const std::vector<AlexanderFixture> all = {
      {"s1^-1", "2 - 5*t + 5*t^2 - 2*t^3", "1 - 3*t + 3*t^2 - 3*t^3 + 3*t^4 - t^5"},
      {"s2^-1 s1 s2", "2 - 7*t + 7*t^2 - 2*t^3", "1 - 3*t + 5*t^2 - 5*t^3 + 3*t^4 - t^5"},
  };
  return all;
}

}  // namespace clasp::fixtures
