#pragma once

#include <vector>

#include "penner/big_matrix.hpp"
#include "penner/laurent.hpp"

namespace penner {

// Curve system on an oriented surface with algebraic intersection pairing
// and a twist sign per curve; the homological model for plumbed Hopf bands.
struct SignedCurveSystem {
  int n;
  // pairing[i][j] = <c_i, c_j>, antisymmetric.
  std::vector<std::vector<int>> pairing;
  // +1 for a positive Hopf band / positive twist, -1 for negative.
  std::vector<int> signs;
  // Twist word; first-twisted = rightmost matrix factor.
  std::vector<int> order;

  SignedCurveSystem(std::vector<std::vector<int>> pairing_, std::vector<int> signs_,
                    std::vector<int> order_);
};

// Product over the twist order of the transvections
// x -> x + sign_i * <x, c_i> * c_i, in the curve basis.
BigMatrix homology_action(const SignedCurveSystem& sys);

// Orientation double cover model of a cycle: even cycle of length l with
// <c_i, c_{i+1}> = +1 on every cycle edge and twist signs alternating with
// the bipartition (+ on even indices). The word realizes flow difference d.
SignedCurveSystem doubled_cycle_system(int l, int d);

// Doubled enriched cycle: two extra curves attached at the antipodal
// vertices 0 and l/2, opposite twist signs, twisted last.
SignedCurveSystem doubled_enriched_system(int l, int d);

// chi_{d,l}: characteristic polynomial of the homology action of the
// doubled cycle, monic of degree l. Requires l even, 0 <= d <= l-2, d even.
IntPoly cycle_char_poly(int d, int l);

// Enriched variant, degree l+2.
IntPoly enriched_cycle_char_poly(int d, int l);

// (t-1)(t^((l+d)/2) - t^((l-d-2)/2)), the normalized cycle difference
// chi_{d,l} - chi_{d+2,l}.
IntPoly cycle_char_diff_rhs(int d, int l);

// (t-1)^3 (t^((l+d)/2) - t^((l-d-2)/2)), the enriched difference.
IntPoly enriched_diff_identity(int d, int l);

}  // namespace penner
