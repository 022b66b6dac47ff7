#pragma once

#include <optional>
#include <vector>

#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

/// (h0, h1, h2) of a line bundle, tied together by Riemann-Roch
/// (h0 - h1 + h2 = chi) and Serre duality (h2(D) = h0(-H-D)).
struct CohomologyTriple {
  long long h0 = 0, h1 = 0, h2 = 0;
  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
};

/// D = moving + sum(fixed_lines); moving is nef and meets none of the fixed
/// lines (B.M = 0).
struct FixedMoving {
  DivisorClass moving;
  std::vector<DivisorClass> fixed_lines;  // with multiplicity, sorted
};

struct Positivity {
  bool effective = false, nef = false, ample = false;
};

enum class StripOrder { lex_smallest, lex_largest };

/// chi(D) = (D.D + D.H)/2 + 1 (Riemann-Roch with K = -H); the numerator is
/// always even on this lattice.
long long euler_char(const DivisorClass& d);

/// Adjunction: (D.D - D.H)/2 + 1.
long long genus(const DivisorClass& d);

/// nef <=> D.L >= 0 against all 27 lines.
bool is_nef(const DivisorClass& d);

/// ample <=> D.D > 0 and D.L > 0 against all lines; effective via the
/// fixed/moving stripping below.
Positivity positivity(const DivisorClass& d);

/// Iterative base-locus stripping: while some line L has D.L < 0, move L to
/// the fixed part.  Returns nullopt when the degree drops below zero, which
/// happens exactly when D is not effective.  The decomposition itself is
/// order-independent; the strip order picks which equal copy goes first.
std::optional<FixedMoving> fixed_moving(const DivisorClass& d,
                                        StripOrder order = StripOrder::lex_smallest);

/// h0(D) = chi(moving part) when D is effective, else 0.
long long h0(const DivisorClass& d);

/// h0 via stripping, h2 = h0(-H-D) by Serre duality, h1 = h0 + h2 - chi.
/// Throws std::logic_error if that h1 would be negative.
CohomologyTriple h_vector(const DivisorClass& d);

}  // namespace cubicsurf
