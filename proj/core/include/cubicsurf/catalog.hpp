#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

enum class Family { line, conic, cubic, root, exceptional, none };

std::string family_name(Family f);

/// The classical names for lines, conics and twisted cubics:
///   L_i = b_i                L_{i,j} = l - b_i - b_j       L^j = 2l - sum_{i != j} b_i
///   C_i = l - b_i            C^{i,j} = 2l - sum_{k != i,j} b_k
///   C^j = 3l - sum_{i != j} b_i - 2 b_j
///   T_0 = l                  T_{i,j,k} = 2l - b_i - b_j - b_k
///   T_i^j = 3l - 2 b_i - sum_{k != i,j} b_k
///   T^{i,j,k} = 4l - b_i - b_j - b_k - 2 sum_{l != i,j,k} b_l
///   T^0 = 5l - 2 sum b_i
enum class NamedFamily {
  L_i,       // one index
  L_ij,      // two indices
  L_up,      // one index (superscript)
  C_i,       // one index
  C_up_ij,   // two indices (superscript pair)
  C_up,      // one index (superscript)
  T_0,       // no index
  T_ijk,     // three indices
  T_i_up_j,  // ordered pair (subscript, superscript), distinct
  T_up_ijk,  // three indices (superscript)
  T_up_0,    // no index
};

struct NamedClassLabel {
  NamedFamily family{};
  std::array<int, 3> idx{};  // first arity() entries used; unordered sets kept sorted

  int arity() const;
  /// CLI spelling, e.g. "L[1,2]", "C^[3]", "T[1|2]", "T^[]".
  std::string str() const;
};

/// Coordinate vector of a named class.  Throws std::invalid_argument when the
/// indices are out of 1..6, repeated, or of the wrong arity.
DivisorClass named_class(const NamedClassLabel& label);

/// Inverse of named_class on the 27+27+72 named classes; nullopt elsewhere.
std::optional<NamedClassLabel> label_of(const DivisorClass& d);

/// Six mutually orthogonal exceptional (line) classes.
struct Sixer {
  std::array<DivisorClass, 6> members{};  // kept sorted

  void normalize();
  bool valid() const;
  friend bool operator==(const Sixer&, const Sixer&) = default;
  friend auto operator<=>(const Sixer&, const Sixer&) = default;
};

/// Complete enumerations.  Computed once by bounded brute-force scans over
/// the defining invariants (Cauchy-Schwarz against H bounds every
/// coordinate), then cached; all vectors are sorted.
const std::vector<DivisorClass>& lines();        // v.v = -1, v.H = 1   (27)
const std::vector<DivisorClass>& conics();       // v.v =  0, v.H = 2   (27)
const std::vector<DivisorClass>& cubics();       // v.v =  1, v.H = 3   (72)
const std::vector<DivisorClass>& roots();        // v.v = -2, v.H = 0   (72)
const std::vector<DivisorClass>& exceptional_vectors();  // same classes as lines()
const std::vector<Sixer>& sixers();              // 72

bool is_line(const DivisorClass& d);
bool is_conic(const DivisorClass& d);
bool is_cubic(const DivisorClass& d);
bool is_root(const DivisorClass& d);

/// Classes of smooth irreducible rational curves of degree d: D.H = d,
/// D.D = d-2, and for d >= 3 the integral-curve test D.D > 0, D.L >= 0
/// against all 27 lines.  d in 1..8.  The scan runs over
/// a0 in [ceil(d/3), a0_cap] (default cap 2d) with 0 <= m_i <= a0 in the
/// a0*l - sum m_i b_i convention; a0_cap is exposed so tests can confirm the
/// default bound loses nothing.
std::vector<DivisorClass> rational_classes(int d);
std::vector<DivisorClass> rational_classes(int d, int a0_cap);

/// Membership by invariant test, cross-checked against the enumerated sets.
/// Exceptional vectors coincide with line classes, so `line` is reported.
Family classify_membership(const DivisorClass& d);

/// rho on lines/conics (D -> H - D) and tau on cubics (D -> 2H - D).
/// Throws std::domain_error when d is in none of the three families.
DivisorClass companion(const DivisorClass& d);

}  // namespace cubicsurf
