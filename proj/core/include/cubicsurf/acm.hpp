#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubicsurf/catalog.hpp"
#include "cubicsurf/cohomology.hpp"
#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

/// How the first Chern class of a resolution type decomposes into catalog
/// classes.  Verified existentially (W-equivariant), not against fixed
/// representatives.
enum class ChernShape {
  two_h,            // 2H
  h_plus_cubic,     // H + T
  h_conic_line,     // H + C + L, C.L = 0
  h_plus_conic,     // H + C
  h_two_lines,      // H + L1 + L2, L1.L2 = 0
  line,             // L
  h_minus_lines,    // H - L1 - L2, L1.L2 = 0
  h_plus_line,      // H + L
  h,                // H
  conic,            // C
  zero,             // 0
  cubic,            // T
};

/// One of the twelve resolution types of a rank-2 indecomposable aCM bundle,
/// with the twists of its generators/syzygies, Hilbert polynomial
/// p2 t^2 + p1 t + p0, dual type (E* is the dual type twisted by dual_shift)
/// and the normalized Chern data.
struct ResolutionType {
  std::string label;                 // A1..A3, B1, B2, C1, C2, D, E, F, G, H3
  std::vector<int> gen_twists;       // descending
  std::vector<int> syz_twists;       // descending
  std::array<long long, 3> hilbert;  // p2, p1, p0
  std::string dual_label;
  int dual_shift = 0;
  ChernShape shape{};
  long long c1_degree = 0;
  long long c1_square = 0;
  long long c2 = 0;
};

const std::vector<ResolutionType>& resolution_types();
const ResolutionType* find_type(const std::string& label);

/// Does c1 match the symbolic shape (existential search over the catalogs)?
bool matches_shape(ChernShape shape, const DivisorClass& c1);

/// A twist window [t_low, t_high] outside of which h1(D + tH) provably
/// vanishes: above, D + tH is nef; below, Serre duality reduces to the nef
/// case.  Three twists of slack are kept on each side.
std::pair<int, int> acm_window(const DivisorClass& d);

/// h1(D + tH) = 0 for every t in the window (hence for all t).
bool is_acm(const DivisorClass& d);

struct AcmLineBundle {
  DivisorClass cls;
  std::vector<int> gen_twists;  // minimal resolution over P^3, descending
  std::vector<int> syz_twists;
};

/// All normalized aCM line-bundle classes (h0 > 0, h0(D - H) = 0) with their
/// resolution shapes; exactly {0} + lines + conics + cubics, 127 classes.
const std::vector<AcmLineBundle>& acm_line_catalog();

/// Chern classes of E(t): (c1 + 2tH, c2 + t c1.H + 3t^2).
std::pair<DivisorClass, long long> twist_chern(const DivisorClass& c1, long long c2, int t);

/// Classify (c1, c2) against the twelve rows: normalize by the twist landing
/// deg(c1) in [0,6], match the (c1.H, c1^2, c2) triple (the rows are pairwise
/// distinct there), then confirm the symbolic shape.  nullptr when nothing
/// matches.
const ResolutionType* rank2_type(const DivisorClass& c1, long long c2);

/// Same, also reporting the normalization twist that was applied.
std::optional<std::pair<const ResolutionType*, int>> rank2_type_with_twist(const DivisorClass& c1,
                                                                           long long c2);

/// dim Ext^1(N, M(t)) = h1(M - N + tH).
long long ext_dim(const DivisorClass& m, const DivisorClass& n, int t);

struct ExtensionRecord {
  DivisorClass m, n;
  int t = 0;
  long long ext_dim = 0;
  DivisorClass c1;  // M + tH + N
  long long c2 = 0;  // (M + tH).N
  std::string type;  // resolution type label, or "split/none"
  bool simple_sufficient = false;
  bool unobstructed = false;
  std::string stability;  // census-table metadata: u / ss / st / n/a
};

/// Profile of a nonsplit extension of O(N) by O(M + tH).  Throws
/// std::domain_error when ext_dim is zero (no nonsplit extension).
ExtensionRecord extension_profile(const DivisorClass& m, const DivisorClass& n, int t = 0);

/// Coefficients of chi(M + tH) + chi(N + tH).
std::array<long long, 3> hilbert_poly_pair(const DivisorClass& m, const DivisorClass& n);

/// Expected dimension 4 c2 - c1^2 - 3 (from chi(End E) = c1^2 - 4 c2 + 4).
long long expected_moduli_dim(const DivisorClass& c1, long long c2);

/// Necessary-condition filter for destabilizing sub-line-bundles: effective K
/// in the cohomology sweep box with 2 K.H >= (M+N).H and a section of M-K or
/// N-K.  Stability labels themselves are table metadata, not decided here.
std::vector<DivisorClass> slope_filter(const DivisorClass& m, const DivisorClass& n);

/// The twenty (M, N) shapes of nonsplit extensions of aCM line bundles,
/// normalized to t = 0 (bundles may carry a -H twist instead).  Carries the
/// published per-family extension count next to the recomputed ordered
/// count; they differ in two rows (see census published_discrepancies()).
struct SummaryExtensionRow {
  Family m_family{};
  int m_twist = 0;  // M = (class of m_family) + m_twist * H
  Family n_family{};
  int n_twist = 0;
  long long mn = 0;  // M.N with the twists applied
  std::string type;
  long long h1 = 0;  // dim Ext^1(N, M)
  bool simple = false;
  std::string stability;    // u / ss / st
  long long printed_num = 0;   // extensions per family, as published
  long long ordered_num = 0;   // ordered (M, N) pairs per family, recomputed
};

const std::vector<SummaryExtensionRow>& summary_extension_rows();

/// Split d as (catalog family) + twist*H with twist in {0, -1}; nullopt when
/// d is not of that form.
std::optional<std::pair<Family, int>> detect_line_bundle_pattern(const DivisorClass& d);

}  // namespace cubicsurf
