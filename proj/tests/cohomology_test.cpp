#include <doctest.h>

#include "cubicsurf/catalog.hpp"
#include "cubicsurf/cohomology.hpp"
#include "cubicsurf/divisor.hpp"

using namespace cubicsurf;

namespace {
const DivisorClass H = hyperplane_class();
const DivisorClass L1 = b(1);
}  // namespace

TEST_CASE("Euler characteristics") {
  CHECK(euler_char(DivisorClass()) == 1);
  CHECK(euler_char(2 * L1) == 0);  // (4*(-1) + 2)/2 + 1
  CHECK(euler_char(H) == 4);
  CHECK(euler_char(-H) == 1);
  // chi(M + N - H) = M.N - 1 on catalog pairs
  for (const auto& m : {lines()[0], conics()[5], cubics()[9]})
    for (const auto& n : {lines()[17], conics()[2], cubics()[44]})
      CHECK(euler_char(m + n - H) == dot(m, n) - 1);
}

TEST_CASE("genus") {
  CHECK(genus(H) == 1);
  for (const auto& T : cubics()) CHECK(genus(T) == 0);
  // three pairwise disjoint lines
  const DivisorClass triple = b(1) + b(2) + b(3);
  CHECK(genus(triple) == -2);
}

TEST_CASE("positivity flags") {
  const auto ph = positivity(H);
  CHECK(ph.effective);
  CHECK(ph.nef);
  CHECK(ph.ample);
  const auto pm = positivity(-L1);
  CHECK(!pm.effective);
  CHECK(!pm.nef);
  CHECK(!pm.ample);
  const auto pt = positivity(ell());
  CHECK(pt.effective);
  CHECK(pt.nef);
  CHECK(!pt.ample);  // l meets the exceptional lines in zero
}

TEST_CASE("fixed and moving parts") {
  {
    const auto fm = fixed_moving(2 * L1);
    REQUIRE(fm.has_value());
    CHECK(fm->moving.is_zero());
    CHECK(fm->fixed_lines == std::vector<DivisorClass>{L1, L1});
  }
  {
    const DivisorClass C = ell() - b(2);  // C.L1 = 0
    const auto fm = fixed_moving(C + L1);
    REQUIRE(fm.has_value());
    CHECK(fm->moving == C);
    CHECK(fm->fixed_lines == std::vector<DivisorClass>{L1});
  }
  {
    const auto fm = fixed_moving(H);
    REQUIRE(fm.has_value());
    CHECK(fm->moving == H);
    CHECK(fm->fixed_lines.empty());
  }
  CHECK(!fixed_moving(-H).has_value());
  CHECK(!fixed_moving(b(1) - b(2)).has_value());  // degree 0, nonzero
}

TEST_CASE("h-vectors (frozen values)") {
  CHECK(h_vector(2 * L1) == CohomologyTriple{1, 1, 0});
  CHECK(h_vector(3 * L1) == CohomologyTriple{1, 3, 0});
  CHECK(h_vector(-H) == CohomologyTriple{0, 0, 1});
  CHECK(h_vector(DivisorClass()) == CohomologyTriple{1, 0, 0});
  // C_1 - T^0 = (-4,1,2,2,2,2,2)
  const DivisorClass d = (ell() - b(1)) - DivisorClass(5, -2, -2, -2, -2, -2, -2);
  CHECK(h_vector(d) == CohomologyTriple{0, 2, 0});
}

TEST_CASE("thickened-line identity") {
  for (const auto& L : lines())
    for (int m = 1; m <= 5; ++m)
      CHECK(h_vector(-m * L).h1 == (static_cast<long long>(m) * m + m) / 2 - 1);
}

TEST_CASE("strip order does not change the decomposition") {
  DivisorClass d;
  for (int a0 = -2; a0 <= 2; ++a0)
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int a2 = -2; a2 <= 2; ++a2) {
        d = DivisorClass(a0, a1, a2, a1 - a2, 0, -1, 1);
        const auto lo = fixed_moving(d, StripOrder::lex_smallest);
        const auto hi = fixed_moving(d, StripOrder::lex_largest);
        CHECK(lo.has_value() == hi.has_value());
        if (lo && hi) {
          CHECK(lo->moving == hi->moving);
          CHECK(lo->fixed_lines == hi->fixed_lines);
        }
      }
}

TEST_CASE("small-box consistency sweep") {
  DivisorClass d;
  for (int a0 = -2; a0 <= 2; ++a0)
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int a2 = -2; a2 <= 2; ++a2)
        for (int a3 = -1; a3 <= 1; ++a3) {
          d = DivisorClass(a0, a1, a2, a3, a3, a1, a2);
          const auto hv = h_vector(d);
          CHECK(hv.h0 - hv.h1 + hv.h2 == euler_char(d));
          CHECK(hv.h1 >= 0);
          const auto dual = h_vector(-H - d);
          CHECK(dual.h0 == hv.h2);
          CHECK(dual.h1 == hv.h1);
          CHECK(dual.h2 == hv.h0);
          if (is_nef(d)) CHECK(hv == CohomologyTriple{euler_char(d), 0, 0});
        }
}
