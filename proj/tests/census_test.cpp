#include <doctest.h>

#include <map>

#include "cubicsurf/census.hpp"
#include "cubicsurf/divisor.hpp"

using namespace cubicsurf;

TEST_CASE("intersection distributions against the standard representatives") {
  using Dist = std::map<long long, long long>;
  CHECK(intersection_distribution(b(1), Family::cubic) == Dist{{0, 16}, {1, 40}, {2, 16}});
  CHECK(intersection_distribution(ell(), Family::cubic) ==
        Dist{{1, 1}, {2, 20}, {3, 30}, {4, 20}, {5, 1}});
  CHECK(intersection_distribution(b(1), Family::line) == Dist{{-1, 1}, {0, 16}, {1, 10}});
  CHECK(intersection_distribution(ell() - b(1), Family::conic) == Dist{{0, 1}, {1, 16}, {2, 10}});
  CHECK_THROWS_AS(intersection_distribution(hyperplane_class(), Family::line), std::domain_error);
}

TEST_CASE("distributions are orbit-independent") {
  for (const auto& T : {cubics()[0], cubics()[31], cubics()[71]})
    CHECK(intersection_distribution(T, Family::cubic) ==
          intersection_distribution(ell(), Family::cubic));
}

TEST_CASE("fiber checks") {
  {
    const auto rep = fiber_check("tc1-line");
    CHECK(rep.domain_size == 432);
    CHECK(rep.codomain_size == 27);
    CHECK(rep.fiber == 16);
    CHECK(rep.constant_fiber);
    CHECK(rep.surjective);
  }
  {
    const auto rep = fiber_check("tt4-cubic");
    CHECK(rep.domain_size == 720);
    CHECK(rep.fiber == 10);
    CHECK(rep.constant_fiber);
  }
  {
    const auto rep = fiber_check("threelines-cubicpair");
    CHECK(rep.domain_size == 720);
    CHECK(rep.codomain_size == 720);
    CHECK(rep.fiber == 1);
    CHECK(rep.surjective);
  }
  {
    // published as 8:1, recomputed 5:1 over the 27 lines
    const auto rep = fiber_check("cc2-line");
    CHECK(rep.domain_size == 135);
    CHECK(rep.codomain_size == 27);
    CHECK(rep.fiber == 5);
  }
  CHECK(registered_map_ids().size() == 12);
  CHECK_THROWS_AS(fiber_check("no-such-map"), std::domain_error);
}

TEST_CASE("family census counts") {
  const auto recs = family_census();
  REQUIRE(recs.size() == 12);
  const long long expected[12] = {1, 72, 270, 27, 216, 27, 216, 27, 1, 27, 1, 72};
  for (std::size_t i = 0; i < 12; ++i) CHECK(recs[i].family_count == expected[i]);
  // every record carries its extension rows
  std::size_t rows = 0;
  for (const auto& r : recs) rows += r.extensions.size();
  CHECK(rows == 20);
}

TEST_CASE("single checks can be run in isolation") {
  VerifyOptions opts;
  opts.only_check = "enum-counts";
  const auto rep = verify_all(opts);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
}

TEST_CASE("corrupted Gram matrix is caught") {
  VerifyOptions opts;
  opts.form.gram[3][3] = 1;
  opts.only_check = "lattice-gram-diagonal";
  const auto rep = verify_all(opts);
  REQUIRE(rep.checks.size() == 1);
  CHECK(!rep.checks[0].pass);

  opts.only_check = "enum-lines-bruteforce";
  const auto rep2 = verify_all(opts);
  REQUIRE(rep2.checks.size() == 1);
  CHECK(!rep2.checks[0].pass);
}

TEST_CASE("known discrepancy registry") {
  const auto& d = published_discrepancies();
  CHECK(d.size() == 13);
  bool has_map = false, has_a3 = false;
  for (const auto& e : d) {
    if (e.id == "map-cc2-fiber") {
      has_map = true;
      CHECK(e.printed == "8");
      CHECK(e.computed == "5");
    }
    if (e.id == "census-A3-extensions") {
      has_a3 = true;
      CHECK(e.printed == "4");
      CHECK(e.computed == "8");
    }
  }
  CHECK(has_map);
  CHECK(has_a3);
}
