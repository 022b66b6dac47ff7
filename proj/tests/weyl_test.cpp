#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "cubicsurf/catalog.hpp"
#include "cubicsurf/weyl.hpp"

using namespace cubicsurf;

TEST_CASE("reflections") {
  CHECK(reflect(b(1) - b(2), b(1)) == b(2));
  CHECK(reflect(DivisorClass(1, -1, -1, -1, 0, 0, 0), ell()) ==
        DivisorClass(2, -1, -1, -1, 0, 0, 0));
  const auto K = canonical_class();
  for (const auto& alpha : simple_roots()) CHECK(reflect(alpha, K) == K);
  CHECK_THROWS_AS(reflect(b(1), b(2)), std::domain_error);  // b1 is not a root
}

TEST_CASE("group closure") {
  const auto& g = weyl_group();
  CHECK(g.size() == 51840);
  CHECK(std::find(g.begin(), g.end(), WeylElement::identity()) != g.end());
  const auto H = hyperplane_class();
  const auto form = IntersectionForm::standard();
  for (std::size_t i = 0; i < g.size(); i += 997) {
    CHECK(g[i].apply(H) == H);
    CHECK(g[i].preserves(form));
  }
}

TEST_CASE("orbits") {
  CHECK(orbit(b(1)) == lines());
  CHECK(orbit(b(1) - b(2)) == roots());
  CHECK(orbit(ell()) == cubics());
  CHECK(orbit(ell() - b(1)) == conics());
  const auto H = hyperplane_class();
  const auto horb = orbit(H);
  CHECK(horb.size() == 1);
  CHECK(horb[0] == H);
}

TEST_CASE("sixer to root") {
  Sixer std_sixer;
  for (int i = 1; i <= 6; ++i) std_sixer.members[static_cast<std::size_t>(i - 1)] = b(i);
  std_sixer.normalize();
  CHECK(sixer_root(std_sixer) == DivisorClass(-2, 1, 1, 1, 1, 1, 1));

  // oracle: of the two quotients (-2k +/- sum)/3 exactly one is an integral
  // root, and the implementation returns it
  const auto kappa = hyperplane_class();
  std::set<DivisorClass> image;
  for (const auto& s : sixers()) {
    DivisorClass sum;
    for (const auto& v : s.members) sum += v;
    int integral = 0;
    DivisorClass winner;
    for (int sign : {1, -1}) {
      const DivisorClass num = -2 * kappa + sign * sum;
      bool ok = true;
      DivisorClass w;
      for (std::size_t i = 0; i < 7; ++i) {
        if (num.c[i] % 3 != 0) ok = false;
        w.c[i] = num.c[i] / 3;
      }
      if (ok && is_root(w)) {
        ++integral;
        winner = w;
      }
    }
    CHECK(integral == 1);
    CHECK(sixer_root(s) == winner);
    image.insert(winner);
  }
  CHECK(image.size() == 72);  // bijection onto the roots
}

TEST_CASE("sixer_root is equivariant on samples") {
  const auto& sx = sixers();
  for (std::size_t i = 0; i < sx.size(); i += 17)
    for (const auto& alpha : simple_roots()) {
      Sixer moved;
      for (std::size_t k = 0; k < 6; ++k) moved.members[k] = reflect(alpha, sx[i].members[k]);
      moved.normalize();
      CHECK(sixer_root(moved) == reflect(alpha, sixer_root(sx[i])));
    }
}

TEST_CASE("stabilizer index is integral") {
  for (std::size_t n : {lines().size(), conics().size(), cubics().size(), roots().size()})
    CHECK(51840 % n == 0);
}

TEST_CASE("group cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cubicsurf-cache-test";
  fs::create_directories(dir);
  const std::string path = (dir / "weyl-e6-closure-v1.bin").string();

  REQUIRE(store_group_cache_file(path, weyl_group()));
  const auto loaded = load_group_cache_file(path);
  REQUIRE(loaded.size() == 51840);
  CHECK(loaded == weyl_group());

  // a truncated or scribbled-on file is rejected, not trusted
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "CSWE6v1\n";
  }
  CHECK(load_group_cache_file(path).empty());
  std::ofstream(path, std::ios::trunc) << "not a cache";
  CHECK(load_group_cache_file(path).empty());
  CHECK(load_group_cache_file((dir / "missing.bin").string()).empty());
  fs::remove_all(dir);
}
