#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "torbiv/orbits.hpp"

using namespace torbiv;
using namespace torbiv::testing;

namespace {

using Index = std::vector<std::size_t>;

// Every subset of every maximal cone, deduplicated.
std::set<Index> powerset_oracle(const Fan &f) {
  std::set<Index> out;
  for (const auto &mc : f.max_cones()) {
    Index sorted = mc;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t mask = 0; mask < (std::size_t{1} << sorted.size()); ++mask) {
      Index sub;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (mask >> i & 1)
          sub.push_back(sorted[i]);
      out.insert(sub);
    }
  }
  return out;
}

bool subset(const Index &a, const Index &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("enumerate cones examples") {
  const auto p2 = enumerate_cones(builtin_fan("projective_space", {2}));
  REQUIRE(p2.size() == 7);
  CHECK(p2[0].cone.empty());
  CHECK(p2[0].dim == 2);
  CHECK(std::count_if(p2.begin(), p2.end(), [](const OrbitRef &t) { return t.cone.size() == 1; }) == 3);
  CHECK(std::count_if(p2.begin(), p2.end(), [](const OrbitRef &t) { return t.cone.size() == 2; }) == 3);

  for (long n = 1; n <= 5; ++n)
    CHECK(enumerate_cones(builtin_fan("affine_space", {n})).size() == std::size_t{1} << n);
  CHECK(enumerate_cones(builtin_fan("product_p1_p1", {})).size() == 9);
  CHECK(to_string(p2[4]) == "{0,1}");
}

TEST_CASE("orbit in chart examples") {
  const Fan p2 = builtin_fan("projective_space", {2});
  const ChartOrbit ray = orbit_in_chart(make_orbit(p2, {0}), p2);
  CHECK(ray.max_cone == 0);
  CHECK(ray.vanishing == Index{0});
  CHECK(orbit_in_chart(make_orbit(p2, {}), p2).vanishing.empty());
  CHECK(orbit_in_chart(make_orbit(p2, {1, 2}), p2).vanishing == Index{0, 1});

  // ray e2 seen from the chart of cone(e2, -e1-e2): first coordinate
  REQUIRE(p2.max_cones()[2] == Index{1, 2});
  CHECK(orbit_in_chart(make_orbit(p2, {1}), p2, 2).vanishing == Index{0});
  // ray -e1-e2 in the same chart: second coordinate
  CHECK(orbit_in_chart(make_orbit(p2, {2}), p2, 2).vanishing == Index{1});

  CHECK(containing_charts(make_orbit(p2, {1}), p2) == Index{0, 2});
  CHECK_THROWS_AS(orbit_in_chart(OrbitRef{{0, 1, 2}, 0}, p2), Error);
  CHECK_THROWS_AS(orbit_in_chart(make_orbit(p2, {0}), p2, 2), Error);
  CHECK_FALSE(is_cone_of(OrbitRef{{0, 1, 2}, 0}, p2));
}

TEST_CASE("closure examples") {
  const Fan p2 = builtin_fan("projective_space", {2});
  CHECK(closure_cones(make_orbit(p2, {}), p2).size() == 7);
  const auto c = closure_cones(make_orbit(p2, {0}), p2);
  std::set<Index> got;
  for (const auto &t : c)
    got.insert(t.cone);
  CHECK(got == std::set<Index>{{0}, {0, 1}, {0, 2}});
  const auto fixed = closure_cones(make_orbit(p2, {0, 2}), p2);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0].cone == Index{0, 2});
}

TEST_CASE("sample orbit point") {
  const ChartOrbit co{0, 3, {0, 1}};
  const auto z = sample_orbit_point(co, 1);
  REQUIRE(z.size() == 3);
  CHECK(z[0] == 0);
  CHECK(z[1] == 0);
  CHECK(z[2] != 0);
  CHECK(z == sample_orbit_point(co, 1));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto w = sample_orbit_point(ChartOrbit{0, 4, {}}, seed);
    for (const auto &x : w) {
      CHECK(x != 0);
      CHECK(abs(x.get_num()) <= 97);
      CHECK(x.get_den() <= 97);
    }
  }
}

TEST_CASE("property: orbit-cone correspondence on the gallery") {
  for (const Fan &f : sweep_gallery()) {
    INFO(f.name());
    const auto cones = enumerate_cones(f);
    std::set<Index> got;
    for (const auto &t : cones) {
      got.insert(t.cone);
      CHECK(t.dim + t.cone.size() == f.dim());
      for (std::size_t k : containing_charts(t, f)) {
        Index mc = f.max_cones()[k];
        std::sort(mc.begin(), mc.end());
        CHECK(subset(t.cone, mc));
        CHECK(orbit_in_chart(t, f, k).vanishing.size() == t.cone.size());
      }
      // closure is upward closed and consists of the cones containing t
      const auto closure = closure_cones(t, f);
      std::set<Index> cl;
      for (const auto &s : closure)
        cl.insert(s.cone);
      for (const auto &s : cones)
        CHECK(cl.count(s.cone) == (subset(t.cone, s.cone) ? 1u : 0u));
      for (const auto &s : closure)
        for (const auto &u : cones)
          if (subset(s.cone, u.cone))
            CHECK(cl.count(u.cone) == 1);
    }
    CHECK(got == powerset_oracle(f));
    CHECK(got.size() == cones.size());

    if (is_complete(f)) {
      CHECK(std::count_if(cones.begin(), cones.end(),
                          [&](const OrbitRef &t) { return t.dim == f.dim(); }) == 1);
      CHECK(static_cast<std::size_t>(std::count_if(cones.begin(), cones.end(), [](const OrbitRef &t) {
              return t.dim == 0;
            })) == f.num_max_cones());
    }
  }
}
