#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torbiv/toric_fans.hpp"

namespace torbiv {

/// Torus orbit O(tau), identified with the cone tau as a sorted set of global
/// ray indices. dim = n - |tau| (smooth cones are simplicial).
struct OrbitRef {
  std::vector<std::size_t> cone;
  std::size_t dim = 0;

  friend bool operator==(const OrbitRef &, const OrbitRef &) = default;
  friend auto operator<=>(const OrbitRef &, const OrbitRef &) = default;
};

OrbitRef make_orbit(const Fan &f, std::vector<std::size_t> rays);
std::string to_string(const OrbitRef &t);

/// The orbit seen in the chart of one maximal cone: the points whose
/// coordinates at `vanishing` are zero and nonzero elsewhere.
/// Coordinate indices are 0-based positions in the maximal cone's generator
/// list.
struct ChartOrbit {
  std::size_t max_cone = 0;
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> vanishing;
};

/// Every cone of the fan (every face of every maximal cone), deduplicated,
/// ordered by size and then lexicographically. Starts with {0}.
std::vector<OrbitRef> enumerate_cones(const Fan &f);

/// Maximal cones containing tau, in fan order.
std::vector<std::size_t> containing_charts(const OrbitRef &t, const Fan &f);

bool is_cone_of(const OrbitRef &t, const Fan &f);

/// View of tau in the first maximal cone containing it.
/// Throws NoContainingMaxCone.
ChartOrbit orbit_in_chart(const OrbitRef &t, const Fan &f);
/// View of tau in the chart of maximal cone k (which must contain tau).
ChartOrbit orbit_in_chart(const OrbitRef &t, const Fan &f, std::size_t k);

/// Cones sigma of the fan with tau <= sigma: the orbits making up the closure
/// of O(tau).
std::vector<OrbitRef> closure_cones(const OrbitRef &t, const Fan &f);

/// Deterministic point of the orbit in chart coordinates: zero on the
/// vanishing set, small nonzero rationals elsewhere.
std::vector<Rational> sample_orbit_point(const ChartOrbit &co, std::uint64_t seed);

} // namespace torbiv
