#include "torbiv/orbits.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace torbiv {

OrbitRef make_orbit(const Fan &f, std::vector<std::size_t> rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.size() > f.dim())
    throw Error(ErrorCode::ConeNotInFan, "more rays than the dimension");
  const std::size_t dim = f.dim() - rays.size();
  return {std::move(rays), dim};
}

std::string to_string(const OrbitRef &t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.cone.size(); ++i)
    os << (i ? "," : "") << t.cone[i];
  os << '}';
  return os.str();
}

namespace {

bool contains_all(const std::vector<std::size_t> &max_cone,
                  const std::vector<std::size_t> &rays) {
  return std::all_of(rays.begin(), rays.end(), [&](std::size_t r) {
    return std::find(max_cone.begin(), max_cone.end(), r) != max_cone.end();
  });
}

} // namespace

std::vector<OrbitRef> enumerate_cones(const Fan &f) {
  std::set<std::vector<std::size_t>> seen;
  for (const auto &cone : f.max_cones()) {
    const std::size_t d = cone.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (std::size_t{1} << i))
          face.push_back(cone[i]);
      std::sort(face.begin(), face.end());
      seen.insert(std::move(face));
    }
  }
  std::vector<OrbitRef> out;
  out.reserve(seen.size());
  for (const auto &face : seen)
    out.push_back({face, f.dim() - face.size()});
  std::stable_sort(out.begin(), out.end(), [](const OrbitRef &a, const OrbitRef &b) {
    return a.cone.size() < b.cone.size();
  });
  return out;
}

std::vector<std::size_t> containing_charts(const OrbitRef &t, const Fan &f) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < f.num_max_cones(); ++k)
    if (contains_all(f.max_cones()[k], t.cone))
      out.push_back(k);
  return out;
}

bool is_cone_of(const OrbitRef &t, const Fan &f) {
  return !containing_charts(t, f).empty();
}

ChartOrbit orbit_in_chart(const OrbitRef &t, const Fan &f, std::size_t k) {
  if (k >= f.num_max_cones() || !contains_all(f.max_cones()[k], t.cone))
    throw Error(ErrorCode::NoContainingMaxCone,
                "maximal cone " + std::to_string(k) + " does not contain " +
                    to_string(t));
  const auto &gens = f.max_cones()[k];
  ChartOrbit co{k, f.dim(), {}};
  for (std::size_t pos = 0; pos < gens.size(); ++pos)
    if (std::binary_search(t.cone.begin(), t.cone.end(), gens[pos]))
      co.vanishing.push_back(pos);
  return co;
}

ChartOrbit orbit_in_chart(const OrbitRef &t, const Fan &f) {
  const std::vector<std::size_t> charts = containing_charts(t, f);
  if (charts.empty())
    throw Error(ErrorCode::NoContainingMaxCone,
                "no maximal cone contains " + to_string(t));
  return orbit_in_chart(t, f, charts.front());
}

std::vector<OrbitRef> closure_cones(const OrbitRef &t, const Fan &f) {
  std::vector<OrbitRef> out;
  for (const OrbitRef &s : enumerate_cones(f))
    if (std::includes(s.cone.begin(), s.cone.end(), t.cone.begin(), t.cone.end()))
      out.push_back(s);
  return out;
}

std::vector<Rational> sample_orbit_point(const ChartOrbit &co, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> z(co.ambient_dim, Rational(0));
  for (std::size_t i = 0; i < co.ambient_dim; ++i) {
    // modular reduction keeps the stream identical across standard libraries
    const long num = static_cast<long>(rng() % 97) + 1;
    const long den = static_cast<long>(rng() % 97) + 1;
    const bool negative = rng() & 1;
    if (std::binary_search(co.vanishing.begin(), co.vanishing.end(), i))
      continue;
    z[i] = Rational(negative ? -num : num, den);
    z[i].canonicalize();
  }
  return z;
}

} // namespace torbiv
