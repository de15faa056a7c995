#include "torbiv/degeneracy.hpp"

#include <algorithm>

namespace torbiv {

std::size_t rank_in_chart(const ChartPresentation &cp,
                          const std::vector<std::size_t> &vanishing) {
  const std::size_t n = cp.dim();
  std::vector<bool> in_v(n, false);
  std::vector<std::size_t> minus_one;
  for (std::size_t h : vanishing) {
    in_v.at(h) = true;
    // a positive exponent on a vanishing coordinate kills every entry
    if (cp.beta[h] >= 1)
      return 0;
    if (cp.beta[h] == -1)
      minus_one.push_back(h);
  }
  // An entry (i, j) survives on the orbit iff b_ij != 0 and its exponent is 0
  // at every vanishing coordinate: i, j must cover the beta = -1 coordinates
  // and avoid the beta = 0 ones.
  switch (minus_one.size()) {
  case 0: {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_v[i])
        keep.push_back(i);
    RatMatrix sub(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c)
        sub(r, c) = cp.b(keep[r], keep[c]);
    return rational_rank(sub);
  }
  case 1: {
    const std::size_t p = minus_one.front();
    for (std::size_t j = 0; j < n; ++j)
      if (!in_v[j] && cp.b(p, j) != 0)
        return 2;
    return 0;
  }
  case 2:
    return cp.b(minus_one[0], minus_one[1]) != 0 ? 2 : 0;
  default:
    return 0;
  }
}

namespace {

void require_cone(const OrbitRef &t, const Fan &f) {
  if (!is_cone_of(t, f))
    throw Error(ErrorCode::ConeNotInFan, to_string(t) + " is not a cone of the fan");
}

} // namespace

std::size_t rank_on_orbit(const EquivariantBivector &bv, const Fan &f,
                          const OrbitRef &t, std::size_t k) {
  require_cone(t, f);
  require_regular(bv, f);
  const ChartOrbit co = orbit_in_chart(t, f, k);
  return rank_in_chart(present_in_chart(bv, f, k), co.vanishing);
}

std::size_t rank_on_orbit(const EquivariantBivector &bv, const Fan &f,
                          const OrbitRef &t) {
  require_cone(t, f);
  return rank_on_orbit(bv, f, t, orbit_in_chart(t, f).max_cone);
}

std::size_t Stratification::rank_of(const OrbitRef &t) const {
  for (const auto &r : ranks)
    if (r.orbit == t)
      return r.rank;
  throw Error(ErrorCode::ConeNotInFan, to_string(t) + " is not in the stratification");
}

Stratification stratify(const EquivariantBivector &bv, const Fan &f) {
  require_regular(bv, f);
  Stratification s;
  s.ambient_dim = f.dim();

  std::vector<std::optional<ChartPresentation>> charts(f.num_max_cones());
  for (const OrbitRef &t : enumerate_cones(f)) {
    const ChartOrbit co = orbit_in_chart(t, f);
    auto &cp = charts[co.max_cone];
    if (!cp)
      cp = present_in_chart(bv, f, co.max_cone);
    s.ranks.push_back({t, rank_in_chart(*cp, co.vanishing)});
  }

  for (std::size_t bound = 0; bound <= f.dim(); bound += 2) {
    auto &set = s.by_bound[bound];
    for (const auto &r : s.ranks)
      if (r.rank <= bound)
        set.push_back(r.orbit);
    auto &minimal = s.minimal[bound];
    for (const auto &t : set) {
      const bool has_smaller = std::any_of(set.begin(), set.end(), [&](const OrbitRef &o) {
        return o.cone.size() < t.cone.size() &&
               std::includes(t.cone.begin(), t.cone.end(), o.cone.begin(), o.cone.end());
      });
      if (!has_smaller)
        minimal.push_back(t);
    }
  }
  return s;
}

std::vector<Component> components(const Stratification &s, std::size_t k) {
  if (2 * k > s.ambient_dim)
    throw Error(ErrorCode::BadBound, "bound 2k = " + std::to_string(2 * k) +
                                         " exceeds the dimension " +
                                         std::to_string(s.ambient_dim));
  std::vector<Component> out;
  for (const auto &t : s.minimal.at(2 * k))
    out.push_back({t, s.ambient_dim - t.cone.size()});
  return out;
}

std::string_view clause_status_name(ClauseStatus s) {
  switch (s) {
  case ClauseStatus::Pass: return "pass";
  case ClauseStatus::Fail: return "FAIL";
  case ClauseStatus::Vacuous: return "vacuous";
  }
  return "?";
}

bool TheoremCertificate::passed() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const ClauseResult &c) {
    return c.status == ClauseStatus::Fail;
  });
}

namespace {

// Component of largest dimension among the minimal cones (first on ties).
std::optional<Component> largest_component(const Stratification &s, std::size_t k) {
  std::optional<Component> best;
  for (const Component &c : components(s, k))
    if (!best || c.dim > best->dim)
      best = c;
  return best;
}

} // namespace

TheoremCertificate certify_main_theorem(const EquivariantBivector &bv,
                                        const Fan &f) {
  if (!f.all_full_dimensional())
    throw Error(ErrorCode::InvalidFan,
                "every maximal cone must be spanned by a basis of N");
  if (bv.is_zero())
    throw Error(ErrorCode::ZeroBivector, "the bivector is identically zero");
  require_regular(bv, f);

  const std::size_t n = f.dim();
  const Stratification s = stratify(bv, f);
  TheoremCertificate cert;
  cert.ambient_dim = n;
  cert.fan_complete = is_complete(f);
  cert.regular = true;

  for (std::size_t k = 1; 2 * k < n; ++k) {
    ClauseResult c;
    c.kind = ClauseKind::DegeneracyBound;
    c.k = k;
    const auto best = largest_component(s, k);
    c.nonempty = best.has_value();
    if (best) {
      c.witness = best->cone;
      c.component_dim = best->dim;
    }
    c.status = c.nonempty && c.component_dim >= 2 * k + 1 ? ClauseStatus::Pass
                                                           : ClauseStatus::Fail;
    if (!c.nonempty)
      c.note = "stratum empty";
    else if (c.status == ClauseStatus::Fail)
      c.note = "no component of dimension >= " + std::to_string(2 * k + 1);
    cert.clauses.push_back(std::move(c));
  }

  const auto zero = largest_component(s, 0);
  {
    ClauseResult c;
    c.kind = ClauseKind::ZeroLocusCurve;
    c.nonempty = zero.has_value();
    if (zero) {
      c.witness = zero->cone;
      c.component_dim = zero->dim;
      c.status = zero->dim >= 1 ? ClauseStatus::Pass : ClauseStatus::Fail;
      if (c.status == ClauseStatus::Fail)
        c.note = "only isolated points";
    } else {
      c.status = ClauseStatus::Vacuous;
      c.note = "stratum empty";
    }
    cert.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c;
    c.kind = ClauseKind::CompactNonempty;
    c.nonempty = zero.has_value();
    if (zero) {
      c.witness = zero->cone;
      c.component_dim = zero->dim;
    }
    if (!cert.fan_complete) {
      c.status = ClauseStatus::Vacuous;
      c.note = "fan not complete";
    } else {
      c.status = c.nonempty ? ClauseStatus::Pass : ClauseStatus::Fail;
      if (!c.nonempty)
        c.note = "stratum empty on a complete fan";
    }
    cert.clauses.push_back(std::move(c));
  }
  return cert;
}

std::size_t numeric_rank_oracle(const EquivariantBivector &bv, const Fan &f,
                                const OrbitRef &t,
                                const std::vector<std::uint64_t> &seeds) {
  if (seeds.empty())
    throw Error(ErrorCode::BadParams, "the oracle needs at least one seed");
  const std::vector<std::size_t> charts = containing_charts(t, f);
  if (charts.empty())
    throw Error(ErrorCode::ConeNotInFan, to_string(t) + " is not a cone of the fan");

  std::optional<std::size_t> common;
  for (std::size_t k : charts) {
    const ChartPresentation cp = present_in_chart(bv, f, k);
    const ChartOrbit co = orbit_in_chart(t, f, k);
    for (std::uint64_t seed : seeds) {
      const std::size_t r =
          rational_rank(evaluate_matrix(cp, sample_orbit_point(co, seed)));
      if (common && *common != r)
        throw Error(ErrorCode::OracleDisagreement,
                    "orbit " + to_string(t) + ": rank " + std::to_string(r) +
                        " in chart " + std::to_string(k) + " (seed " +
                        std::to_string(seed) + ") but " + std::to_string(*common) +
                        " elsewhere");
      common = r;
    }
  }
  return *common;
}

} // namespace torbiv
