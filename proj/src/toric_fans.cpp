#include "torbiv/toric_fans.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torbiv {

LatticeVector lattice_vector(std::initializer_list<long> coords) {
  LatticeVector v;
  v.reserve(coords.size());
  for (long c : coords)
    v.emplace_back(c);
  return v;
}

Integer pairing(const Covector &m, const LatticeVector &u) {
  if (m.size() != u.size())
    throw Error(ErrorCode::DimensionMismatch, "pairing of unequal lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    s += m[i] * u[i];
  return s;
}

std::string to_string(const LatticeVector &v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

namespace {

bool is_zero_vector(const LatticeVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

LatticeVector make_primitive(LatticeVector v) {
  const Integer g = gcd_of(v);
  if (g > 1)
    for (auto &x : v)
      x /= g;
  return v;
}

struct Constraint {
  Covector row;
  bool equality;
};

// Extreme rays of {x in cone(rays) : added constraints}. `known` must be an
// H-representation of the pointed cone generated by `rays`, so every
// intermediate cone stays pointed and extremality can be decided by the rank
// of the tight constraints. One double-description step per added constraint.
std::vector<LatticeVector> refine_cone(std::size_t n,
                                       std::vector<LatticeVector> rays,
                                       std::vector<Constraint> known,
                                       const std::vector<Constraint> &added) {
  for (const Constraint &c : added) {
    std::vector<std::pair<LatticeVector, Integer>> pos, neg;
    std::vector<LatticeVector> next;
    for (auto &g : rays) {
      Integer val = pairing(c.row, g);
      if (val == 0)
        next.push_back(std::move(g));
      else if (val > 0)
        pos.emplace_back(std::move(g), std::move(val));
      else
        neg.emplace_back(std::move(g), std::move(val));
    }
    if (!c.equality)
      for (auto &[g, val] : pos)
        next.push_back(g);
    for (const auto &[p, vp] : pos)
      for (const auto &[q, vq] : neg) {
        LatticeVector comb(n);
        for (std::size_t i = 0; i < n; ++i)
          comb[i] = vp * q[i] - vq * p[i];
        next.push_back(make_primitive(std::move(comb)));
      }
    known.push_back(c);

    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    rays.clear();
    for (auto &g : next) {
      std::vector<Covector> tight;
      for (const Constraint &k : known)
        if (pairing(k.row, g) == 0)
          tight.push_back(k.row);
      IntMatrix t(tight.size(), n);
      for (std::size_t i = 0; i < tight.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
          t(i, j) = tight[i][j];
      if (n == 0 || integer_rank(t) == n - 1)
        rays.push_back(std::move(g));
    }
  }
  return rays;
}

std::vector<Constraint> constraints_of(const HRep &h) {
  std::vector<Constraint> out;
  for (const auto &m : h.equalities)
    out.push_back({m, true});
  for (const auto &m : h.inequalities)
    out.push_back({m, false});
  return out;
}

// Extreme rays of {lambda in R^m : lambda >= 0, <e, lambda> = 0 for e in eqs}.
std::vector<LatticeVector> orthant_section(std::size_t m,
                                           const std::vector<Covector> &eqs) {
  std::vector<LatticeVector> orthant;
  std::vector<Constraint> known;
  for (std::size_t i = 0; i < m; ++i) {
    LatticeVector e(m, Integer(0));
    e[i] = 1;
    orthant.push_back(e);
    known.push_back({e, false});
  }
  std::vector<Constraint> added;
  for (const auto &e : eqs)
    added.push_back({e, true});
  return refine_cone(m, std::move(orthant), std::move(known), added);
}

// Drop generators that are nonnegative combinations of the others, so the
// result is the set of extreme rays of a pointed cone. g is redundant iff
// {(mu, t) >= 0 : sum mu_j h_j = t g} has a ray with t > 0.
std::vector<LatticeVector> prune_redundant(std::size_t n, std::vector<LatticeVector> gens) {
  for (std::size_t i = 0; i < gens.size();) {
    const std::size_t m = gens.size();
    std::vector<Covector> eqs(n, Covector(m, Integer(0)));
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t col = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i)
          eqs[r][col++] = gens[j][r];
      eqs[r][m - 1] = -gens[i][r];
    }
    const auto rays = orthant_section(m, eqs);
    const bool redundant = std::any_of(rays.begin(), rays.end(),
                                       [&](const LatticeVector &v) { return v[m - 1] > 0; });
    if (redundant)
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return gens;
}

// c1 ∩ c2 as the image under G1 of {(lambda, mu) >= 0 : G1 lambda = G2 mu}.
std::vector<LatticeVector> lifted_intersection(const Cone &c1, const Cone &c2) {
  const std::size_t n = c1.ambient_dim(), m1 = c1.size(), m2 = c2.size();
  std::vector<Covector> eqs(n, Covector(m1 + m2, Integer(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < m1; ++j)
      eqs[r][j] = c1.generator(j)[r];
    for (std::size_t j = 0; j < m2; ++j)
      eqs[r][m1 + j] = -c2.generator(j)[r];
  }
  std::vector<LatticeVector> image;
  for (const auto &lam : orthant_section(m1 + m2, eqs)) {
    LatticeVector x(n, Integer(0));
    for (std::size_t j = 0; j < m1; ++j)
      for (std::size_t r = 0; r < n; ++r)
        x[r] += lam[j] * c1.generator(j)[r];
    if (!is_zero_vector(x))
      image.push_back(make_primitive(std::move(x)));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return prune_redundant(n, std::move(image));
}

} // namespace

bool is_strongly_convex(std::size_t ambient_dim,
                        const std::vector<LatticeVector> &generators) {
  const std::size_t m = generators.size();
  if (m == 0)
    return true;
  const IntMatrix g = from_columns(generators, ambient_dim);
  if (integer_rank(g) == m)
    return true;
  // Not strongly convex iff some nonzero lambda >= 0 has g * lambda = 0.
  std::vector<Covector> eqs;
  for (std::size_t r = 0; r < ambient_dim; ++r)
    eqs.push_back(g.row(r));
  return orthant_section(m, eqs).empty();
}

Cone::Cone(std::size_t ambient_dim, std::vector<LatticeVector> generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  for (const auto &g : generators_) {
    if (g.size() != ambient_dim_)
      throw Error(ErrorCode::InvalidCone,
                  "generator " + to_string(g) + " has wrong dimension");
    if (is_zero_vector(g))
      throw Error(ErrorCode::InvalidCone, "zero generator");
    if (gcd_of(g) != 1)
      throw Error(ErrorCode::InvalidCone,
                  "generator " + to_string(g) + " is not primitive");
  }
  std::vector<LatticeVector> sorted = generators_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidCone, "repeated generator");
  if (!is_strongly_convex(ambient_dim_, generators_))
    throw Error(ErrorCode::InvalidCone, "cone is not strongly convex");
}

IntMatrix Cone::generator_matrix() const {
  return from_columns(generators_, ambient_dim_);
}

bool HRep::contains(const LatticeVector &x) const {
  for (const auto &m : inequalities)
    if (pairing(m, x) < 0)
      return false;
  for (const auto &m : equalities)
    if (pairing(m, x) != 0)
      return false;
  return true;
}

bool is_smooth_cone(const Cone &c) {
  const std::size_t d = c.size();
  if (d == 0)
    return true;
  if (d > c.ambient_dim())
    return false;
  const std::vector<Integer> factors = invariant_factors(c.generator_matrix());
  return factors.size() == d &&
         std::all_of(factors.begin(), factors.end(),
                     [](const Integer &x) { return x == 1; });
}

IntMatrix extend_to_basis(const Cone &c) {
  if (!is_smooth_cone(c))
    throw Error(ErrorCode::NotSmooth, "cone generators do not extend to a basis");
  const std::size_t n = c.ambient_dim(), d = c.size();
  if (d == 0)
    return IntMatrix::identity(n);
  // u g v = [I_d; 0], so g = u^-1 [I_d; 0] v^-1.
  const SmithForm f = smith_normal_form(c.generator_matrix());
  const IntMatrix w = unimodular_inverse(f.u);
  const IntMatrix v_inv = unimodular_inverse(f.v);
  IntMatrix block = IntMatrix::identity(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      block(i, j) = v_inv(i, j);
  return w * block;
}

HRep h_representation(const Cone &c) {
  const IntMatrix s = unimodular_inverse(extend_to_basis(c));
  HRep h;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (i < c.size())
      h.inequalities.push_back(s.row(i));
    else
      h.equalities.push_back(s.row(i));
  }
  return h;
}

DualFrame dual_frame(const Cone &c) {
  if (!is_smooth_cone(c))
    throw Error(ErrorCode::NotSmooth, "dual frame of a non-smooth cone");
  if (c.size() != c.ambient_dim())
    throw Error(ErrorCode::NotFullDimensional,
                "dual frame needs a full-dimensional cone");
  DualFrame f;
  f.r = c.generator_matrix();
  f.s = unimodular_inverse(f.r);
  for (std::size_t i = 0; i < f.s.rows(); ++i)
    f.h.inequalities.push_back(f.s.row(i));
  return f;
}

std::vector<Cone> cone_faces(const Cone &c) {
  if (!is_smooth_cone(c))
    throw Error(ErrorCode::NotSmooth, "faces of a non-smooth cone");
  const std::size_t d = c.size();
  std::vector<Cone> faces;
  faces.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (std::size_t{1} << i))
        gens.push_back(c.generator(i));
    faces.emplace_back(c.ambient_dim(), std::move(gens));
  }
  return faces;
}

std::vector<LatticeVector> intersect_cones(const Cone &c1, const Cone &c2) {
  if (c1.ambient_dim() != c2.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "cones in different lattices");
  std::vector<LatticeVector> rays;
  if (is_smooth_cone(c1) && is_smooth_cone(c2))
    rays = refine_cone(c1.ambient_dim(), c1.generators(),
                       constraints_of(h_representation(c1)),
                       constraints_of(h_representation(c2)));
  else
    rays = lifted_intersection(c1, c2);
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::optional<std::size_t> halfspace_ray(const Cone &c, const Covector &a) {
  std::optional<std::size_t> on_hyperplane;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Integer v = pairing(a, c.generator(i));
    if (v < 0)
      return i;
    if (v == 0 && !on_hyperplane)
      on_hyperplane = i;
  }
  return on_hyperplane;
}

// ---------------------------------------------------------------------------

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::BadDimension: return "BadDimension";
  case ViolationKind::ZeroRay: return "ZeroRay";
  case ViolationKind::DuplicateRay: return "DuplicateRay";
  case ViolationKind::BadIndex: return "BadIndex";
  case ViolationKind::NotStronglyConvex: return "NotStronglyConvex";
  case ViolationKind::NotSmooth: return "NotSmooth";
  case ViolationKind::NotMaximal: return "NotMaximal";
  case ViolationKind::NotCommonFace: return "NotCommonFace";
  }
  return "Unknown";
}

namespace {

std::string index_list(const std::vector<std::size_t> &idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i)
    os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

std::vector<LatticeVector> cone_rays(const std::vector<LatticeVector> &rays,
                                     const std::vector<std::size_t> &idx) {
  std::vector<LatticeVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx)
    out.push_back(rays[i]);
  return out;
}

} // namespace

ValidationReport validate_fan(const FanDescription &desc) {
  ValidationReport report;
  const std::size_t n = desc.dim;
  auto violate = [&](ViolationKind kind, std::vector<std::size_t> cones,
                     std::string msg) {
    report.violations.push_back({kind, std::move(cones), std::move(msg)});
  };

  if (n == 0)
    violate(ViolationKind::BadDimension, {}, "dimension must be positive");

  std::vector<LatticeVector> rays;
  bool rays_ok = n > 0;
  for (std::size_t i = 0; i < desc.rays.size(); ++i) {
    const LatticeVector &r = desc.rays[i];
    if (r.size() != n) {
      violate(ViolationKind::BadDimension, {},
              "ray " + std::to_string(i) + " has " + std::to_string(r.size()) +
                  " coordinates, expected " + std::to_string(n));
      rays_ok = false;
      rays.push_back(r);
      continue;
    }
    if (is_zero_vector(r)) {
      violate(ViolationKind::ZeroRay, {}, "ray " + std::to_string(i) + " is zero");
      rays_ok = false;
      rays.push_back(r);
      continue;
    }
    LatticeVector p = make_primitive(r);
    if (p != r)
      report.warnings.push_back("ray " + std::to_string(i) + " " + to_string(r) +
                                " is not primitive; using " + to_string(p));
    rays.push_back(std::move(p));
  }
  if (rays_ok) {
    std::map<LatticeVector, std::size_t> seen;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      auto [it, fresh] = seen.emplace(rays[i], i);
      if (!fresh) {
        violate(ViolationKind::DuplicateRay, {},
                "rays " + std::to_string(it->second) + " and " +
                    std::to_string(i) + " coincide: " + to_string(rays[i]));
        rays_ok = false;
      }
    }
  }

  // per-cone checks
  std::vector<bool> usable(desc.max_cones.size(), false);
  for (std::size_t k = 0; k < desc.max_cones.size(); ++k) {
    const auto &idx = desc.max_cones[k];
    bool ok = true;
    std::set<std::size_t> distinct;
    for (std::size_t i : idx) {
      if (i >= desc.rays.size()) {
        violate(ViolationKind::BadIndex, {k},
                "maximal cone " + std::to_string(k) + " uses ray index " +
                    std::to_string(i) + " out of range");
        ok = false;
      } else if (!distinct.insert(i).second) {
        violate(ViolationKind::BadIndex, {k},
                "maximal cone " + std::to_string(k) + " repeats ray " +
                    std::to_string(i));
        ok = false;
      }
    }
    if (!ok || !rays_ok)
      continue;
    const std::vector<LatticeVector> gens = cone_rays(rays, idx);
    if (!is_strongly_convex(n, gens)) {
      violate(ViolationKind::NotStronglyConvex, {k},
              "maximal cone " + std::to_string(k) + " " + index_list(idx) +
                  " is not strongly convex");
      report.cones.push_back({k, false});
      continue;
    }
    const Cone cone(n, gens);
    const bool smooth = is_smooth_cone(cone);
    report.cones.push_back({k, smooth});
    if (!smooth) {
      std::string detail = "generators are not part of a Z-basis";
      if (gens.size() <= n && integer_rank(cone.generator_matrix()) == gens.size()) {
        const auto factors = invariant_factors(cone.generator_matrix());
        detail = "invariant factors";
        for (const auto &f : factors)
          detail += " " + f.get_str();
      }
      violate(ViolationKind::NotSmooth, {k},
              "maximal cone " + std::to_string(k) + " " + index_list(idx) +
                  " is not smooth (" + detail + ")");
      continue;
    }
    usable[k] = true;
  }

  // maximality and pairwise common faces
  for (std::size_t a = 0; a < desc.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < desc.max_cones.size(); ++b) {
      std::vector<std::size_t> sa = desc.max_cones[a], sb = desc.max_cones[b];
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) ||
          std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        violate(ViolationKind::NotMaximal, {a, b},
                "maximal cones " + std::to_string(a) + " and " +
                    std::to_string(b) + " are nested");
      if (!usable[a] || !usable[b])
        continue;
      std::vector<std::size_t> shared;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(shared));
      std::vector<LatticeVector> expected = cone_rays(rays, shared);
      std::sort(expected.begin(), expected.end());
      const Cone ca(n, cone_rays(rays, desc.max_cones[a]));
      const Cone cb(n, cone_rays(rays, desc.max_cones[b]));
      ++report.pairs_checked;
      if (intersect_cones(ca, cb) != expected)
        violate(ViolationKind::NotCommonFace, {a, b},
                "maximal cones " + std::to_string(a) + " and " +
                    std::to_string(b) +
                    " intersect outside the face spanned by shared rays " +
                    index_list(shared));
    }
  return report;
}

Fan Fan::from_description(const FanDescription &desc) {
  const ValidationReport report = validate_fan(desc);
  if (!report.valid())
    throw Error(ErrorCode::InvalidFan, report.violations.front().message);
  Fan f;
  f.dim_ = desc.dim;
  f.name_ = desc.name;
  for (const auto &r : desc.rays)
    f.rays_.push_back(make_primitive(r));
  f.max_cones_ = desc.max_cones;
  for (std::size_t k = 0; k < f.max_cones_.size(); ++k) {
    f.frames_.push_back(extend_to_basis(f.max_cone(k)));
    f.frame_inverses_.push_back(unimodular_inverse(f.frames_.back()));
  }
  return f;
}

Cone Fan::max_cone(std::size_t k) const {
  return Cone(dim_, cone_rays(rays_, max_cones_.at(k)));
}

bool Fan::all_full_dimensional() const {
  return std::all_of(max_cones_.begin(), max_cones_.end(),
                     [&](const auto &c) { return c.size() == dim_; });
}

std::optional<std::size_t> Fan::standard_orthant() const {
  for (std::size_t k = 0; k < max_cones_.size(); ++k) {
    if (max_cones_[k].size() != dim_)
      continue;
    std::vector<bool> hit(dim_, false);
    bool ok = true;
    for (std::size_t i : max_cones_[k]) {
      const LatticeVector &r = rays_[i];
      std::size_t nonzero = 0, where = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        if (r[j] != 0) {
          ++nonzero;
          where = j;
        }
      if (nonzero != 1 || r[where] != 1 || hit[where]) {
        ok = false;
        break;
      }
      hit[where] = true;
    }
    if (ok)
      return k;
  }
  return std::nullopt;
}

FanDescription Fan::description() const {
  return {dim_, rays_, max_cones_, name_};
}

bool is_complete(const Fan &f) {
  if (!f.all_full_dimensional() || f.num_max_cones() == 0)
    return false;
  std::map<std::vector<std::size_t>, std::size_t> facet_count;
  for (const auto &cone : f.max_cones()) {
    std::vector<std::size_t> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (i != drop)
          facet.push_back(sorted[i]);
      ++facet_count[facet];
    }
  }
  return std::all_of(facet_count.begin(), facet_count.end(),
                     [](const auto &kv) { return kv.second == 2; });
}

namespace {

LatticeVector unit(std::size_t n, std::size_t i, long value = 1) {
  LatticeVector e(n, Integer(0));
  e[i] = value;
  return e;
}

void expect_params(const std::string &name, const std::vector<long> &params,
                   std::size_t count) {
  if (params.size() != count)
    throw Error(ErrorCode::BadParams, name + " expects " + std::to_string(count) +
                                          " parameter(s), got " +
                                          std::to_string(params.size()));
}

} // namespace

Fan builtin_fan(const std::string &name, const std::vector<long> &params) {
  FanDescription d;
  if (name == "projective_space") {
    expect_params(name, params, 1);
    if (params[0] < 1 || params[0] > 16)
      throw Error(ErrorCode::BadParams, "projective_space needs 1 <= n <= 16");
    const auto n = static_cast<std::size_t>(params[0]);
    d.dim = n;
    for (std::size_t i = 0; i < n; ++i)
      d.rays.push_back(unit(n, i));
    d.rays.emplace_back(n, Integer(-1));
    // all n-subsets of the n+1 rays, lexicographic; the first is the orthant
    for (std::size_t skip = n + 1; skip-- > 0;) {
      std::vector<std::size_t> cone;
      for (std::size_t i = 0; i <= n; ++i)
        if (i != skip)
          cone.push_back(i);
      d.max_cones.push_back(cone);
    }
    d.name = "projective_space(" + std::to_string(n) + ")";
  } else if (name == "affine_space") {
    expect_params(name, params, 1);
    if (params[0] < 1 || params[0] > 16)
      throw Error(ErrorCode::BadParams, "affine_space needs 1 <= n <= 16");
    const auto n = static_cast<std::size_t>(params[0]);
    d.dim = n;
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < n; ++i) {
      d.rays.push_back(unit(n, i));
      cone.push_back(i);
    }
    d.max_cones.push_back(cone);
    d.name = "affine_space(" + std::to_string(n) + ")";
  } else if (name == "product_p1_p1") {
    expect_params(name, params, 0);
    d.dim = 2;
    d.rays = {unit(2, 0), unit(2, 1), unit(2, 0, -1), unit(2, 1, -1)};
    d.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    d.name = "product_p1_p1";
  } else if (name == "hirzebruch") {
    expect_params(name, params, 1);
    const long a = params[0];
    d.dim = 2;
    d.rays = {unit(2, 0), unit(2, 1), unit(2, 1, -1), lattice_vector({-1, a})};
    d.max_cones = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
    d.name = "hirzebruch(" + std::to_string(a) + ")";
  } else if (name == "blowup_c2") {
    expect_params(name, params, 0);
    d.dim = 2;
    d.rays = {unit(2, 0), unit(2, 1), lattice_vector({1, 1})};
    d.max_cones = {{0, 2}, {2, 1}};
    d.name = "blowup_c2";
  } else {
    throw Error(ErrorCode::UnknownName, "no gallery fan named '" + name + "'");
  }
  return Fan::from_description(d);
}

} // namespace torbiv
