#include "torbiv/bivector.hpp"

#include <random>

namespace torbiv {

EquivariantBivector::EquivariantBivector(Covector alpha, RatMatrix a,
                                         std::optional<std::size_t> base_chart)
    : alpha_(std::move(alpha)), a_(std::move(a)), base_chart_(base_chart) {
  const std::size_t n = alpha_.size();
  if (a_.rows() != n || a_.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "coefficient matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a_(i, i) != 0)
      throw Error(ErrorCode::NotAntisymmetric,
                  "nonzero diagonal entry " + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n; ++j)
      if (a_(i, j) != -a_(j, i))
        throw Error(ErrorCode::NotAntisymmetric,
                    "entries (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") and its transpose");
  }
}

ChartPresentation transition(const EquivariantBivector &bv, const IntMatrix &r) {
  if (r.rows() != bv.dim() || r.cols() != bv.dim())
    throw Error(ErrorCode::DimensionMismatch, "transition matrix shape");
  const RatMatrix s = to_rational(unimodular_inverse(r));
  ChartPresentation cp;
  cp.b = s * bv.a() * s.transpose();
  cp.beta = r.transpose() * bv.alpha();
  cp.vanishable = bv.dim();
  return cp;
}

EquivariantBivector as_bivector(const ChartPresentation &cp) {
  return EquivariantBivector(cp.beta, cp.b, cp.chart);
}

IntMatrix base_frame(const EquivariantBivector &bv, const Fan &f) {
  if (bv.dim() != f.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "bivector has dimension " + std::to_string(bv.dim()) +
                    ", fan has " + std::to_string(f.dim()));
  if (const auto k = bv.base_chart()) {
    if (*k >= f.num_max_cones())
      throw Error(ErrorCode::NoBaseChart,
                  "base chart " + std::to_string(*k) + " is not a maximal cone");
    return f.frame(*k);
  }
  if (f.standard_orthant())
    return IntMatrix::identity(f.dim());
  throw Error(ErrorCode::NoBaseChart,
              "fan has no standard orthant and the bivector names no base chart");
}

namespace {

IntMatrix base_frame_inverse(const EquivariantBivector &bv, const Fan &f) {
  if (const auto k = bv.base_chart(); k && *k < f.num_max_cones())
    return f.frame_inverse(*k);
  return unimodular_inverse(base_frame(bv, f));
}

} // namespace

ChartPresentation present_in_chart(const EquivariantBivector &bv, const Fan &f,
                                   std::size_t k) {
  if (k >= f.num_max_cones())
    throw Error(ErrorCode::ConeNotInFan,
                "chart " + std::to_string(k) + " is not a maximal cone");
  ChartPresentation cp = transition(bv, base_frame_inverse(bv, f) * f.frame(k));
  cp.chart = k;
  cp.vanishable = f.max_cone_dim(k);
  return cp;
}

std::vector<Integer> entry_exponents(const Covector &beta, std::size_t i,
                                     std::size_t j) {
  if (i == j)
    throw Error(ErrorCode::DiagonalEntry,
                "diagonal entry " + std::to_string(i + 1) + " has no monomial");
  if (i >= beta.size() || j >= beta.size())
    throw Error(ErrorCode::DimensionMismatch, "entry index out of range");
  std::vector<Integer> e = beta;
  e[i] += 1;
  e[j] += 1;
  return e;
}

namespace {

std::optional<Irregularity> chart_irregularity(const ChartPresentation &cp) {
  const std::size_t n = cp.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cp.b(i, j) == 0)
        continue;
      const std::vector<Integer> e = entry_exponents(cp.beta, i, j);
      for (std::size_t h = 0; h < cp.vanishable; ++h)
        if (e[h] < 0)
          return Irregularity{cp.chart.value_or(0), i, j, h, e[h]};
    }
  return std::nullopt;
}

} // namespace

bool is_regular_on_chart(const ChartPresentation &cp) {
  return !chart_irregularity(cp).has_value();
}

std::optional<Irregularity> find_irregularity(const EquivariantBivector &bv,
                                              const Fan &f) {
  for (std::size_t k = 0; k < f.num_max_cones(); ++k)
    if (auto bad = chart_irregularity(present_in_chart(bv, f, k)))
      return bad;
  return std::nullopt;
}

bool is_regular_global(const EquivariantBivector &bv, const Fan &f) {
  return !find_irregularity(bv, f).has_value();
}

void require_regular(const EquivariantBivector &bv, const Fan &f) {
  if (const auto bad = find_irregularity(bv, f))
    throw Error(ErrorCode::NotRegular,
                "chart " + std::to_string(bad->chart) + ", entry (" +
                    std::to_string(bad->i + 1) + "," + std::to_string(bad->j + 1) +
                    "): exponent of w_" + std::to_string(bad->coordinate + 1) +
                    " is " + bad->exponent.get_str());
}

PoissonResult poisson_check(const EquivariantBivector &bv) {
  const std::size_t n = bv.dim();
  const RatMatrix &a = bv.a();
  const Covector &alpha = bv.alpha();
  PoissonResult result;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t h = j + 1; h < n; ++h)
      for (std::size_t k = h + 1; k < n; ++k) {
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == j || i == h || i == k || alpha[i] == 0)
            continue;
          sum += Rational(alpha[i]) *
                 (a(i, j) * a(h, k) + a(i, h) * a(k, j) + a(i, k) * a(j, h));
        }
        if (sum != 0) {
          result.poisson = false;
          result.triple = std::array<std::size_t, 3>{j, h, k};
          result.value = sum;
          return result;
        }
      }
  return result;
}

namespace {

Rational power(const Rational &base, const Integer &exponent) {
  const bool invert = exponent < 0;
  const Integer magnitude = abs(exponent);
  if (!magnitude.fits_ulong_p())
    throw Error(ErrorCode::UndefinedEntry, "exponent too large");
  const unsigned long e = magnitude.get_ui();
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return invert ? Rational(1 / out) : out;
}

} // namespace

RatMatrix evaluate_matrix(const ChartPresentation &cp,
                          const std::vector<Rational> &z) {
  const std::size_t n = cp.dim();
  if (z.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  RatMatrix pi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cp.b(i, j) == 0)
        continue;
      const std::vector<Integer> e = entry_exponents(cp.beta, i, j);
      Rational value = cp.b(i, j);
      for (std::size_t h = 0; h < n; ++h) {
        if (e[h] == 0)
          continue;
        if (z[h] == 0) {
          if (e[h] < 0)
            throw Error(ErrorCode::UndefinedEntry,
                        "entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has exponent " +
                            e[h].get_str() + " at the zero coordinate w_" +
                            std::to_string(h + 1));
          value = 0;
        } else if (value != 0) {
          value *= power(z[h], e[h]);
        }
      }
      pi(i, j) = value;
    }
  return pi;
}

namespace {

// Entry (p, q) of S A S^t as a linear form in the a_ij, i < j.
std::vector<Rational> transformed_entry(const IntMatrix &s, std::size_t p,
                                        std::size_t q) {
  const std::size_t n = s.rows();
  std::vector<Rational> row;
  row.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      row.emplace_back(s(p, i) * s(q, j) - s(p, j) * s(q, i));
  return row;
}

// Coefficient matrices A (as upper-triangle vectors) regular for multidegree
// alpha on every chart: entries of B forced to vanish give linear equations.
std::vector<std::vector<Rational>> regular_coefficients(const Fan &f,
                                                        const Covector &alpha) {
  const std::size_t n = f.dim();
  const IntMatrix &base = f.frame(0);
  const IntMatrix &base_inv = f.frame_inverse(0);
  std::vector<std::vector<Rational>> equations;
  for (std::size_t k = 0; k < f.num_max_cones(); ++k) {
    const IntMatrix r = base_inv * f.frame(k);
    const IntMatrix s = f.frame_inverse(k) * base;
    const Covector beta = r.transpose() * alpha;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::vector<Integer> e = entry_exponents(beta, p, q);
        bool forbidden = false;
        for (std::size_t h = 0; h < f.max_cone_dim(k); ++h)
          forbidden = forbidden || e[h] < 0;
        if (forbidden)
          equations.push_back(transformed_entry(s, p, q));
      }
  }
  const std::size_t vars = n * (n - 1) / 2;
  if (equations.empty()) {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t v = 0; v < vars; ++v) {
      std::vector<Rational> e(vars, Rational(0));
      e[v] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  RatMatrix m(equations.size(), vars);
  for (std::size_t i = 0; i < equations.size(); ++i)
    for (std::size_t v = 0; v < vars; ++v)
      m(i, v) = equations[i][v];
  return rational_kernel(m);
}

} // namespace

EquivariantBivector sample_regular_bivector(const Fan &f, std::uint64_t seed) {
  const std::size_t n = f.dim();
  if (n < 2)
    throw Error(ErrorCode::BadParams, "nonzero bivectors need dimension >= 2");
  if (f.num_max_cones() == 0)
    throw Error(ErrorCode::InvalidFan, "fan has no maximal cones");
  std::mt19937_64 rng(seed);
  static constexpr int kAlphaValues[] = {-2, -1, -1, 0, 0, 1, 2};

  Covector alpha(n, Integer(0));
  std::vector<std::vector<Rational>> basis;
  for (int attempt = 0; attempt < 400 && basis.empty(); ++attempt) {
    for (auto &x : alpha)
      x = kAlphaValues[rng() % 7];
    basis = regular_coefficients(f, alpha);
  }
  if (basis.empty()) {
    // alpha = 0 imposes no condition on any chart
    alpha.assign(n, Integer(0));
    basis = regular_coefficients(f, alpha);
  }

  std::vector<Rational> upper(n * (n - 1) / 2, Rational(0));
  bool any = false;
  while (!any) {
    for (const auto &v : basis) {
      if (rng() % 3 == 0)
        continue;
      Rational c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      c.canonicalize();
      if (c == 0)
        continue;
      any = true;
      for (std::size_t i = 0; i < upper.size(); ++i)
        upper[i] += c * v[i];
    }
  }
  RatMatrix a(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      a(i, j) = upper[idx];
      a(j, i) = -upper[idx];
    }
  return EquivariantBivector(alpha, a, std::size_t{0});
}

} // namespace torbiv
