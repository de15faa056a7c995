#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "torbiv/exact_linalg.hpp"
#include "torbiv/toric_fans.hpp"

namespace torbiv {

/// Torus-equivariant bi-vector field
///   pi = sum_{i,j} a_ij z^alpha z_i z_j d/dz_i ^ d/dz_j
/// stored as its coefficient matrix A (exactly antisymmetric) and multidegree
/// alpha. Coordinates z_i are taken in the frame of `base_chart` when set;
/// otherwise in the standard basis of N.
class EquivariantBivector {
public:
  /// Throws NotAntisymmetric or DimensionMismatch.
  EquivariantBivector(Covector alpha, RatMatrix a,
                      std::optional<std::size_t> base_chart = std::nullopt);

  std::size_t dim() const noexcept { return alpha_.size(); }
  const Covector &alpha() const noexcept { return alpha_; }
  const RatMatrix &a() const noexcept { return a_; }
  std::optional<std::size_t> base_chart() const noexcept { return base_chart_; }
  bool is_zero() const { return a_.is_zero(); }

  friend bool operator==(const EquivariantBivector &,
                         const EquivariantBivector &) = default;

private:
  Covector alpha_;
  RatMatrix a_;
  std::optional<std::size_t> base_chart_;
};

/// The same field written in another frame w: coefficients B and multidegree
/// beta. Only the first `vanishable` coordinates can vanish on the chart; the
/// rest (present when the maximal cone is not full-dimensional) are units.
struct ChartPresentation {
  std::optional<std::size_t> chart;
  RatMatrix b;
  Covector beta;
  std::size_t vanishable = 0;

  std::size_t dim() const noexcept { return beta.size(); }
};

/// Change of frame: r has the new basis vectors as columns, written in the
/// current frame. B = S A S^t with S = r^-1, beta = r^t alpha.
/// Throws NotUnimodular.
ChartPresentation transition(const EquivariantBivector &bv, const IntMatrix &r);

/// Reinterpret a chart presentation as a bivector in that chart's frame.
EquivariantBivector as_bivector(const ChartPresentation &cp);

/// Frame (columns in the standard basis of N) in which bv's data is written.
/// Throws NoBaseChart when bv has no base chart and f has no standard orthant.
IntMatrix base_frame(const EquivariantBivector &bv, const Fan &f);

/// bv written in the chart of maximal cone k of f.
ChartPresentation present_in_chart(const EquivariantBivector &bv, const Fan &f,
                                   std::size_t k);

/// Exponent of each chart coordinate in entry (i, j):
/// beta_h + [h == i] + [h == j]. Throws DiagonalEntry when i == j.
std::vector<Integer> entry_exponents(const Covector &beta, std::size_t i,
                                     std::size_t j);

bool is_regular_on_chart(const ChartPresentation &cp);

struct Irregularity {
  std::size_t chart;
  std::size_t i, j;       // offending entry (0-based)
  std::size_t coordinate; // coordinate with a negative exponent (0-based)
  Integer exponent;
};

std::optional<Irregularity> find_irregularity(const EquivariantBivector &bv,
                                              const Fan &f);

/// The field extends holomorphically over every affine chart of f.
bool is_regular_global(const EquivariantBivector &bv, const Fan &f);

/// Throws NotRegular naming the first offending chart and entry.
void require_regular(const EquivariantBivector &bv, const Fan &f);

struct PoissonResult {
  bool poisson = true;
  // first violating triple j < h < k (0-based) and its nonzero sum
  std::optional<std::array<std::size_t, 3>> triple;
  Rational value;
};

/// Schouten self-bracket test for equivariant fields: for all j < h < k,
///   sum_{i not in {j,h,k}} alpha_i (a_ij a_hk + a_ih a_kj + a_ik a_jh) = 0.
PoissonResult poisson_check(const EquivariantBivector &bv);

/// The antisymmetric matrix (b_ij w^beta w_i w_j) at the point z.
/// 0^0 is 1; a negative exponent at a zero coordinate throws UndefinedEntry.
RatMatrix evaluate_matrix(const ChartPresentation &cp,
                          const std::vector<Rational> &z);

/// Pseudo-random nonzero bivector that is regular on every chart of f,
/// presented in the frame of maximal cone 0. The multidegree is drawn from a
/// small box and A from the subspace allowed by every chart.
EquivariantBivector sample_regular_bivector(const Fan &f, std::uint64_t seed);

} // namespace torbiv
