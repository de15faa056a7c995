#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torbiv/bivector.hpp"
#include "torbiv/orbits.hpp"

namespace torbiv {

struct OrbitRank {
  OrbitRef orbit;
  std::size_t rank = 0;
};

/// Rank of a chart presentation along the orbit whose chart coordinates at
/// `vanishing` are zero. Closed-form classification by the multidegree on the
/// vanishing set; assumes the presentation is regular on its chart.
std::size_t rank_in_chart(const ChartPresentation &cp,
                          const std::vector<std::size_t> &vanishing);

/// Rank of bv on O(tau), computed in the first maximal cone containing tau.
/// Throws NotRegular or ConeNotInFan.
std::size_t rank_on_orbit(const EquivariantBivector &bv, const Fan &f,
                          const OrbitRef &t);
/// Same, through the chart of maximal cone k.
std::size_t rank_on_orbit(const EquivariantBivector &bv, const Fan &f,
                          const OrbitRef &t, std::size_t k);

/// Degeneracy loci X_{<=2k} as unions of orbits. by_bound[b] holds the cones
/// whose orbit has rank <= b, for every even b in [0, n]; minimal[b] holds the
/// face-minimal ones (closures of their orbits are the components).
struct Stratification {
  std::size_t ambient_dim = 0;
  std::vector<OrbitRank> ranks;
  std::map<std::size_t, std::vector<OrbitRef>> by_bound;
  std::map<std::size_t, std::vector<OrbitRef>> minimal;

  std::size_t rank_of(const OrbitRef &t) const;
};

/// Throws NotRegular.
Stratification stratify(const EquivariantBivector &bv, const Fan &f);

struct Component {
  OrbitRef cone;
  std::size_t dim = 0;
};

/// Components of X_{<=2k}: one per face-minimal cone tau, of dimension
/// n - dim tau. Throws BadBound unless 0 <= 2k <= n.
std::vector<Component> components(const Stratification &s, std::size_t k);

enum class ClauseKind {
  // k > 0, 2k < n: X_{<=2k} nonempty with a component of dimension >= 2k+1
  DegeneracyBound,
  // X_{<=0} nonempty implies it contains a curve
  ZeroLocusCurve,
  // complete fan implies X_{<=0} nonempty
  CompactNonempty,
};

enum class ClauseStatus { Pass, Fail, Vacuous };

std::string_view clause_status_name(ClauseStatus s);

struct ClauseResult {
  ClauseKind kind;
  std::size_t k = 0;
  ClauseStatus status = ClauseStatus::Fail;
  bool nonempty = false;
  std::optional<OrbitRef> witness;
  std::size_t component_dim = 0;
  std::string note;
};

struct TheoremCertificate {
  std::size_t ambient_dim = 0;
  bool fan_complete = false;
  bool regular = false;
  std::vector<ClauseResult> clauses;

  bool passed() const;
};

/// Checks every clause of the degeneracy theorem on (bv, f) by exhaustive
/// orbit scan. Throws InvalidFan (a maximal cone is not full-dimensional),
/// ZeroBivector or NotRegular. Failed clauses are reported, never hidden.
TheoremCertificate certify_main_theorem(const EquivariantBivector &bv,
                                        const Fan &f);

/// Rank on O(tau) by evaluating the matrix at sampled orbit points in every
/// chart containing tau. Throws OracleDisagreement if two samples disagree.
std::size_t numeric_rank_oracle(const EquivariantBivector &bv, const Fan &f,
                                const OrbitRef &t,
                                const std::vector<std::uint64_t> &seeds);

} // namespace torbiv
