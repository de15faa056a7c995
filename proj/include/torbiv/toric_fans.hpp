#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torbiv/exact_linalg.hpp"

namespace torbiv {

// An element of N = Z^n (one-parameter subgroups, ray generators).
using LatticeVector = std::vector<Integer>;
// An element of the dual lattice M (characters, multidegrees).
using Covector = std::vector<Integer>;

LatticeVector lattice_vector(std::initializer_list<long> coords);
Integer pairing(const Covector &m, const LatticeVector &u);
std::string to_string(const LatticeVector &v);

/// Strongly convex rational cone given by its primitive ray generators.
/// Generators keep their input order; that order fixes the chart coordinates
/// z_1..z_n of a smooth cone.
class Cone {
public:
  /// Throws InvalidCone for zero, non-primitive or repeated generators, or a
  /// generator set that is not strongly convex.
  Cone(std::size_t ambient_dim, std::vector<LatticeVector> generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<LatticeVector> &generators() const noexcept {
    return generators_;
  }
  const LatticeVector &generator(std::size_t i) const {
    return generators_.at(i);
  }
  /// n x d matrix with the generators as columns.
  IntMatrix generator_matrix() const;

private:
  std::size_t ambient_dim_;
  std::vector<LatticeVector> generators_;
};

/// x in cone  <=>  <m, x> >= 0 for every inequality and = 0 for every equality.
struct HRep {
  std::vector<Covector> inequalities;
  std::vector<Covector> equalities;

  bool contains(const LatticeVector &x) const;
};

struct DualFrame {
  IntMatrix r; // generators as columns
  IntMatrix s; // r^-1, rows are the dual basis
  HRep h;
};

bool is_strongly_convex(std::size_t ambient_dim,
                        const std::vector<LatticeVector> &generators);

bool is_smooth_cone(const Cone &c);

/// Dual frame of a smooth full-dimensional cone.
/// Throws NotSmooth or NotFullDimensional.
DualFrame dual_frame(const Cone &c);

/// n x n unimodular matrix whose first d columns are the generators of c.
IntMatrix extend_to_basis(const Cone &c);

/// H-representation of a smooth cone of any dimension: d inequalities and
/// n - d equalities, read off the inverse of extend_to_basis.
HRep h_representation(const Cone &c);

/// All 2^d faces of a smooth cone, ordered by the bitmask of kept generators.
std::vector<Cone> cone_faces(const Cone &c);

/// Extreme rays of c1 ∩ c2 (primitive, sorted). Smooth inputs: c1's rays
/// refined by c2's H-representation. Otherwise the intersection is lifted to
/// {(lambda, mu) >= 0 : G1 lambda = G2 mu} and redundant image rays dropped.
std::vector<LatticeVector> intersect_cones(const Cone &c1, const Cone &c2);

/// Index of a generator in the closed halfspace <a, x> <= 0: strictly negative
/// pairings are preferred; a zero pairing is returned only when no generator
/// pairs negatively. Empty when the cone meets the halfspace only in {0}.
std::optional<std::size_t> halfspace_ray(const Cone &c, const Covector &a);

// ---------------------------------------------------------------------------
// Fans

/// Raw fan data as read from a document: may violate the fan axioms.
struct FanDescription {
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::string name;
};

enum class ViolationKind {
  BadDimension,
  ZeroRay,
  DuplicateRay,
  BadIndex,
  NotStronglyConvex,
  NotSmooth,
  NotMaximal,
  NotCommonFace,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> cones; // maximal-cone indices involved
  std::string message;
};

struct ConeCheck {
  std::size_t index;
  bool smooth;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  std::vector<ConeCheck> cones;
  std::size_t pairs_checked = 0;

  bool valid() const noexcept { return violations.empty(); }
};

/// Checks the smooth-fan axioms and reports every violation found.
/// Non-primitive rays are normalized and produce a warning only.
ValidationReport validate_fan(const FanDescription &desc);

/// A fan that passed validate_fan. Maximal cones are index lists into rays in
/// their input order; each maximal cone's chart frame is cached.
class Fan {
public:
  /// Throws InvalidFan (with the first violation) unless desc is valid.
  static Fan from_description(const FanDescription &desc);

  std::size_t dim() const noexcept { return dim_; }
  const std::string &name() const noexcept { return name_; }
  const std::vector<LatticeVector> &rays() const noexcept { return rays_; }
  const std::vector<std::vector<std::size_t>> &max_cones() const noexcept {
    return max_cones_;
  }
  std::size_t num_max_cones() const noexcept { return max_cones_.size(); }

  Cone max_cone(std::size_t k) const;
  /// Unimodular frame of maximal cone k (generators first).
  const IntMatrix &frame(std::size_t k) const { return frames_.at(k); }
  const IntMatrix &frame_inverse(std::size_t k) const {
    return frame_inverses_.at(k);
  }
  std::size_t max_cone_dim(std::size_t k) const {
    return max_cones_.at(k).size();
  }
  bool all_full_dimensional() const;
  /// Index of a maximal cone whose rays are exactly e_1..e_n.
  std::optional<std::size_t> standard_orthant() const;

  FanDescription description() const;

private:
  Fan() = default;

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
  std::vector<IntMatrix> frames_;
  std::vector<IntMatrix> frame_inverses_;
};

/// Support equals N_R: every maximal cone is full-dimensional and every facet
/// of a maximal cone lies in exactly two maximal cones.
bool is_complete(const Fan &f);

/// Gallery: projective_space(n), affine_space(n), product_p1_p1,
/// hirzebruch(a), blowup_c2.
Fan builtin_fan(const std::string &name, const std::vector<long> &params);

} // namespace torbiv
