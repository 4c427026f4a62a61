#pragma once

// Exact integer lattices and rational polytopes.
//
// Lattices are stored by their canonical row-style Hermite basis, so two
// lattices compare equal exactly when they are equal as subgroups of Z^n.
// Polytopes are stored by their (lexicographically sorted) vertex set.
// Convex hulls are computed by the double description method on the
// homogenized point set, entirely in GMP arithmetic; the practical cap is
// affine dimension 6.

#include "asymult/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace asymult {

class IntegerLattice {
 public:
  // Lattice generated by `generators` inside Z^ambient_dim.
  IntegerLattice(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  static IntegerLattice standard(std::size_t dim);
  static IntegerLattice zero(std::size_t dim) { return IntegerLattice(dim, {}); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  // Integer coordinates of v in the Hermite basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  // Rational coordinates of v in the Hermite basis, if v lies in the real span.
  std::optional<RatVector> rational_coordinates(const RatVector& v) const;

  bool operator==(const IntegerLattice& other) const = default;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> basis_;
};

// Canonical Hermite basis of the integer span of `vectors`.
IntegerLattice hermite_basis(const std::vector<IntVector>& vectors);
IntegerLattice hermite_basis(std::size_t ambient_dim, const std::vector<IntVector>& vectors);

// Index [sup : sub]. Throws std::domain_error("infinite index") on rank
// mismatch and std::domain_error("not a sublattice") when sub is not contained in sup.
Integer sublattice_index(const IntegerLattice& sup, const IntegerLattice& sub);

// Basis of {x in Z^n : <b, x> = 0 for every b in `rows`}.
IntegerLattice integer_kernel(std::size_t n, const std::vector<IntVector>& rows);

// (real span of L) ∩ Z^n.
IntegerLattice saturation(const IntegerLattice& lattice);

class RationalPolytope {
 public:
  RationalPolytope() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  // -1 for the empty polytope.
  int affine_dim() const { return affine_dim_; }
  bool empty() const { return affine_dim_ < 0; }

  bool operator==(const RationalPolytope& other) const = default;

 private:
  friend RationalPolytope convex_hull(std::size_t ambient_dim, const std::vector<RatVector>& points);

  std::size_t ambient_dim_ = 0;
  std::vector<RatVector> vertices_;
  int affine_dim_ = -1;
};

RationalPolytope convex_hull(std::size_t ambient_dim, const std::vector<RatVector>& points);
// Convenience overload; the point list must be nonempty.
RationalPolytope convex_hull(const std::vector<RatVector>& points);

bool contains(const RationalPolytope& polytope, const RatVector& point);

// Volume of the polytope measured in lattice units: the Euclidean volume of
// its image under a coordinate map of `lattice`. Lower-dimensional polytopes
// have volume 0; a single point has volume 1. Throws std::domain_error when
// the polytope's affine span is not parallel to a subspace of the lattice span.
Rational lattice_volume(const RationalPolytope& polytope, const IntegerLattice& lattice);

// Euclidean volume of a polytope that is full dimensional in Q^k.
Rational euclidean_volume(const RationalPolytope& polytope);

// Fan triangulation from the lexicographically smallest vertex; each simplex
// is returned as affine_dim + 1 points.
std::vector<std::vector<RatVector>> fan_triangulation(const RationalPolytope& polytope);

// Affine dimension of a point set (-1 when empty).
int affine_dimension(const std::vector<RatVector>& points);

}  // namespace asymult
