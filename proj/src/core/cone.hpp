#ifndef MONFACES_CONE_HPP
#define MONFACES_CONE_HPP

#include <cstddef>
#include <vector>

#include "core/error.hpp"
#include "core/lattice.hpp"

namespace monfaces {

/// Rational polyhedral cone with both descriptions kept consistent.
///
/// The generator list is canonical: a +/- pair per lineality basis vector
/// followed by the extreme rays (reduced to canonical representatives modulo
/// the lineality and sorted). The inequality list is canonical in the same
/// way: a +/- pair per normal of the linear span followed by the proper
/// facet normals. Pointed full-dimensional cones therefore carry exactly
/// their extreme rays and facets.
class Cone {
 public:
  Cone() = default;

  std::size_t rank() const { return rank_; }
  /// Full generator list (lineality pairs first, then extreme rays).
  const std::vector<IntVec>& rays() const { return rays_; }
  /// Full inequality list (span equality pairs first, then facets).
  const std::vector<IntVec>& facets() const { return facets_; }

  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& extreme_rays() const { return extreme_rays_; }
  const std::vector<IntVec>& proper_facets() const { return proper_facets_; }
  const std::vector<IntVec>& span_normals() const { return span_normals_; }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return lineality_.empty() && extreme_rays_.empty(); }
  /// Dimension of the linear span.
  std::size_t dim() const;

  bool contains(const IntVec& x) const;
  /// True when x satisfies every facet strictly and every span equality.
  bool in_relative_interior(const IntVec& x) const;

  bool operator==(const Cone& other) const {
    return rank_ == other.rank_ && rays_ == other.rays_ &&
           facets_ == other.facets_;
  }

  friend Cone cone_from_rays(std::size_t, const std::vector<IntVec>&,
                             const Caps&);
  friend Cone cone_from_facets(std::size_t, const std::vector<IntVec>&,
                               const Caps&);

 private:
  std::size_t rank_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> extreme_rays_;
  std::vector<IntVec> proper_facets_;
  std::vector<IntVec> span_normals_;
};

/// Cone generated by the given vectors (redundant generators fine).
Cone cone_from_rays(std::size_t rank, const std::vector<IntVec>& generators,
                    const Caps& caps = Caps{});
/// Cone cut out by the given inequalities.
Cone cone_from_facets(std::size_t rank, const std::vector<IntVec>& inequalities,
                      const Caps& caps = Caps{});
/// Dual cone {y : <r, y> >= 0 for all rays r}.
Cone dual_cone(const Cone& cone, const Caps& caps = Caps{});

/// Face of a cone, identified by the sorted indices of the extreme rays
/// lying on it; every face implicitly contains the lineality space.
struct ConeFace {
  std::vector<std::size_t> ray_indices;

  bool operator==(const ConeFace& other) const {
    return ray_indices == other.ray_indices;
  }
  bool operator<(const ConeFace& other) const {
    if (ray_indices.size() != other.ray_indices.size())
      return ray_indices.size() < other.ray_indices.size();
    return ray_indices < other.ray_indices;
  }
};

/// All faces via intersection of facet incidence sets, canonically sorted
/// (by dimension proxy: ray count, then lexicographically).
std::vector<ConeFace> enumerate_faces(const Cone& cone);

/// Generators spanning the face's linear span: its rays plus the lineality.
std::vector<IntVec> face_span(const Cone& cone, const ConeFace& face);

/// Smallest face of `cone` containing all the given points (which must lie
/// in the cone).
ConeFace smallest_face_containing(const Cone& cone,
                                  const std::vector<IntVec>& points);

/// Equalizer cone {(p, q) : f p = g q} inside sigma1 x sigma2, with both
/// descriptions computed. f and g act on columns and share a target rank.
Cone cone_fiber_product(const Cone& sigma1, const IntegerMatrix& f,
                        const Cone& sigma2, const IntegerMatrix& g,
                        const Caps& caps = Caps{});

/// Unique minimal generating set of cone ∩ Z^n for a pointed cone:
/// triangulate over the ray list, enumerate the semi-open fundamental
/// parallelepiped of each simplicial piece through its bounding box, then
/// minimalize the union with the primitive ray generators.
std::vector<IntVec> hilbert_basis(const Cone& cone, const Caps& caps = Caps{});

/// Placing triangulation over the sorted extreme-ray list; returns simplex
/// ray-index sets. The cone must be pointed.
std::vector<std::vector<std::size_t>> triangulate(const Cone& cone,
                                                  const Caps& caps = Caps{});

/// Whether an integer unimodular change of coordinates carries one cone onto
/// the other (lineality onto lineality, extreme rays onto extreme rays).
bool unimodular_equivalent(const Cone& a, const Cone& b,
                           const Caps& caps = Caps{});

/// Membership of x in the monoid generated by the given vectors, decided by
/// bounded search (exact; used by saturation tests and decompositions).
bool in_generated_monoid(const std::vector<IntVec>& generators, const IntVec& x);

}  // namespace monfaces

#endif
