#ifndef MONFACES_LATTICE_HPP
#define MONFACES_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "core/bigint.hpp"
#include "core/error.hpp"

namespace monfaces {

/// Dense arbitrary-precision integer matrix, row-major.
///
/// Convention: lattice code treats vectors as ROW vectors and lattices as
/// row spans, so a basis is a list of rows and transforms multiply on the
/// matching side (H = U*A). Cone maps coming from the JSON surface act on
/// COLUMN vectors; use apply_col for those.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<IntVec> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r, IntVec(c)) {}
  explicit IntegerMatrix(std::vector<IntVec> rows_in);

  static IntegerMatrix identity(std::size_t n);

  IntVec& operator[](std::size_t i) { return data[i]; }
  const IntVec& operator[](std::size_t i) const { return data[i]; }

  bool operator==(const IntegerMatrix& other) const {
    return rows == other.rows && cols == other.cols && data == other.data;
  }
};

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& a);
/// Row vector times matrix: result[j] = sum_i x[i] * a[i][j].
IntVec row_times(const IntVec& x, const IntegerMatrix& a);
/// Matrix times column vector: result[i] = sum_j a[i][j] * x[j].
IntVec apply_col(const IntegerMatrix& a, const IntVec& x);

/// Exact determinant (fraction-free Bareiss elimination); square input.
Int determinant(const IntegerMatrix& a);
/// Adjugate, so a * adjugate(a) = det(a) * I.
IntegerMatrix adjugate(const IntegerMatrix& a);
/// Rank over the rationals.
std::size_t rational_rank(const IntegerMatrix& a);

/// Row-style Hermite normal form H = U * A with U unimodular: echelon rows,
/// positive pivots, entries above a pivot reduced into [0, pivot), zero rows
/// at the bottom.
struct HnfResult {
  IntegerMatrix h;
  IntegerMatrix u;
  /// (row, col) of each pivot, top to bottom.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t rank = 0;
};

HnfResult hermite_normal_form(const IntegerMatrix& a);

/// Whether v lies in the row lattice of the HNF'd matrix.
bool in_row_lattice(const HnfResult& hnf, const IntVec& v);
/// Canonical representative of v modulo the row lattice: pivot coordinates
/// reduced into [0, pivot) by floor division. Vectors are congruent mod the
/// lattice iff their representatives coincide.
IntVec reduce_mod_lattice(const HnfResult& hnf, IntVec v);

/// Smith normal form U * A * V = diag(divisors) with d1 | d2 | ...; the
/// divisor list keeps the nonzero entries only (so its length is the rank).
/// v_inv is maintained alongside V since callers need both directions.
struct SnfResult {
  IntVec divisors;
  IntegerMatrix u;
  IntegerMatrix v;
  IntegerMatrix v_inv;
  std::size_t rank = 0;
};

SnfResult smith_normal_form(const IntegerMatrix& a);

/// Basis of {x : x * A = 0} (kernel of the row action), as rows.
IntegerMatrix row_kernel(const IntegerMatrix& a);

/// Adapted basis for the saturation of the row span of `span_rows` inside
/// Z^n: basis_rows holds a full basis of Z^n whose first `rank` rows span
/// sat(L) and whose remaining rows span a complementary (saturated) summand.
/// coords_of expresses any vector in that basis exactly.
struct SublatticeSplit {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  IntegerMatrix basis_rows;  // n x n, unimodular
  IntegerMatrix coords;      // n x n with x * coords = coordinates of x

  IntVec coords_of(const IntVec& x) const { return row_times(x, coords); }
  IntVec from_coords(const IntVec& c) const { return row_times(c, basis_rows); }

  /// Coordinates in the saturated span (errors if x is outside the span).
  IntVec span_coords(const IntVec& x) const;
  /// Quotient Z^n -> Z^(n-rank) by the saturated span.
  IntVec quotient_coords(const IntVec& x) const;
  /// Integer section of the quotient, landing in the complement summand.
  IntVec quotient_lift(const IntVec& q) const;
};

SublatticeSplit split_by_span(const std::vector<IntVec>& span_rows,
                              std::size_t ambient);

}  // namespace monfaces

#endif
