#ifndef SUPEROMNI_SUBSPACE_HPP
#define SUPEROMNI_SUBSPACE_HPP

#include "superomni/map.hpp"

namespace superomni {

namespace linalg {

using Row = std::vector<Scalar>;

/// Reduced row echelon form: pivots normalized to 1, eliminated above and
/// below, zero rows dropped, rows ordered by pivot column. Returns pivots.
std::vector<std::size_t> rrefInPlace(std::vector<Row>& rows, const Field& field);

/// Basis of {x : M x = 0}, each condition a row of M over ncols unknowns.
std::vector<Row> kernelBasis(std::vector<Row> conditions, std::size_t ncols, const Field& field);

/// One solution of M x = rhs, or nullopt if inconsistent.
std::optional<Row> solveLinear(const std::vector<Row>& m, const Row& rhs, const Field& field);

}  // namespace linalg

/// Parity-graded subspace of a SuperSpace, held as a canonical
/// reduced-echelon basis of homogeneous rows. Two graded subspaces are
/// equal iff their canonical bases are identical.
class GradedSubspace {
public:
  static GradedSubspace zero(const SuperSpace& ambient);
  static GradedSubspace full(const SuperSpace& ambient);
  /// Span of the generators' homogeneous parts (feeding non-homogeneous
  /// generators grades the span). Idempotent and order-independent.
  static GradedSubspace fromGenerators(const SuperSpace& ambient,
                                       const std::vector<SuperVector>& generators);
  /// Rows must already be homogeneous; they are canonicalized here.
  static GradedSubspace fromHomogeneousRows(const SuperSpace& ambient,
                                            std::vector<linalg::Row> rows);

  const SuperSpace& ambient() const { return m_ambient; }
  std::size_t dim() const { return m_rows.size(); }
  std::size_t evenDim() const;
  std::size_t oddDim() const;
  SuperVector basisVector(std::size_t k) const;
  Parity basisParity(std::size_t k) const;
  const std::vector<std::size_t>& pivots() const { return m_pivots; }

  bool contains(const SuperVector& v) const;
  bool contains(const GradedSubspace& other) const;
  /// Coefficients of v over the canonical basis, or nullopt if v is outside.
  std::optional<std::vector<Scalar>> coordinatesOf(const SuperVector& v) const;

  GradedSubspace intersect(const GradedSubspace& other) const;
  GradedSubspace sum(const GradedSubspace& other) const;

  bool operator==(const GradedSubspace& o) const;
  bool operator!=(const GradedSubspace& o) const { return !(*this == o); }
  /// Total order on subspaces of one ambient, for deterministic censuses.
  int compareCanonical(const GradedSubspace& o) const;

  std::string str() const;

private:
  GradedSubspace(SuperSpace ambient, std::vector<linalg::Row> rows,
                 std::vector<std::size_t> pivots)
      : m_ambient(std::move(ambient)), m_rows(std::move(rows)), m_pivots(std::move(pivots)) {}

  SuperSpace m_ambient;
  std::vector<linalg::Row> m_rows;
  std::vector<std::size_t> m_pivots;
};

/// {x : X(x) = 0 for every homogeneous part X of every listed map}; the
/// graded interior of the joint kernel, and the exact joint kernel when the
/// maps are homogeneous. Empty list gives all of `domain`.
GradedSubspace kernelOfMaps(const SuperSpace& domain, const std::vector<SuperMap>& maps);

}  // namespace superomni

#endif
