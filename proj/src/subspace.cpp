#include "superomni/subspace.hpp"

#include <algorithm>

namespace superomni {

namespace linalg {

std::vector<std::size_t> rrefInPlace(std::vector<Row>& rows, const Field& field) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const Row& r) {
                              return std::all_of(r.begin(), r.end(),
                                                 [](const Scalar& c) { return c.isZero(); });
                            }),
             rows.end());
  if (rows.empty()) return {};
  const std::size_t ncols = rows.front().size();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col].isZero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Scalar inv = rows[rank][col].inverse();
    for (Scalar& c : rows[rank]) c *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].isZero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c2 = 0; c2 < ncols; ++c2) rows[r][c2] -= factor * rows[rank][c2];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank, Row(ncols, field.zero()));
  return pivots;
}

std::vector<Row> kernelBasis(std::vector<Row> conditions, std::size_t ncols, const Field& field) {
  std::vector<std::size_t> pivots = rrefInPlace(conditions, field);
  std::vector<bool> isPivot(ncols, false);
  for (std::size_t p : pivots) isPivot[p] = true;
  std::vector<Row> basis;
  for (std::size_t freeCol = 0; freeCol < ncols; ++freeCol) {
    if (isPivot[freeCol]) continue;
    Row v(ncols, field.zero());
    v[freeCol] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -conditions[r][freeCol];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Row> solveLinear(const std::vector<Row>& m, const Row& rhs, const Field& field) {
  if (m.size() != rhs.size()) throw Error("solve: rhs size mismatch");
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  std::vector<Row> aug(m);
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  std::vector<std::size_t> pivots = rrefInPlace(aug, field);
  Row x(ncols, field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == ncols) return std::nullopt;  // 0 = nonzero row
    x[pivots[r]] = aug[r][ncols];
  }
  return x;
}

}  // namespace linalg

GradedSubspace GradedSubspace::zero(const SuperSpace& ambient) {
  return GradedSubspace(ambient, {}, {});
}

GradedSubspace GradedSubspace::full(const SuperSpace& ambient) {
  std::vector<linalg::Row> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < ambient.dim(); ++i) {
    linalg::Row r(ambient.dim(), ambient.field().zero());
    r[i] = ambient.field().one();
    rows.push_back(std::move(r));
    pivots.push_back(i);
  }
  return GradedSubspace(ambient, std::move(rows), std::move(pivots));
}

GradedSubspace GradedSubspace::fromGenerators(const SuperSpace& ambient,
                                              const std::vector<SuperVector>& generators) {
  std::vector<linalg::Row> rows;
  for (const SuperVector& g : generators) {
    if (g.space() != ambient) throw Error("generator not in ambient space");
    for (Parity p : {Parity::even, Parity::odd}) {
      SuperVector part = g.parityPart(p);
      if (!part.isZero()) rows.push_back(part.coords());
    }
  }
  return fromHomogeneousRows(ambient, std::move(rows));
}

GradedSubspace GradedSubspace::fromHomogeneousRows(const SuperSpace& ambient,
                                                   std::vector<linalg::Row> rows) {
  std::vector<std::size_t> pivots = linalg::rrefInPlace(rows, ambient.field());
  return GradedSubspace(ambient, std::move(rows), std::move(pivots));
}

std::size_t GradedSubspace::evenDim() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < dim(); ++k)
    if (basisParity(k) == Parity::even) ++n;
  return n;
}

std::size_t GradedSubspace::oddDim() const { return dim() - evenDim(); }

SuperVector GradedSubspace::basisVector(std::size_t k) const {
  return SuperVector(m_ambient, m_rows.at(k));
}

Parity GradedSubspace::basisParity(std::size_t k) const {
  return m_ambient.parity(m_pivots.at(k));
}

std::optional<std::vector<Scalar>> GradedSubspace::coordinatesOf(const SuperVector& v) const {
  if (v.space() != m_ambient) throw Error("vector not in ambient space");
  // For a reduced echelon basis the coefficient on row k is v[pivot_k].
  std::vector<Scalar> coeffs;
  coeffs.reserve(dim());
  SuperVector rest = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    Scalar c = rest[m_pivots[k]];
    coeffs.push_back(c);
    if (!c.isZero()) rest = rest - basisVector(k).scaled(c);
  }
  if (!rest.isZero()) return std::nullopt;
  return coeffs;
}

bool GradedSubspace::contains(const SuperVector& v) const {
  return coordinatesOf(v).has_value();
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basisVector(k))) return false;
  return true;
}

GradedSubspace GradedSubspace::sum(const GradedSubspace& other) const {
  if (m_ambient != other.m_ambient) throw Error("ambient mismatch in subspace sum");
  std::vector<linalg::Row> rows(m_rows);
  rows.insert(rows.end(), other.m_rows.begin(), other.m_rows.end());
  return fromHomogeneousRows(m_ambient, std::move(rows));
}

GradedSubspace GradedSubspace::intersect(const GradedSubspace& other) const {
  if (m_ambient != other.m_ambient) throw Error("ambient mismatch in subspace intersection");
  // a*rows(this) = b*rows(other): kernel over the stacked coefficients.
  const Field& field = m_ambient.field();
  const std::size_t n = dim(), m = other.dim(), amb = m_ambient.dim();
  std::vector<linalg::Row> conditions;
  for (std::size_t col = 0; col < amb; ++col) {
    linalg::Row cond(n + m, field.zero());
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) {
      cond[r] = m_rows[r][col];
      nonzero = nonzero || !cond[r].isZero();
    }
    for (std::size_t r = 0; r < m; ++r) {
      cond[n + r] = -other.m_rows[r][col];
      nonzero = nonzero || !cond[n + r].isZero();
    }
    if (nonzero) conditions.push_back(std::move(cond));
  }
  std::vector<linalg::Row> rows;
  for (const linalg::Row& sol : linalg::kernelBasis(std::move(conditions), n + m, field)) {
    linalg::Row vec(amb, field.zero());
    for (std::size_t r = 0; r < n; ++r)
      if (!sol[r].isZero())
        for (std::size_t c = 0; c < amb; ++c) vec[c] += sol[r] * m_rows[r][c];
    rows.push_back(std::move(vec));
  }
  // Intersection of graded subspaces is graded; split parts anyway so the
  // rows fed to the canonicalizer are homogeneous.
  std::vector<SuperVector> gens;
  for (auto& r : rows) gens.emplace_back(m_ambient, std::move(r));
  return fromGenerators(m_ambient, gens);
}

bool GradedSubspace::operator==(const GradedSubspace& o) const {
  if (m_ambient != o.m_ambient) throw Error("ambient mismatch in subspace comparison");
  return m_rows == o.m_rows;
}

int GradedSubspace::compareCanonical(const GradedSubspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
  if (m_pivots != o.m_pivots) return m_pivots < o.m_pivots ? -1 : 1;
  for (std::size_t r = 0; r < m_rows.size(); ++r)
    for (std::size_t c = 0; c < m_rows[r].size(); ++c) {
      int cmp = m_rows[r][c].compare(o.m_rows[r][c]);
      if (cmp != 0) return cmp;
    }
  return 0;
}

std::string GradedSubspace::str() const {
  std::string out = "span{";
  for (std::size_t k = 0; k < dim(); ++k) {
    if (k) out += ", ";
    out += basisVector(k).str();
  }
  return out + "}";
}

GradedSubspace kernelOfMaps(const SuperSpace& domain, const std::vector<SuperMap>& maps) {
  const Field& field = domain.field();
  std::vector<linalg::Row> conditions;
  for (const SuperMap& m : maps) {
    if (m.domain() != domain) throw Error("kernel: map domain mismatch");
    for (Parity p : {Parity::even, Parity::odd}) {
      SuperMap part = m.parityPart(p);
      if (part.isZero()) continue;
      for (std::size_t r = 0; r < part.codomain().dim(); ++r) {
        linalg::Row cond(domain.dim(), field.zero());
        bool nonzero = false;
        for (std::size_t c = 0; c < domain.dim(); ++c) {
          cond[c] = part.entry(r, c);
          nonzero = nonzero || !cond[c].isZero();
        }
        if (nonzero) conditions.push_back(std::move(cond));
      }
    }
  }
  std::vector<SuperVector> gens;
  for (auto& r : linalg::kernelBasis(std::move(conditions), domain.dim(), field))
    gens.emplace_back(domain, std::move(r));
  return GradedSubspace::fromGenerators(domain, gens);
}

}  // namespace superomni
