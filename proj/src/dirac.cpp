#include "superomni/dirac.hpp"

#include <algorithm>

namespace superomni {

namespace {

void requireOmniAmbient(const SuperSpace& v, const GradedSubspace& l) {
  if (l.ambient() != omniSpace(v)) throw Error("subspace does not live in gl(V)+V for this V");
}

OmniElement rowElement(const SuperSpace& v, const GradedSubspace& l, std::size_t k) {
  return OmniElement::fromCoords(v, l.basisVector(k));
}

std::size_t enumerationDimCap() {
  if (const char* env = std::getenv("SUPEROMNI_MAX_DIM")) {
    long val = std::atol(env);
    if (val > 0) return static_cast<std::size_t>(val);
  }
  return 6;
}

}  // namespace

std::vector<SuperMap> adjointMap(const BracketTable& omega) {
  const SuperSpace& v = omega.space();
  std::vector<SuperMap> images;
  images.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::vector<SuperVector> columns;
    for (std::size_t j = 0; j < v.dim(); ++j) columns.push_back(omega.value(i, j));
    images.push_back(SuperMap::fromColumns(v, columns));
  }
  return images;
}

GradedSubspace graph(const BracketTable& omega) {
  const SuperSpace& v = omega.space();
  std::vector<SuperMap> ad = adjointMap(omega);
  std::vector<SuperVector> gens;
  for (std::size_t i = 0; i < v.dim(); ++i)
    gens.push_back((OmniElement(ad[i], SuperVector::basis(v, i))).toCoords());
  return GradedSubspace::fromGenerators(omniSpace(v), gens);
}

GradedSubspace orthogonalComplement(const SuperSpace& v, const GradedSubspace& l) {
  requireOmniAmbient(v, l);
  SuperSpace e = omniSpace(v);
  const Field& field = v.field();
  // e in L^perp iff <unit_c, l_r> = 0 for all r once extended bilinearly;
  // one condition row per (basis of L, output coordinate of V).
  std::vector<linalg::Row> conditions(l.dim() * v.dim(), linalg::Row(e.dim(), field.zero()));
  for (std::size_t c = 0; c < e.dim(); ++c) {
    OmniElement unit = OmniElement::basis(v, c);
    for (std::size_t r = 0; r < l.dim(); ++r) {
      SuperVector p = omniPairing(unit, rowElement(v, l, r));
      for (std::size_t o = 0; o < v.dim(); ++o) conditions[r * v.dim() + o][c] = p[o];
    }
  }
  std::vector<SuperVector> gens;
  for (auto& row : linalg::kernelBasis(std::move(conditions), e.dim(), field))
    gens.emplace_back(e, std::move(row));
  return GradedSubspace::fromGenerators(e, gens);
}

Verdict isMaximalIsotropic(const SuperSpace& v, const GradedSubspace& l) {
  GradedSubspace perp = orthogonalComplement(v, l);
  if (perp == l) return Verdict::ok("maximalIsotropic");
  return Verdict::fail("maximalIsotropic", {},
                       "L^perp has dimension " + std::to_string(perp.dim()) + ", L has " +
                           std::to_string(l.dim()),
                       {}, l.dim() < perp.dim() ? "L is a proper subspace of its complement"
                                                : "L is not isotropic");
}

Verdict isClosedUnderBracket(const SuperSpace& v, const GradedSubspace& l) {
  requireOmniAmbient(v, l);
  for (std::size_t r = 0; r < l.dim(); ++r)
    for (std::size_t s = 0; s < l.dim(); ++s) {
      OmniElement br = omniBracket(rowElement(v, l, r), rowElement(v, l, s));
      if (!l.contains(br.toCoords()))
        return Verdict::fail("closedUnderBracket",
                             {rowElement(v, l, r).str(), rowElement(v, l, s).str()}, br.str());
    }
  return Verdict::ok("closedUnderBracket");
}

DiracVerdict isDirac(const SuperSpace& v, const GradedSubspace& l) {
  return DiracVerdict{isMaximalIsotropic(v, l), isClosedUnderBracket(v, l)};
}

GraphEquivalence graphIsDiracIffLie(const BracketTable& omega, Exec exec) {
  GraphEquivalence out{checkLieSuperalgebra(omega, exec), isDirac(omega.space(), graph(omega))};
  return out;
}

CharacteristicPair extractCharacteristicPair(const SuperSpace& v, const GradedSubspace& l) {
  requireOmniAmbient(v, l);
  Verdict maximal = isMaximalIsotropic(v, l);
  if (!maximal) throw Error("characteristic pair needs a maximal isotropic subspace");
  SuperSpace gl = glSpace(v);
  const Field& field = v.field();
  const std::size_t glDim = gl.dim();

  // D = L n gl(V); D^0 = projection of L to V
  std::vector<SuperVector> glGens;
  for (std::size_t a = 0; a < glDim; ++a) glGens.push_back(OmniElement::basis(v, a).toCoords());
  GradedSubspace meets = l.intersect(GradedSubspace::fromGenerators(omniSpace(v), glGens));
  std::vector<linalg::Row> dRows;
  for (std::size_t r = 0; r < meets.dim(); ++r) {
    SuperVector row = meets.basisVector(r);
    dRows.emplace_back(row.coords().begin(), row.coords().begin() + glDim);
  }
  GradedSubspace d = GradedSubspace::fromHomogeneousRows(gl, std::move(dRows));
  std::vector<SuperVector> projections;
  for (std::size_t r = 0; r < l.dim(); ++r) {
    SuperVector row = l.basisVector(r);
    SuperVector vPart(v, {row.coords().begin() + glDim, row.coords().end()});
    if (!vPart.isZero()) projections.push_back(std::move(vPart));
  }
  GradedSubspace d0 = GradedSubspace::fromGenerators(v, projections);

  // Section: for each canonical basis x of D^0 pick the first echelon
  // solution A_x with A_x + x in L.
  std::vector<SuperMap> pi;
  for (std::size_t k = 0; k < d0.dim(); ++k) {
    SuperVector x = d0.basisVector(k);
    std::vector<linalg::Row> m(v.dim(), linalg::Row(l.dim(), field.zero()));
    linalg::Row rhs(v.dim(), field.zero());
    for (std::size_t o = 0; o < v.dim(); ++o) {
      rhs[o] = x[o];
      for (std::size_t r = 0; r < l.dim(); ++r) m[o][r] = l.basisVector(r)[glDim + o];
    }
    auto coeffs = linalg::solveLinear(m, rhs, field);
    if (!coeffs) throw Error("projection of L misses a D^0 basis vector");  // cannot happen
    SuperVector glCoordsOfA = SuperVector::zero(gl);
    for (std::size_t r = 0; r < l.dim(); ++r)
      if (!(*coeffs)[r].isZero()) {
        SuperVector row = l.basisVector(r);
        glCoordsOfA.addScaled(SuperVector(gl, {row.coords().begin(), row.coords().begin() + glDim}),
                              (*coeffs)[r]);
      }
    pi.push_back(SuperMap::fromGlCoords(v, glCoordsOfA));
  }
  return CharacteristicPair{v, std::move(d), std::move(d0), std::move(pi)};
}

PairVerdicts checkCharacteristicPair(const CharacteristicPair& pair) {
  const SuperSpace& v = pair.v;
  const GradedSubspace& d = pair.d;
  const GradedSubspace& d0 = pair.d0;
  if (d.ambient() != glSpace(v) || d0.ambient() != v) throw Error("characteristic pair ambient mismatch");
  if (pair.pi.size() != d0.dim()) throw Error("pi must list one image per D^0 basis vector");

  // Type invariant: pi super skew on D^0.
  for (std::size_t a = 0; a < d0.dim(); ++a)
    for (std::size_t b = 0; b < d0.dim(); ++b) {
      SuperVector r = pair.pi[a].apply(d0.basisVector(b));
      SuperVector s = pair.pi[b].apply(d0.basisVector(a));
      r = koszulSign(d0.basisParity(a), d0.basisParity(b)) < 0 ? r - s : r + s;
      if (!r.isZero()) throw Error("pi is not super skew on D^0");
    }

  PairVerdicts out{Verdict::ok("subalgebra"), Verdict::ok("curvatureInD"), Verdict::ok("closureInD0")};

  for (std::size_t a = 0; a < d.dim() && out.subalgebra.pass; ++a)
    for (std::size_t b = 0; b < d.dim(); ++b) {
      SuperMap x = SuperMap::fromGlCoords(v, d.basisVector(a));
      SuperMap y = SuperMap::fromGlCoords(v, d.basisVector(b));
      SuperVector br = superCommutator(x, y).glCoords();
      if (!d.contains(br)) {
        out.subalgebra = Verdict::fail("subalgebra", {x.str(), y.str()}, br.str(), {},
                                       "[D,D] leaves D");
        break;
      }
    }

  for (std::size_t a = 0; a < d0.dim() && out.closure.pass; ++a)
    for (std::size_t b = 0; b < d0.dim(); ++b) {
      SuperVector val = pair.pi[a].apply(d0.basisVector(b));
      if (!d0.contains(val)) {
        out.closure = Verdict::fail("closureInD0",
                                    {d0.basisVector(a).str(), d0.basisVector(b).str()}, val.str(),
                                    {}, "pi(x,y) leaves D^0");
        break;
      }
    }

  for (std::size_t a = 0; a < d0.dim() && out.curvature.pass; ++a)
    for (std::size_t b = 0; b < d0.dim(); ++b) {
      SuperVector val = pair.pi[a].apply(d0.basisVector(b));
      auto coords = d0.coordinatesOf(val);
      if (!coords) {
        out.curvature = Verdict::fail("curvatureInD",
                                      {d0.basisVector(a).str(), d0.basisVector(b).str()}, val.str(),
                                      {}, "pi(pi(x,y)) undefined: pi(x,y) leaves D^0");
        break;
      }
      SuperMap piOfVal = SuperMap::zero(v, v);
      for (std::size_t k = 0; k < d0.dim(); ++k)
        if (!(*coords)[k].isZero()) piOfVal = piOfVal + pair.pi[k].scaled((*coords)[k]);
      SuperMap defect = piOfVal - superCommutator(pair.pi[a], pair.pi[b]);
      if (!d.contains(defect.glCoords())) {
        out.curvature = Verdict::fail("curvatureInD",
                                      {d0.basisVector(a).str(), d0.basisVector(b).str()},
                                      defect.str(), {}, "pi(pi(x,y)) - [pi(x),pi(y)] leaves D");
        break;
      }
    }
  return out;
}

GradedSubspace buildMaximalIsotropic(const SuperSpace& v, const GradedSubspace& d,
                                     const std::vector<SuperMap>& piGlobal) {
  if (d.ambient() != glSpace(v)) throw Error("D must be a subspace of gl(V)");
  if (piGlobal.size() != v.dim()) throw Error("pi must list one image per basis of V");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!piGlobal[i].isEndomorphism() || piGlobal[i].domain() != v)
      throw Error("pi images must be endomorphisms of V");
    if (!piGlobal[i].isHomogeneous(v.parity(i)))
      throw Error("pi(" + v.name(i) + ") is not homogeneous of parity |" + v.name(i) + "|");
  }
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      SuperVector r = piGlobal[i].apply(SuperVector::basis(v, j));
      SuperVector s = piGlobal[j].apply(SuperVector::basis(v, i));
      r = koszulSign(v.parity(i), v.parity(j)) < 0 ? r - s : r + s;
      if (!r.isZero()) throw Error("pi is not super skew");
    }

  std::vector<SuperMap> dMaps;
  for (std::size_t k = 0; k < d.dim(); ++k) dMaps.push_back(SuperMap::fromGlCoords(v, d.basisVector(k)));
  GradedSubspace d0 = kernelOfMaps(v, dMaps);

  std::vector<SuperVector> gens;
  for (std::size_t k = 0; k < d.dim(); ++k)
    gens.push_back(OmniElement::fromMap(dMaps[k]).toCoords());
  for (std::size_t k = 0; k < d0.dim(); ++k) {
    SuperVector x = d0.basisVector(k);
    SuperMap piX = SuperMap::zero(v, v);
    for (std::size_t c = 0; c < v.dim(); ++c)
      if (!x[c].isZero()) piX = piX + piGlobal[c].scaled(x[c]);
    gens.push_back(OmniElement(piX, x).toCoords());
  }
  return GradedSubspace::fromGenerators(omniSpace(v), gens);
}

SuperSpace canonicalBasisSpace(const SuperSpace& v, const GradedSubspace& w) {
  if (w.ambient() != v) throw Error("subspace does not live in V");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  bool unitNames = true;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    SuperVector row = w.basisVector(k);
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < v.dim(); ++c)
      if (!row[c].isZero()) ++nonzero;
    if (nonzero == 1 && row[w.pivots()[k]].isOne())
      names.push_back(v.name(w.pivots()[k]));
    else {
      names.push_back("w" + std::to_string(k + 1));
      unitNames = false;
    }
    parities.push_back(w.basisParity(k));
  }
  if (!unitNames) {
    // avoid clashes between synthesized and coordinate names
    std::vector<std::string> unique(names);
    std::sort(unique.begin(), unique.end());
    if (std::adjacent_find(unique.begin(), unique.end()) != unique.end())
      for (std::size_t k = 0; k < names.size(); ++k) names[k] = "w" + std::to_string(k + 1);
  }
  return SuperSpace::frame(v.field(), std::move(names), std::move(parities));
}

SubspaceLie lieFromDirac(const SuperSpace& v, const GradedSubspace& l) {
  DiracVerdict dv = isDirac(v, l);
  if (!dv.pass())
    throw Error(std::string("not a Dirac structure: ") +
                (dv.maximalIsotropic.pass ? "not closed under the bracket" : "not maximal isotropic"));
  CharacteristicPair pair = extractCharacteristicPair(v, l);
  SuperSpace basisSpace = canonicalBasisSpace(v, pair.d0);
  const GradedSubspace& w = pair.d0;
  BracketTable table = BracketTable::build(basisSpace, [&](std::size_t a, std::size_t b) {
    SuperVector val = pair.pi[a].apply(w.basisVector(b));
    auto coords = w.coordinatesOf(val);
    if (!coords) throw Error("Dirac bracket left D^0");  // excluded by bracket closure
    return SuperVector(basisSpace, std::move(*coords));
  });
  return SubspaceLie{std::move(pair.d0), std::move(basisSpace), std::move(table)};
}

GradedSubspace diracFromLie(const SuperSpace& v, const GradedSubspace& w,
                            const BracketTable& tableOnW) {
  if (w.ambient() != v) throw Error("W must be a subspace of V");
  const SuperSpace& ws = tableOnW.space();
  if (ws.field() != v.field() || ws.dim() != w.dim())
    throw Error("table frame does not match W");
  for (std::size_t k = 0; k < w.dim(); ++k)
    if (ws.parity(k) != w.basisParity(k)) throw Error("table frame parity does not match W");
  Report lie = checkLieSuperalgebra(tableOnW);
  if (!lie.pass()) throw Error("diracFromLie needs a Lie superalgebra structure on W");

  const Field& field = v.field();
  SuperSpace gl = glSpace(v);

  // D = W^0 = {X : X(W) = 0}
  std::vector<linalg::Row> conditions;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    SuperVector row = w.basisVector(k);
    for (std::size_t o = 0; o < v.dim(); ++o) {
      linalg::Row cond(gl.dim(), field.zero());
      for (std::size_t c = 0; c < v.dim(); ++c) cond[glCoord(v, o, c)] = row[c];
      conditions.push_back(std::move(cond));
    }
  }
  std::vector<SuperVector> dGens;
  for (auto& r : linalg::kernelBasis(std::move(conditions), gl.dim(), field))
    dGens.emplace_back(gl, std::move(r));
  GradedSubspace d = GradedSubspace::fromGenerators(gl, dGens);

  // pi = ad on W, zero on the echelon complement of W, extended linearly.
  auto wPart = [&](std::size_t c) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < w.dim(); ++k)
      if (w.pivots()[k] == c) return k;
    return std::nullopt;
  };
  auto pushToV = [&](const SuperVector& abstract) {
    SuperVector out = SuperVector::zero(v);
    for (std::size_t k = 0; k < w.dim(); ++k)
      if (!abstract[k].isZero()) out.addScaled(w.basisVector(k), abstract[k]);
    return out;
  };
  std::vector<SuperMap> pi;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    auto rowC = wPart(c);
    if (!rowC) {
      pi.push_back(SuperMap::zero(v, v));
      continue;
    }
    std::vector<SuperVector> columns;
    for (std::size_t c2 = 0; c2 < v.dim(); ++c2) {
      auto rowC2 = wPart(c2);
      if (!rowC2) {
        columns.push_back(SuperVector::zero(v));
        continue;
      }
      columns.push_back(pushToV(tableOnW.value(*rowC, *rowC2)));
    }
    pi.push_back(SuperMap::fromColumns(v, columns));
  }
  return buildMaximalIsotropic(v, d, pi);
}

void forEachGradedSubspace(const SuperSpace& ambient,
                           const std::function<void(const GradedSubspace&)>& fn) {
  const Field& field = ambient.field();
  const long p = field.prime();
  if (p == 0) throw Error("subspace enumeration needs a finite field");

  std::vector<std::size_t> evenCols, oddCols;
  for (std::size_t i = 0; i < ambient.dim(); ++i)
    (ambient.parity(i) == Parity::even ? evenCols : oddCols).push_back(i);

  // all RREF shapes within one parity block
  struct Shape {
    std::vector<std::size_t> pivots;                          // ambient columns
    std::vector<std::pair<std::size_t, std::size_t>> slots;   // (row, ambient column)
  };
  auto blockShapes = [&](const std::vector<std::size_t>& cols) {
    std::vector<Shape> shapes;
    const std::size_t n = cols.size();
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::size_t> comb(k);
      for (std::size_t i = 0; i < k; ++i) comb[i] = i;
      while (true) {
        Shape sh;
        for (std::size_t i = 0; i < k; ++i) sh.pivots.push_back(cols[comb[i]]);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = comb[r] + 1; c < n; ++c)
            if (std::find(comb.begin(), comb.end(), c) == comb.end())
              sh.slots.emplace_back(r, cols[c]);
        shapes.push_back(std::move(sh));
        if (k == 0) break;
        // next combination
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
      if (k == 0 && n == 0) break;
    }
    return shapes;
  };

  std::vector<Shape> evenShapes = blockShapes(evenCols);
  std::vector<Shape> oddShapes = blockShapes(oddCols);

  std::vector<linalg::Row> rows;
  for (const Shape& se : evenShapes)
    for (const Shape& so : oddShapes) {
      const std::size_t nSlots = se.slots.size() + so.slots.size();
      std::vector<long> digits(nSlots, 0);
      while (true) {
        rows.clear();
        auto emit = [&](const Shape& sh, std::size_t digitOffset) {
          for (std::size_t r = 0; r < sh.pivots.size(); ++r) {
            linalg::Row row(ambient.dim(), field.zero());
            row[sh.pivots[r]] = field.one();
            for (std::size_t s = 0; s < sh.slots.size(); ++s)
              if (sh.slots[s].first == r)
                row[sh.slots[s].second] = field.fromLong(digits[digitOffset + s]);
            rows.push_back(std::move(row));
          }
        };
        emit(se, 0);
        emit(so, se.slots.size());
        fn(GradedSubspace::fromHomogeneousRows(ambient, rows));
        // odometer
        std::size_t d = 0;
        while (d < nSlots && digits[d] == p - 1) digits[d++] = 0;
        if (d == nSlots) break;
        ++digits[d];
      }
    }
}

void forEachGradedBracket(const SuperSpace& v,
                          const std::function<void(const BracketTable&)>& fn) {
  const Field& field = v.field();
  const long p = field.prime();
  if (p == 0) throw Error("bracket enumeration needs a finite field");
  // free coordinates: for each ordered pair (i,j), the coordinates of V
  // with parity |i|+|j|
  struct Slot {
    std::size_t i, j, coord;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      for (std::size_t c = 0; c < v.dim(); ++c)
        if (v.parity(c) == v.parity(i) + v.parity(j)) slots.push_back({i, j, c});
  std::vector<long> digits(slots.size(), 0);
  while (true) {
    std::vector<SuperVector> values(v.dim() * v.dim(), SuperVector::zero(v));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (digits[s] != 0)
        values[slots[s].i * v.dim() + slots[s].j] =
            values[slots[s].i * v.dim() + slots[s].j] +
            SuperVector::basis(v, slots[s].coord).scaled(field.fromLong(digits[s]));
    fn(BracketTable(v, std::move(values)));
    std::size_t d = 0;
    while (d < slots.size() && digits[d] == p - 1) digits[d++] = 0;
    if (d == slots.size()) break;
    ++digits[d];
  }
}

void forEachLieStructure(const SuperSpace& v, const std::function<void(const SubspaceLie&)>& fn) {
  const Field& field = v.field();
  const long p = field.prime();
  if (p == 0) throw Error("structure enumeration needs a finite field");
  forEachGradedSubspace(v, [&](const GradedSubspace& w) {
    SuperSpace ws = canonicalBasisSpace(v, w);
    const std::size_t n = ws.dim();
    // free slots: (a < b) pairs plus odd diagonals, valued in the matching
    // parity component of W; even diagonals are forced to zero by skewness
    struct Slot {
      std::size_t a, b, coord;
    };
    std::vector<Slot> slots;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        if (a == b && ws.parity(a) == Parity::even) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (ws.parity(c) == ws.parity(a) + ws.parity(b)) slots.push_back({a, b, c});
      }
    std::vector<long> digits(slots.size(), 0);
    while (true) {
      std::vector<SuperVector> values(n * n, SuperVector::zero(ws));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (digits[s] != 0)
          values[slots[s].a * n + slots[s].b] =
              values[slots[s].a * n + slots[s].b] +
              SuperVector::basis(ws, slots[s].coord).scaled(field.fromLong(digits[s]));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b) {
          SuperVector val = values[b * n + a];
          values[a * n + b] =
              koszulSign(ws.parity(a), ws.parity(b)) < 0 ? val : -val;
        }
      BracketTable table(ws, std::move(values));
      if (checkSuperJacobi(table, Exec::serial).pass) fn(SubspaceLie{w, ws, table});
      std::size_t d = 0;
      while (d < slots.size() && digits[d] == p - 1) digits[d++] = 0;
      if (d == slots.size()) break;
      ++digits[d];
    }
  });
}

DiracCensus enumerateDirac(const SuperSpace& v, Exec exec) {
  const long p = v.field().prime();
  if (p == 0) throw Error("Dirac enumeration needs a finite field");
  if (p == 3) throw Error("Dirac enumeration requires p not in {2,3}");
  SuperSpace e = omniSpace(v);
  if (e.dim() > enumerationDimCap())
    throw Error("dim gl(V)+V = " + std::to_string(e.dim()) + " exceeds the enumeration cap " +
                std::to_string(enumerationDimCap()) + " (override with SUPEROMNI_MAX_DIM)");
  if (p > 5)
    throw Error("enumeration over F_p is capped at p <= 5");

  DiracCensus census;

  // batches keep memory flat while letting isDirac run in parallel
  std::vector<GradedSubspace> batch;
  auto flush = [&]() {
    if (batch.empty()) return;
    std::vector<char> good(batch.size(), 0);
    auto evaluate = [&](std::size_t i) {
      // cheap isotropy filter before the complement computation
      const GradedSubspace& cand = batch[i];
      for (std::size_t r = 0; r < cand.dim(); ++r)
        for (std::size_t s = r; s < cand.dim(); ++s)
          if (!omniPairing(rowElement(v, cand, r), rowElement(v, cand, s)).isZero()) return false;
      return isDirac(v, cand).pass();
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
      for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
        good[i] = evaluate(static_cast<std::size_t>(i)) ? 1 : 0;
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) good[i] = evaluate(i) ? 1 : 0;
    }
    for (std::size_t i = 0; i < batch.size(); ++i)
      if (good[i]) census.diracs.push_back(batch[i]);
    batch.clear();
  };
  forEachGradedSubspace(e, [&](const GradedSubspace& cand) {
    batch.push_back(cand);
    if (batch.size() >= 512) flush();
  });
  flush();
  std::sort(census.diracs.begin(), census.diracs.end(),
            [](const GradedSubspace& a, const GradedSubspace& b) {
              return a.compareCanonical(b) < 0;
            });

  std::vector<SubspaceLie> structures;
  forEachLieStructure(v, [&](const SubspaceLie& s) { structures.push_back(s); });
  census.lieStructureCount = structures.size();

  // bijection: counts agree and the two maps are mutually inverse
  census.bijectionHolds = true;
  if (census.diracs.size() != structures.size()) {
    census.bijectionHolds = false;
    census.failure = "count mismatch: " + std::to_string(census.diracs.size()) +
                     " Dirac structures vs " + std::to_string(structures.size()) +
                     " (W, Lie structure) pairs";
    return census;
  }
  std::vector<char> used(structures.size(), 0);
  for (const GradedSubspace& l : census.diracs) {
    SubspaceLie fromL = lieFromDirac(v, l);
    if (diracFromLie(v, fromL.w, fromL.table) != l) {
      census.bijectionHolds = false;
      census.failure = "diracFromLie(lieFromDirac(L)) != L for L = " + l.str();
      return census;
    }
    bool matched = false;
    for (std::size_t s = 0; s < structures.size(); ++s) {
      if (used[s] || structures[s].w != fromL.w || structures[s].table != fromL.table) continue;
      used[s] = 1;
      matched = true;
      break;
    }
    if (!matched) {
      census.bijectionHolds = false;
      census.failure = "lieFromDirac produced an unlisted structure for L = " + l.str();
      return census;
    }
  }
  for (const SubspaceLie& s : structures) {
    GradedSubspace l = diracFromLie(v, s.w, s.table);
    SubspaceLie back = lieFromDirac(v, l);
    if (back.w != s.w || back.table != s.table) {
      census.bijectionHolds = false;
      census.failure = "lieFromDirac(diracFromLie(W, table)) changed the structure on W = " + s.w.str();
      return census;
    }
  }
  return census;
}

}  // namespace superomni
