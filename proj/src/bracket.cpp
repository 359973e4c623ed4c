#include "superomni/bracket.hpp"

namespace superomni {

namespace {

std::vector<std::string> names(const SuperSpace& s, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(s.name(i));
  return out;
}

std::vector<std::pair<std::string, std::string>> coordsOf(const SuperVector& v) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].isZero()) out.emplace_back(v.space().name(i), v[i].str());
  return out;
}

Verdict failAt(const std::string& check, const SuperSpace& s,
               std::initializer_list<std::size_t> tuple, const SuperVector& residual,
               const std::string& note = "") {
  return Verdict::fail(check, names(s, tuple), residual.str(), coordsOf(residual), note);
}

}  // namespace

BracketTable::BracketTable(SuperSpace space, std::vector<SuperVector> values)
    : m_space(std::move(space)), m_values(std::move(values)) {
  if (m_values.size() != m_space.dim() * m_space.dim())
    throw Error("bracket table needs one value per ordered basis pair");
  for (const SuperVector& v : m_values)
    if (v.space() != m_space) throw Error("bracket value outside its space");
}

BracketTable BracketTable::zero(const SuperSpace& space) {
  return BracketTable(space,
                      std::vector<SuperVector>(space.dim() * space.dim(), SuperVector::zero(space)));
}

BracketTable BracketTable::build(const SuperSpace& space,
                                 const std::function<SuperVector(std::size_t, std::size_t)>& value) {
  std::vector<SuperVector> values;
  values.reserve(space.dim() * space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i)
    for (std::size_t j = 0; j < space.dim(); ++j) values.push_back(value(i, j));
  return BracketTable(space, std::move(values));
}

SuperVector BracketTable::evaluate(const SuperVector& x, const SuperVector& y) const {
  if (x.space() != m_space || y.space() != m_space) throw Error("bracket argument space mismatch");
  SuperVector out = SuperVector::zero(m_space);
  for (std::size_t i = 0; i < m_space.dim(); ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < m_space.dim(); ++j) {
      if (y[j].isZero()) continue;
      out.addScaled(value(i, j), x[i] * y[j]);
    }
  }
  return out;
}

bool BracketTable::operator==(const BracketTable& o) const {
  return m_space == o.m_space && m_values == o.m_values;
}

Verdict checkGraded(const BracketTable& omega) {
  const SuperSpace& s = omega.space();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!omega.value(i, j).isHomogeneous(s.parity(i) + s.parity(j)))
        return failAt("graded", s, {i, j}, omega.value(i, j),
                      "value is not homogeneous of parity |" + s.name(i) + "|+|" + s.name(j) + "|");
  return Verdict::ok("graded");
}

Verdict checkSuperSkew(const BracketTable& omega) {
  const SuperSpace& s = omega.space();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      SuperVector r = omega.value(i, j);
      int sign = koszulSign(s.parity(i), s.parity(j));
      r = sign < 0 ? r - omega.value(j, i) : r + omega.value(j, i);
      if (!r.isZero()) return failAt("superSkew", s, {i, j}, r);
    }
  return Verdict::ok("superSkew");
}

namespace {

// (-1)^{|k||i|}[[b_i,b_j],b_k] + (-1)^{|i||j|}[[b_j,b_k],b_i] + (-1)^{|j||k|}[[b_k,b_i],b_j]
SuperVector jacobiResidual(const BracketTable& omega, std::size_t i, std::size_t j, std::size_t k) {
  const SuperSpace& s = omega.space();
  auto term = [&](std::size_t a, std::size_t b, std::size_t c, int sign) {
    SuperVector v = omega.evaluate(omega.value(a, b), s.basisVector(c));
    return sign < 0 ? -v : v;
  };
  SuperVector out = term(i, j, k, koszulSign(s.parity(k), s.parity(i)));
  out = out + term(j, k, i, koszulSign(s.parity(i), s.parity(j)));
  out = out + term(k, i, j, koszulSign(s.parity(j), s.parity(k)));
  return out;
}

SuperVector leibnizResidual(const BracketTable& circ, std::size_t i, std::size_t j, std::size_t k) {
  const SuperSpace& s = circ.space();
  SuperVector lhs = circ.evaluate(s.basisVector(i), circ.value(j, k));
  SuperVector rhs = circ.evaluate(circ.value(i, j), s.basisVector(k));
  SuperVector mid = circ.evaluate(s.basisVector(j), circ.value(i, k));
  rhs = koszulSign(s.parity(i), s.parity(j)) < 0 ? rhs - mid : rhs + mid;
  return lhs - rhs;
}

}  // namespace

Verdict checkSuperJacobi(const BracketTable& omega, Exec exec) {
  const SuperSpace& s = omega.space();
  const std::size_t n = s.dim();
  auto holds = [&](std::size_t flat) {
    std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
    return jacobiResidual(omega, i, j, k).isZero();
  };
  if (auto bad = firstFailure(n * n * n, exec, holds)) {
    std::size_t k = *bad % n, j = (*bad / n) % n, i = *bad / (n * n);
    return failAt("superJacobi", s, {i, j, k}, jacobiResidual(omega, i, j, k));
  }
  return Verdict::ok("superJacobi");
}

Verdict checkLeibnizRule(const BracketTable& circ, Exec exec) {
  const SuperSpace& s = circ.space();
  const std::size_t n = s.dim();
  auto holds = [&](std::size_t flat) {
    std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
    return leibnizResidual(circ, i, j, k).isZero();
  };
  if (auto bad = firstFailure(n * n * n, exec, holds)) {
    std::size_t k = *bad % n, j = (*bad / n) % n, i = *bad / (n * n);
    return failAt("superLeibniz", s, {i, j, k}, leibnizResidual(circ, i, j, k));
  }
  return Verdict::ok("superLeibniz");
}

Report checkLieSuperalgebra(const BracketTable& omega, Exec exec) {
  Report report;
  report.add(checkGraded(omega));
  report.add(checkSuperSkew(omega));
  report.add(checkSuperJacobi(omega, exec));
  return report;
}

Verdict checkAction(const BracketTable& algebra, const std::vector<SuperMap>& rho) {
  const SuperSpace& l = algebra.space();
  if (rho.size() != l.dim()) throw Error("need one image per algebra basis element");
  if (rho.empty()) return Verdict::ok("action");
  const SuperSpace& module = rho.front().domain();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!rho[i].isEndomorphism() || rho[i].domain() != module)
      throw Error("action images must be endomorphisms of one module");
    if (!rho[i].isHomogeneous(l.parity(i)))
      throw Error("rho(" + l.name(i) + ") is not homogeneous of parity |" + l.name(i) + "|");
  }
  auto rhoOf = [&](const SuperVector& x) {
    SuperMap out = SuperMap::zero(module, module);
    for (std::size_t i = 0; i < l.dim(); ++i)
      if (!x[i].isZero()) out = out + rho[i].scaled(x[i]);
    return out;
  };
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      SuperMap lhs = rhoOf(algebra.value(i, j));
      SuperMap com = rho[i].compose(rho[j]);
      SuperMap rev = rho[j].compose(rho[i]);
      SuperMap rhs = koszulSign(l.parity(i), l.parity(j)) < 0 ? com + rev : com - rev;
      SuperMap diff = lhs - rhs;
      if (diff.isZero()) continue;
      for (std::size_t v = 0; v < module.dim(); ++v) {
        SuperVector r = diff.apply(module.basisVector(v));
        if (!r.isZero())
          return Verdict::fail("action", {l.name(i), l.name(j), module.name(v)}, r.str(),
                               coordsOf(r));
      }
    }
  return Verdict::ok("action");
}

SuperSpace directSum(const SuperSpace& a, const SuperSpace& b) {
  if (a.field() != b.field()) throw Error("direct sum needs one field");
  std::vector<std::string> names(a.names());
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < a.dim(); ++i) parities.push_back(a.parity(i));
  for (std::size_t i = 0; i < b.dim(); ++i) {
    names.push_back(b.name(i));
    parities.push_back(b.parity(i));
  }
  return SuperSpace::frame(a.field(), std::move(names), std::move(parities));
}

BracketTable semidirectProduct(const BracketTable& algebra, const std::vector<SuperMap>& rho) {
  Verdict action = checkAction(algebra, rho);
  if (!action) throw Error("semidirect product needs a valid action; failed at (" +
                           action.tuple[0] + ", " + action.tuple[1] + ")");
  const SuperSpace& l = algebra.space();
  SuperSpace module = rho.empty() ? SuperSpace() : rho.front().domain();
  SuperSpace sum = directSum(l, module);
  const std::size_t nl = l.dim();
  auto lift = [&](const SuperVector& v, std::size_t offset) {
    SuperVector out = SuperVector::zero(sum);
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (!v[i].isZero()) out.addScaled(sum.basisVector(offset + i), v[i]);
    return out;
  };
  return BracketTable::build(sum, [&](std::size_t i, std::size_t j) {
    bool iAlg = i < nl, jAlg = j < nl;
    if (iAlg && jAlg) return lift(algebra.value(i, j), 0);
    if (iAlg && !jAlg) return lift(rho[i].apply(module.basisVector(j - nl)), nl);
    if (!iAlg && jAlg) {
      // [u, y] = -(-1)^{|u||y|} y |> u
      SuperVector v = rho[j].apply(module.basisVector(i - nl));
      int sign = -koszulSign(sum.parity(i), sum.parity(j));
      return lift(sign < 0 ? -v : v, nl);
    }
    return SuperVector::zero(sum);
  });
}

EvenBilinearForm::EvenBilinearForm(SuperSpace space, std::vector<Scalar> gram)
    : m_space(std::move(space)), m_gram(std::move(gram)) {
  if (m_gram.size() != m_space.dim() * m_space.dim())
    throw Error("Gram matrix shape mismatch");
  for (std::size_t i = 0; i < m_space.dim(); ++i)
    for (std::size_t j = 0; j < m_space.dim(); ++j) {
      const Scalar& b = m_gram[i * m_space.dim() + j];
      if (m_space.parity(i) != m_space.parity(j) && !b.isZero())
        throw Error("even form has a nonzero mixed-parity entry at (" + m_space.name(i) + ", " +
                    m_space.name(j) + ")");
      Scalar sym = m_gram[j * m_space.dim() + i];
      if (koszulSign(m_space.parity(i), m_space.parity(j)) < 0) sym = -sym;
      if (b != sym)
        throw Error("form is not super symmetric at (" + m_space.name(i) + ", " + m_space.name(j) +
                    ")");
    }
}

EvenBilinearForm EvenBilinearForm::zero(const SuperSpace& space) {
  return EvenBilinearForm(space,
                          std::vector<Scalar>(space.dim() * space.dim(), space.field().zero()));
}

Scalar EvenBilinearForm::evaluate(const SuperVector& x, const SuperVector& y) const {
  if (x.space() != m_space || y.space() != m_space) throw Error("form argument space mismatch");
  Scalar out = m_space.field().zero();
  for (std::size_t i = 0; i < m_space.dim(); ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < m_space.dim(); ++j)
      if (!y[j].isZero() && !value(i, j).isZero()) out += x[i] * y[j] * value(i, j);
  }
  return out;
}

bool EvenBilinearForm::isNondegenerate() const {
  std::vector<linalg::Row> rows;
  for (std::size_t i = 0; i < m_space.dim(); ++i)
    rows.emplace_back(m_gram.begin() + i * m_space.dim(), m_gram.begin() + (i + 1) * m_space.dim());
  return linalg::rrefInPlace(rows, m_space.field()).size() == m_space.dim();
}

EvenBilinearForm supertraceForm(const SuperSpace& v) {
  SuperSpace gl = glSpace(v);
  const std::size_t d = v.dim();
  std::vector<Scalar> gram(gl.dim() * gl.dim(), v.field().zero());
  // str(E[i,j] E[k,l]) = delta_{jk} delta_{il} (-1)^{|i|}
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar s = v.field().fromLong(v.parity(i) == Parity::even ? 1 : -1);
      gram[glCoord(v, i, j) * gl.dim() + glCoord(v, j, i)] = s;
    }
  return EvenBilinearForm(gl, std::move(gram));
}

BracketTable glBracketTable(const SuperSpace& v) {
  SuperSpace gl = glSpace(v);
  const std::size_t d = v.dim();
  return BracketTable::build(gl, [&](std::size_t a, std::size_t b) {
    SuperMap ma = SuperMap::elementary(v, a / d, a % d);
    SuperMap mb = SuperMap::elementary(v, b / d, b % d);
    return superCommutator(ma, mb).glCoords();
  });
}

Verdict isQuadraticCompatible(const BracketTable& omega, const EvenBilinearForm& form) {
  const SuperSpace& s = omega.space();
  if (form.space() != s) throw Error("form and bracket live on different spaces");
  for (std::size_t x = 0; x < s.dim(); ++x)
    for (std::size_t y = 0; y < s.dim(); ++y)
      for (std::size_t z = 0; z < s.dim(); ++z) {
        Scalar lhs = form.evaluate(omega.value(x, y), s.basisVector(z));
        Scalar rhs = form.evaluate(s.basisVector(y), omega.value(x, z));
        if (koszulSign(s.parity(x), s.parity(y)) < 0) rhs = -rhs;
        Scalar r = lhs + rhs;
        if (!r.isZero())
          return Verdict::fail("quadraticCompatible", names(s, {x, y, z}), r.str(),
                               {{"value", r.str()}});
      }
  return Verdict::ok("quadraticCompatible");
}

}  // namespace superomni
