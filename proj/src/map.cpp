#include "superomni/map.hpp"

namespace superomni {

SuperMap::SuperMap(SuperSpace domain, SuperSpace codomain, std::vector<Scalar> rowMajor)
    : m_domain(std::move(domain)), m_codomain(std::move(codomain)), m_entries(std::move(rowMajor)) {
  if (m_domain.field() != m_codomain.field()) throw Error("domain/codomain field mismatch");
  if (m_entries.size() != m_domain.dim() * m_codomain.dim())
    throw Error("entry count does not match map shape");
  for (const Scalar& c : m_entries)
    if (c.prime() != m_domain.field().prime()) throw Error("entry field mismatch");
}

SuperMap SuperMap::zero(const SuperSpace& domain, const SuperSpace& codomain) {
  return SuperMap(domain, codomain,
                  std::vector<Scalar>(domain.dim() * codomain.dim(), domain.field().zero()));
}

SuperMap SuperMap::identity(const SuperSpace& space) {
  std::vector<Scalar> e(space.dim() * space.dim(), space.field().zero());
  for (std::size_t i = 0; i < space.dim(); ++i) e[i * space.dim() + i] = space.field().one();
  return SuperMap(space, space, std::move(e));
}

SuperMap SuperMap::elementary(const SuperSpace& space, std::size_t to, std::size_t from) {
  if (to >= space.dim() || from >= space.dim()) throw Error("elementary map index out of range");
  std::vector<Scalar> e(space.dim() * space.dim(), space.field().zero());
  e[to * space.dim() + from] = space.field().one();
  return SuperMap(space, space, std::move(e));
}

SuperMap SuperMap::fromColumns(const SuperSpace& domain, const std::vector<SuperVector>& images) {
  if (images.size() != domain.dim()) throw Error("need one image per domain basis vector");
  if (images.empty()) return SuperMap::zero(domain, domain);
  const SuperSpace& codomain = images.front().space();
  std::vector<Scalar> e(domain.dim() * codomain.dim(), domain.field().zero());
  for (std::size_t c = 0; c < images.size(); ++c) {
    if (images[c].space() != codomain) throw Error("column space mismatch");
    for (std::size_t r = 0; r < codomain.dim(); ++r) e[r * domain.dim() + c] = images[c][r];
  }
  return SuperMap(domain, codomain, std::move(e));
}

SuperVector SuperMap::column(std::size_t col) const {
  std::vector<Scalar> coords(m_codomain.dim(), m_domain.field().zero());
  for (std::size_t r = 0; r < m_codomain.dim(); ++r) coords[r] = entry(r, col);
  return SuperVector(m_codomain, std::move(coords));
}

SuperVector SuperMap::apply(const SuperVector& x) const {
  if (x.space() != m_domain) throw Error("vector not in domain of map");
  std::vector<Scalar> out(m_codomain.dim(), m_domain.field().zero());
  for (std::size_t c = 0; c < m_domain.dim(); ++c) {
    if (x[c].isZero()) continue;
    for (std::size_t r = 0; r < m_codomain.dim(); ++r) {
      const Scalar& e = entry(r, c);
      if (!e.isZero()) out[r] += e * x[c];
    }
  }
  return SuperVector(m_codomain, std::move(out));
}

SuperMap SuperMap::compose(const SuperMap& inner) const {
  if (inner.m_codomain != m_domain) throw Error("composition shape mismatch");
  std::vector<Scalar> out(inner.m_domain.dim() * m_codomain.dim(), m_domain.field().zero());
  for (std::size_t k = 0; k < m_domain.dim(); ++k)
    for (std::size_t c = 0; c < inner.m_domain.dim(); ++c) {
      const Scalar& ik = inner.entry(k, c);
      if (ik.isZero()) continue;
      for (std::size_t r = 0; r < m_codomain.dim(); ++r) {
        const Scalar& rk = entry(r, k);
        if (!rk.isZero()) out[r * inner.m_domain.dim() + c] += rk * ik;
      }
    }
  return SuperMap(inner.m_domain, m_codomain, std::move(out));
}

SuperMap SuperMap::parityPart(Parity p) const {
  std::vector<Scalar> e(m_entries);
  for (std::size_t r = 0; r < m_codomain.dim(); ++r)
    for (std::size_t c = 0; c < m_domain.dim(); ++c)
      if (m_codomain.parity(r) + m_domain.parity(c) != p)
        e[r * m_domain.dim() + c] = m_domain.field().zero();
  return SuperMap(m_domain, m_codomain, std::move(e));
}

bool SuperMap::isHomogeneous(Parity p) const {
  for (std::size_t r = 0; r < m_codomain.dim(); ++r)
    for (std::size_t c = 0; c < m_domain.dim(); ++c)
      if (!entry(r, c).isZero() && m_codomain.parity(r) + m_domain.parity(c) != p) return false;
  return true;
}

std::optional<Parity> SuperMap::homogeneousParity() const {
  if (isHomogeneous(Parity::even)) return Parity::even;
  if (isHomogeneous(Parity::odd)) return Parity::odd;
  return std::nullopt;
}

bool SuperMap::isZero() const {
  for (const Scalar& c : m_entries)
    if (!c.isZero()) return false;
  return true;
}

void SuperMap::requireSameShape(const SuperMap& o) const {
  if (m_domain != o.m_domain || m_codomain != o.m_codomain) throw Error("map shape mismatch");
}

SuperMap SuperMap::operator+(const SuperMap& o) const {
  requireSameShape(o);
  std::vector<Scalar> e(m_entries);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.m_entries[i];
  return SuperMap(m_domain, m_codomain, std::move(e));
}

SuperMap SuperMap::operator-(const SuperMap& o) const {
  requireSameShape(o);
  std::vector<Scalar> e(m_entries);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.m_entries[i];
  return SuperMap(m_domain, m_codomain, std::move(e));
}

SuperMap SuperMap::operator-() const {
  std::vector<Scalar> e(m_entries);
  for (Scalar& c : e) c = -c;
  return SuperMap(m_domain, m_codomain, std::move(e));
}

SuperMap SuperMap::scaled(const Scalar& c) const {
  std::vector<Scalar> e(m_entries);
  for (Scalar& x : e) x *= c;
  return SuperMap(m_domain, m_codomain, std::move(e));
}

bool SuperMap::operator==(const SuperMap& o) const {
  requireSameShape(o);
  return m_entries == o.m_entries;
}

SuperVector SuperMap::glCoords() const {
  if (!isEndomorphism()) throw Error("gl coordinates need an endomorphism");
  return SuperVector(glSpace(m_domain), m_entries);
}

SuperMap SuperMap::fromGlCoords(const SuperSpace& v, const SuperVector& coords) {
  if (coords.space() != glSpace(v)) throw Error("coordinates are not in gl(V)");
  return SuperMap(v, v, coords.coords());
}

std::string SuperMap::str() const {
  std::string out;
  for (std::size_t r = 0; r < m_codomain.dim(); ++r)
    for (std::size_t c = 0; c < m_domain.dim(); ++c) {
      const Scalar& e = entry(r, c);
      if (e.isZero()) continue;
      if (!out.empty()) out += " + ";
      std::string coord = "E[" + m_codomain.name(r) + "," + m_domain.name(c) + "]";
      out += e.isOne() ? coord : e.str() + "*" + coord;
    }
  return out.empty() ? "0" : out;
}

SuperMap superCommutator(const SuperMap& a, const SuperMap& b) {
  if (!a.isEndomorphism() || !b.isEndomorphism() || a.domain() != b.domain())
    throw Error("super commutator needs endomorphisms of one space");
  SuperMap result = SuperMap::zero(a.domain(), a.domain());
  for (Parity pa : {Parity::even, Parity::odd}) {
    SuperMap ap = a.parityPart(pa);
    if (ap.isZero()) continue;
    for (Parity pb : {Parity::even, Parity::odd}) {
      SuperMap bp = b.parityPart(pb);
      if (bp.isZero()) continue;
      SuperMap ab = ap.compose(bp);
      SuperMap ba = bp.compose(ap);
      result = result + (koszulSign(pa, pb) < 0 ? ab + ba : ab - ba);
    }
  }
  return result;
}

Scalar supertrace(const SuperMap& a) {
  if (!a.isEndomorphism()) throw Error("supertrace needs an endomorphism");
  Scalar out = a.domain().field().zero();
  for (std::size_t i = 0; i < a.domain().dim(); ++i) {
    if (a.domain().parity(i) == Parity::even)
      out += a.entry(i, i);
    else
      out -= a.entry(i, i);
  }
  return out;
}

}  // namespace superomni
