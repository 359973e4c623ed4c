#include "superomni/omni.hpp"

namespace superomni {

namespace {

Scalar half(const Field& field) {
  if (field.prime() == 2) throw Error("bracket and pairing need an invertible 2");
  return field.fromLong(2).inverse();
}

Scalar third(const Field& field) {
  if (field.prime() == 3) throw Error("the Jacobiator T needs an invertible 3");
  return field.fromLong(3).inverse();
}

void requireCommonSpace(const OmniElement& a, const OmniElement& b) {
  if (a.space() != b.space()) throw Error("omni elements live over different spaces");
}

void requireCheckable(const SuperSpace& v, const char* what) {
  std::size_t dimE = v.dim() * v.dim() + v.dim();
  if (dimE > maxCheckDim())
    throw Error(std::string(what) + ": dim gl(V)+V = " + std::to_string(dimE) +
                " exceeds the exhaustive-check cap " + std::to_string(maxCheckDim()) +
                " (override with SUPEROMNI_MAX_DIM)");
}

}  // namespace

OmniElement::OmniElement(SuperMap map, SuperVector vec)
    : m_map(std::move(map)), m_vec(std::move(vec)) {
  if (!m_map.isEndomorphism() || m_map.domain() != m_vec.space())
    throw Error("omni element needs an endomorphism of the vector's space");
}

OmniElement OmniElement::zero(const SuperSpace& v) {
  return OmniElement(SuperMap::zero(v, v), SuperVector::zero(v));
}

OmniElement OmniElement::fromMap(const SuperMap& map) {
  return OmniElement(map, SuperVector::zero(map.domain()));
}

OmniElement OmniElement::fromVector(const SuperVector& vec) {
  return OmniElement(SuperMap::zero(vec.space(), vec.space()), vec);
}

OmniElement OmniElement::basis(const SuperSpace& v, std::size_t k) {
  const std::size_t glDim = v.dim() * v.dim();
  if (k < glDim) return fromMap(SuperMap::elementary(v, k / v.dim(), k % v.dim()));
  return fromVector(SuperVector::basis(v, k - glDim));
}

OmniElement OmniElement::parityPart(Parity p) const {
  return OmniElement(m_map.parityPart(p), m_vec.parityPart(p));
}

bool OmniElement::isHomogeneous(Parity p) const {
  return m_map.isHomogeneous(p) && m_vec.isHomogeneous(p);
}

bool OmniElement::isZero() const { return m_map.isZero() && m_vec.isZero(); }

OmniElement OmniElement::operator+(const OmniElement& o) const {
  return OmniElement(m_map + o.m_map, m_vec + o.m_vec);
}

OmniElement OmniElement::operator-(const OmniElement& o) const {
  return OmniElement(m_map - o.m_map, m_vec - o.m_vec);
}

OmniElement OmniElement::operator-() const { return OmniElement(-m_map, -m_vec); }

OmniElement OmniElement::scaled(const Scalar& c) const {
  return OmniElement(m_map.scaled(c), m_vec.scaled(c));
}

bool OmniElement::operator==(const OmniElement& o) const {
  return m_map == o.m_map && m_vec == o.m_vec;
}

SuperVector OmniElement::toCoords() const {
  SuperSpace e = omniSpace(space());
  std::vector<Scalar> coords;
  coords.reserve(e.dim());
  for (std::size_t i = 0; i < space().dim(); ++i)
    for (std::size_t j = 0; j < space().dim(); ++j) coords.push_back(m_map.entry(i, j));
  for (std::size_t k = 0; k < space().dim(); ++k) coords.push_back(m_vec[k]);
  return SuperVector(e, std::move(coords));
}

OmniElement OmniElement::fromCoords(const SuperSpace& v, const SuperVector& coords) {
  if (coords.space() != omniSpace(v)) throw Error("coordinates are not in gl(V)+V");
  const std::size_t d = v.dim();
  std::vector<Scalar> entries(coords.coords().begin(), coords.coords().begin() + d * d);
  std::vector<Scalar> vec(coords.coords().begin() + d * d, coords.coords().end());
  return OmniElement(SuperMap(v, v, std::move(entries)), SuperVector(v, std::move(vec)));
}

std::string OmniElement::str() const {
  if (isZero()) return "0";
  if (m_map.isZero()) return m_vec.str();
  if (m_vec.isZero()) return m_map.str();
  return m_map.str() + " + " + m_vec.str();
}

OmniElement circ(const OmniElement& a, const OmniElement& b) {
  requireCommonSpace(a, b);
  return OmniElement(superCommutator(a.map(), b.map()), a.map().apply(b.vec()));
}

OmniElement omniBracket(const OmniElement& a, const OmniElement& b) {
  requireCommonSpace(a, b);
  const Field& field = a.space().field();
  Scalar h = half(field);
  SuperMap glPart = superCommutator(a.map(), b.map());
  SuperVector vPart = SuperVector::zero(a.space());
  for (Parity pa : {Parity::even, Parity::odd}) {
    OmniElement ap = a.parityPart(pa);
    for (Parity pb : {Parity::even, Parity::odd}) {
      OmniElement bp = b.parityPart(pb);
      SuperVector term = ap.map().apply(bp.vec());
      SuperVector back = bp.map().apply(ap.vec());
      term = koszulSign(pa, pb) < 0 ? term + back : term - back;
      vPart.addScaled(term, h);
    }
  }
  return OmniElement(std::move(glPart), std::move(vPart));
}

SuperVector omniPairing(const OmniElement& a, const OmniElement& b) {
  requireCommonSpace(a, b);
  Scalar h = half(a.space().field());
  SuperVector out = SuperVector::zero(a.space());
  for (Parity pa : {Parity::even, Parity::odd}) {
    OmniElement ap = a.parityPart(pa);
    for (Parity pb : {Parity::even, Parity::odd}) {
      OmniElement bp = b.parityPart(pb);
      SuperVector term = ap.map().apply(bp.vec());
      SuperVector back = bp.map().apply(ap.vec());
      term = koszulSign(pa, pb) < 0 ? term - back : term + back;
      out.addScaled(term, h);
    }
  }
  return out;
}

namespace {

// cyclic sign pattern shared by J1 and T, extended trilinearly over the
// homogeneous decompositions of the arguments:
// (-1)^{|3||1|}F([[1,2]],3) + (-1)^{|1||2|}F([[2,3]],1) + (-1)^{|2||3|}F([[3,1]],2)
template <class Out, class F>
Out cyclicSum(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3, Out out,
              F&& f) {
  for (Parity p1 : {Parity::even, Parity::odd}) {
    OmniElement a = e1.parityPart(p1);
    if (a.isZero()) continue;
    for (Parity p2 : {Parity::even, Parity::odd}) {
      OmniElement b = e2.parityPart(p2);
      if (b.isZero()) continue;
      for (Parity p3 : {Parity::even, Parity::odd}) {
        OmniElement c = e3.parityPart(p3);
        if (c.isZero()) continue;
        out = out + f(omniBracket(a, b), c, koszulSign(p3, p1));
        out = out + f(omniBracket(b, c), a, koszulSign(p1, p2));
        out = out + f(omniBracket(c, a), b, koszulSign(p2, p3));
      }
    }
  }
  return out;
}

}  // namespace

OmniElement jacobiatorJ1(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3) {
  return cyclicSum(e1, e2, e3, OmniElement::zero(e1.space()),
                   [](const OmniElement& br, const OmniElement& e, int sign) {
                     OmniElement t = omniBracket(br, e);
                     return sign < 0 ? -t : t;
                   });
}

SuperVector jacobiatorT(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3) {
  Scalar t = third(e1.space().field());
  SuperVector sum = cyclicSum(e1, e2, e3, SuperVector::zero(e1.space()),
                              [](const OmniElement& br, const OmniElement& e, int sign) {
                                SuperVector p = omniPairing(br, e);
                                return sign < 0 ? -p : p;
                              });
  return sum.scaled(t);
}

Verdict checkOmniLeibniz(const SuperSpace& v, Exec exec) {
  requireCheckable(v, "omni Leibniz check");
  const std::size_t n = v.dim() * v.dim() + v.dim();
  auto residual = [&](std::size_t i, std::size_t j, std::size_t k) {
    OmniElement ei = OmniElement::basis(v, i);
    OmniElement ej = OmniElement::basis(v, j);
    OmniElement ek = OmniElement::basis(v, k);
    OmniElement lhs = circ(ei, circ(ej, ek));
    OmniElement rhs = circ(circ(ei, ej), ek);
    OmniElement mid = circ(ej, circ(ei, ek));
    SuperSpace e = omniSpace(v);
    rhs = koszulSign(e.parity(i), e.parity(j)) < 0 ? rhs - mid : rhs + mid;
    return lhs - rhs;
  };
  auto holds = [&](std::size_t flat) {
    std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
    return residual(i, j, k).isZero();
  };
  if (auto bad = firstFailure(n * n * n, exec, holds)) {
    std::size_t k = *bad % n, j = (*bad / n) % n, i = *bad / (n * n);
    SuperSpace e = omniSpace(v);
    return Verdict::fail("omniLeibniz", {e.name(i), e.name(j), e.name(k)},
                         residual(i, j, k).str());
  }
  return Verdict::ok("omniLeibniz",
                     std::to_string(n * n * n) + " basis triples of gl(V)+V over " + v.str());
}

Verdict checkPropHomotopy(const SuperSpace& v, Exec exec) {
  requireCheckable(v, "J1 = T check");
  third(v.field());  // reject p = 3 before entering the parallel region
  const std::size_t n = v.dim() * v.dim() + v.dim();
  auto residual = [&](std::size_t i, std::size_t j, std::size_t k) {
    OmniElement ei = OmniElement::basis(v, i);
    OmniElement ej = OmniElement::basis(v, j);
    OmniElement ek = OmniElement::basis(v, k);
    return jacobiatorJ1(ei, ej, ek) - embed(jacobiatorT(ei, ej, ek));
  };
  auto holds = [&](std::size_t flat) {
    std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
    return residual(i, j, k).isZero();
  };
  if (auto bad = firstFailure(n * n * n, exec, holds)) {
    std::size_t k = *bad % n, j = (*bad / n) % n, i = *bad / (n * n);
    SuperSpace e = omniSpace(v);
    return Verdict::fail("J1=T", {e.name(i), e.name(j), e.name(k)}, residual(i, j, k).str());
  }
  return Verdict::ok("J1=T",
                     std::to_string(n * n * n) + " basis triples of gl(V)+V over " + v.str());
}

}  // namespace superomni
