#ifndef SUPEROMNI_OMNI_HPP
#define SUPEROMNI_OMNI_HPP

#include "superomni/bracket.hpp"

namespace superomni {

/// Element A + x of gl(V) + V. Homogeneous of parity p iff both the map
/// and the vector part are.
class OmniElement {
public:
  OmniElement(SuperMap map, SuperVector vec);

  static OmniElement zero(const SuperSpace& v);
  static OmniElement fromMap(const SuperMap& map);
  static OmniElement fromVector(const SuperVector& vec);  // the embedding d = i : V -> gl(V)+V
  static OmniElement basis(const SuperSpace& v, std::size_t k);  // k-th omniSpace coordinate

  const SuperSpace& space() const { return m_vec.space(); }
  const SuperMap& map() const { return m_map; }
  const SuperVector& vec() const { return m_vec; }

  OmniElement parityPart(Parity p) const;
  bool isHomogeneous(Parity p) const;
  bool isZero() const;

  OmniElement operator+(const OmniElement& o) const;
  OmniElement operator-(const OmniElement& o) const;
  OmniElement operator-() const;
  OmniElement scaled(const Scalar& c) const;
  bool operator==(const OmniElement& o) const;
  bool operator!=(const OmniElement& o) const { return !(*this == o); }

  SuperVector toCoords() const;  // in omniSpace(V)
  static OmniElement fromCoords(const SuperSpace& v, const SuperVector& coords);

  std::string str() const;

private:
  SuperMap m_map;
  SuperVector m_vec;
};

inline OmniElement embed(const SuperVector& x) { return OmniElement::fromVector(x); }

/// (A+x) o (B+y) = [A,B] + Ay.
OmniElement circ(const OmniElement& a, const OmniElement& b);

/// [[A+x, B+y]] = [A,B] + (Ay - (-1)^{|a||b|}Bx)/2, over homogeneous parts.
OmniElement omniBracket(const OmniElement& a, const OmniElement& b);

/// <A+x, B+y> = (Ay + (-1)^{|a||b|}Bx)/2 in V, over homogeneous parts.
SuperVector omniPairing(const OmniElement& a, const OmniElement& b);

/// Jacobiator of the skew bracket; its gl component always vanishes.
OmniElement jacobiatorJ1(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3);

/// T = 1/3 { (-1)^{|3||1|}<[[e1,e2]],e3> + cyclic }; needs 2 and 3 invertible.
SuperVector jacobiatorT(const OmniElement& e1, const OmniElement& e2, const OmniElement& e3);

/// Super Leibniz rule for o on every homogeneous basis triple of gl(V)+V.
Verdict checkOmniLeibniz(const SuperSpace& v, Exec exec = defaultExec());

/// J1 = embed(T) on every homogeneous basis triple of gl(V)+V.
Verdict checkPropHomotopy(const SuperSpace& v, Exec exec = defaultExec());

}  // namespace superomni

#endif
