#ifndef SUPEROMNI_MAP_HPP
#define SUPEROMNI_MAP_HPP

#include "superomni/vector.hpp"

namespace superomni {

/// Linear map between super spaces, stored densely in the coordinate bases.
/// entry(r, c) is the coefficient of codomain basis r in the image of
/// domain basis c. Even part keeps parity, odd part swaps it.
class SuperMap {
public:
  SuperMap(SuperSpace domain, SuperSpace codomain, std::vector<Scalar> rowMajor);

  static SuperMap zero(const SuperSpace& domain, const SuperSpace& codomain);
  static SuperMap identity(const SuperSpace& space);
  /// E[to,from]: sends basis 'from' to basis 'to', all other basis to 0.
  static SuperMap elementary(const SuperSpace& space, std::size_t to, std::size_t from);
  static SuperMap fromColumns(const SuperSpace& domain, const std::vector<SuperVector>& images);

  const SuperSpace& domain() const { return m_domain; }
  const SuperSpace& codomain() const { return m_codomain; }
  bool isEndomorphism() const { return m_domain == m_codomain; }

  const Scalar& entry(std::size_t row, std::size_t col) const {
    return m_entries[row * m_domain.dim() + col];
  }
  SuperVector column(std::size_t col) const;

  SuperVector apply(const SuperVector& x) const;
  SuperMap compose(const SuperMap& inner) const;  // (*this) after inner

  SuperMap parityPart(Parity p) const;
  bool isHomogeneous(Parity p) const;
  std::optional<Parity> homogeneousParity() const;
  bool isZero() const;

  SuperMap operator+(const SuperMap& o) const;
  SuperMap operator-(const SuperMap& o) const;
  SuperMap operator-() const;
  SuperMap scaled(const Scalar& c) const;
  bool operator==(const SuperMap& o) const;
  bool operator!=(const SuperMap& o) const { return !(*this == o); }

  /// Coordinates in the glSpace(domain) frame; endomorphisms only.
  SuperVector glCoords() const;
  static SuperMap fromGlCoords(const SuperSpace& v, const SuperVector& coords);

  std::string str() const;

private:
  void requireSameShape(const SuperMap& o) const;

  SuperSpace m_domain;
  SuperSpace m_codomain;
  std::vector<Scalar> m_entries;
};

/// [A,B] = AB - (-1)^{|A||B|}BA on homogeneous parts, extended bilinearly.
SuperMap superCommutator(const SuperMap& a, const SuperMap& b);

/// str(X) = tr(even-even block) - tr(odd-odd block).
Scalar supertrace(const SuperMap& a);

}  // namespace superomni

#endif
