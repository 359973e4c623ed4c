#ifndef SUPEROMNI_VECTOR_HPP
#define SUPEROMNI_VECTOR_HPP

#include <utility>
#include <vector>

#include "superomni/space.hpp"

namespace superomni {

/// Element of a SuperSpace: a dense coordinate list over the space's field.
class SuperVector {
public:
  SuperVector(SuperSpace space, std::vector<Scalar> coords);

  static SuperVector zero(const SuperSpace& space);
  static SuperVector basis(const SuperSpace& space, std::size_t i);

  const SuperSpace& space() const { return m_space; }
  std::size_t dim() const { return m_coords.size(); }
  const Scalar& operator[](std::size_t i) const { return m_coords[i]; }
  const std::vector<Scalar>& coords() const { return m_coords; }

  bool isZero() const;
  /// True iff every nonzero coordinate has the given parity; the zero
  /// vector is homogeneous of every parity.
  bool isHomogeneous(Parity p) const;
  /// Parity of a homogeneous vector (even for zero); nullopt when mixed.
  std::optional<Parity> homogeneousParity() const;

  SuperVector parityPart(Parity p) const;
  std::pair<SuperVector, SuperVector> parityDecompose() const;

  SuperVector operator+(const SuperVector& o) const;
  SuperVector operator-(const SuperVector& o) const;
  SuperVector operator-() const;
  SuperVector scaled(const Scalar& c) const;
  SuperVector& addScaled(const SuperVector& o, const Scalar& c);

  bool operator==(const SuperVector& o) const;
  bool operator!=(const SuperVector& o) const { return !(*this == o); }

  std::string str() const;  // "e1 + 1/2*f1", "0"

private:
  void requireSameSpace(const SuperVector& o) const;

  SuperSpace m_space;
  std::vector<Scalar> m_coords;
};

}  // namespace superomni

#endif
