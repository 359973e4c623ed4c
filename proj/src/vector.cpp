#include "superomni/vector.hpp"

namespace superomni {

SuperVector::SuperVector(SuperSpace space, std::vector<Scalar> coords)
    : m_space(std::move(space)), m_coords(std::move(coords)) {
  if (m_coords.size() != m_space.dim())
    throw Error("coordinate count " + std::to_string(m_coords.size()) + " does not match " +
                m_space.str());
  for (const Scalar& c : m_coords)
    if (c.prime() != m_space.field().prime()) throw Error("coordinate field mismatch");
}

SuperVector SuperVector::zero(const SuperSpace& space) {
  return SuperVector(space, std::vector<Scalar>(space.dim(), space.field().zero()));
}

SuperVector SuperVector::basis(const SuperSpace& space, std::size_t i) {
  if (i >= space.dim()) throw Error("basis index out of range");
  std::vector<Scalar> coords(space.dim(), space.field().zero());
  coords[i] = space.field().one();
  return SuperVector(space, std::move(coords));
}

bool SuperVector::isZero() const {
  for (const Scalar& c : m_coords)
    if (!c.isZero()) return false;
  return true;
}

bool SuperVector::isHomogeneous(Parity p) const {
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    if (!m_coords[i].isZero() && m_space.parity(i) != p) return false;
  return true;
}

std::optional<Parity> SuperVector::homogeneousParity() const {
  if (isHomogeneous(Parity::even)) return Parity::even;
  if (isHomogeneous(Parity::odd)) return Parity::odd;
  return std::nullopt;
}

SuperVector SuperVector::parityPart(Parity p) const {
  std::vector<Scalar> coords(m_coords);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (m_space.parity(i) != p) coords[i] = m_space.field().zero();
  return SuperVector(m_space, std::move(coords));
}

std::pair<SuperVector, SuperVector> SuperVector::parityDecompose() const {
  return {parityPart(Parity::even), parityPart(Parity::odd)};
}

void SuperVector::requireSameSpace(const SuperVector& o) const {
  if (m_space != o.m_space) throw Error("space mismatch: " + m_space.str() + " vs " + o.m_space.str());
}

SuperVector SuperVector::operator+(const SuperVector& o) const {
  requireSameSpace(o);
  std::vector<Scalar> coords(m_coords);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.m_coords[i];
  return SuperVector(m_space, std::move(coords));
}

SuperVector SuperVector::operator-(const SuperVector& o) const {
  requireSameSpace(o);
  std::vector<Scalar> coords(m_coords);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.m_coords[i];
  return SuperVector(m_space, std::move(coords));
}

SuperVector SuperVector::operator-() const {
  std::vector<Scalar> coords(m_coords);
  for (Scalar& c : coords) c = -c;
  return SuperVector(m_space, std::move(coords));
}

SuperVector SuperVector::scaled(const Scalar& c) const {
  std::vector<Scalar> coords(m_coords);
  for (Scalar& x : coords) x *= c;
  return SuperVector(m_space, std::move(coords));
}

SuperVector& SuperVector::addScaled(const SuperVector& o, const Scalar& c) {
  requireSameSpace(o);
  if (c.isZero()) return *this;
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    if (!o.m_coords[i].isZero()) m_coords[i] += o.m_coords[i] * c;
  return *this;
}

bool SuperVector::operator==(const SuperVector& o) const {
  requireSameSpace(o);
  return m_coords == o.m_coords;
}

std::string SuperVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < m_coords.size(); ++i) {
    if (m_coords[i].isZero()) continue;
    if (!out.empty()) out += " + ";
    if (m_coords[i].isOne())
      out += m_space.name(i);
    else
      out += m_coords[i].str() + "*" + m_space.name(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace superomni
