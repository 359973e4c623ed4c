#ifndef SUPEROMNI_BRACKET_HPP
#define SUPEROMNI_BRACKET_HPP

#include <functional>

#include "superomni/check.hpp"
#include "superomni/subspace.hpp"

namespace superomni {

/// Structure constants of a bilinear operation on a SuperSpace: one value
/// per ordered basis pair, extended bilinearly. Skewness is a check, never
/// an assumption; missing transposes are not inferred.
class BracketTable {
public:
  BracketTable(SuperSpace space, std::vector<SuperVector> values);

  static BracketTable zero(const SuperSpace& space);
  static BracketTable build(const SuperSpace& space,
                            const std::function<SuperVector(std::size_t, std::size_t)>& value);

  const SuperSpace& space() const { return m_space; }
  const SuperVector& value(std::size_t i, std::size_t j) const {
    return m_values[i * m_space.dim() + j];
  }
  SuperVector evaluate(const SuperVector& x, const SuperVector& y) const;

  bool operator==(const BracketTable& o) const;
  bool operator!=(const BracketTable& o) const { return !(*this == o); }

private:
  SuperSpace m_space;
  std::vector<SuperVector> m_values;
};

/// omega(V_a, V_b) inside V_{a+b} on every basis pair.
Verdict checkGraded(const BracketTable& omega);
/// [x,y] + (-1)^{|x||y|}[y,x] = 0 on every basis pair.
Verdict checkSuperSkew(const BracketTable& omega);
/// J1 = 0 on every basis triple; failure carries the triple and residual.
Verdict checkSuperJacobi(const BracketTable& omega, Exec exec = defaultExec());
/// x(yz) = (xy)z + (-1)^{|x||y|} y(xz) on every basis triple.
Verdict checkLeibnizRule(const BracketTable& circ, Exec exec = defaultExec());
/// graded + superSkew + superJacobi, in that order.
Report checkLieSuperalgebra(const BracketTable& omega, Exec exec = defaultExec());

/// rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|}rho(y)rho(x) on basis pairs,
/// applied to every module basis vector. rho[i] is the image of basis i and
/// must be homogeneous of that basis parity.
Verdict checkAction(const BracketTable& algebra, const std::vector<SuperMap>& rho);

/// Frame with a's coordinates followed by b's; names must not clash.
SuperSpace directSum(const SuperSpace& a, const SuperSpace& b);

/// [x+u, y+v] = [x,y] + x|>v - (-1)^{|u||y|} y|>u on L + M. Throws unless
/// checkAction passes.
BracketTable semidirectProduct(const BracketTable& algebra, const std::vector<SuperMap>& rho);

/// Even super-symmetric bilinear form, stored as a Gram matrix. Mixed
/// parity blocks must vanish and B(i,j) = (-1)^{|i||j|}B(j,i).
class EvenBilinearForm {
public:
  EvenBilinearForm(SuperSpace space, std::vector<Scalar> gram);
  static EvenBilinearForm zero(const SuperSpace& space);

  const SuperSpace& space() const { return m_space; }
  const Scalar& value(std::size_t i, std::size_t j) const {
    return m_gram[i * m_space.dim() + j];
  }
  Scalar evaluate(const SuperVector& x, const SuperVector& y) const;
  bool isNondegenerate() const;

private:
  SuperSpace m_space;
  std::vector<Scalar> m_gram;
};

/// B(X,Y) = str(XY) on glSpace(v).
EvenBilinearForm supertraceForm(const SuperSpace& v);

/// gl(m|n) structure constants on glSpace(v), via the super commutator of
/// elementary maps.
BracketTable glBracketTable(const SuperSpace& v);

/// ad_omega x in o(V): B(omega(x,y), z) + (-1)^{|x||y|} B(y, omega(x,z)) = 0
/// on all basis triples. Degeneracy of B is the caller's concern.
Verdict isQuadraticCompatible(const BracketTable& omega, const EvenBilinearForm& form);

}  // namespace superomni

#endif
