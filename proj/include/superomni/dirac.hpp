#ifndef SUPEROMNI_DIRAC_HPP
#define SUPEROMNI_DIRAC_HPP

#include "superomni/omni.hpp"

namespace superomni {

/// ad_omega(b_i) for every basis vector of V, with ad_omega(x)(y) = omega(x,y).
std::vector<SuperMap> adjointMap(const BracketTable& omega);

/// span{ad_omega(b) + b : b basis of V} inside omniSpace(V); dim = dim V.
GradedSubspace graph(const BracketTable& omega);

/// {e in gl(V)+V : <e, l> = 0 for all l in L}, an exact kernel w.r.t. the
/// V-valued pairing. L is always contained in the double complement.
GradedSubspace orthogonalComplement(const SuperSpace& v, const GradedSubspace& l);

/// L = L^perp (canonical-form equality).
Verdict isMaximalIsotropic(const SuperSpace& v, const GradedSubspace& l);

/// [[l1, l2]] in L for all canonical basis pairs of L.
Verdict isClosedUnderBracket(const SuperSpace& v, const GradedSubspace& l);

struct DiracVerdict {
  Verdict maximalIsotropic;
  Verdict closedUnderBracket;
  bool pass() const { return maximalIsotropic.pass && closedUnderBracket.pass; }
};
DiracVerdict isDirac(const SuperSpace& v, const GradedSubspace& l);

/// Both sides of the Prop-3.3 equivalence, for test harnesses.
struct GraphEquivalence {
  Report lie;
  DiracVerdict dirac;
  bool equivalent() const { return lie.pass() == dirac.pass(); }
};
GraphEquivalence graphIsDiracIffLie(const BracketTable& omega, Exec exec = defaultExec());

/// Characteristic pair of a maximal isotropic subspace: D = L n gl(V),
/// D^0 = projection of L to V, and pi on the canonical basis of D^0 chosen
/// by the smallest-index echelon section. pi(x)(y) on D^0 does not depend
/// on the section.
struct CharacteristicPair {
  SuperSpace v;
  GradedSubspace d;           // subspace of glSpace(v)
  GradedSubspace d0;          // subspace of v
  std::vector<SuperMap> pi;   // image of each canonical basis vector of d0
};
CharacteristicPair extractCharacteristicPair(const SuperSpace& v, const GradedSubspace& l);

/// Lemma-3.2 conditions: (1) D a subalgebra, (2) pi(pi(x,y)) - [pi(x),pi(y)]
/// in D, (3) pi(x,y) in D^0, on canonical basis tuples of D^0.
struct PairVerdicts {
  Verdict subalgebra;
  Verdict curvature;
  Verdict closure;
  bool pass() const { return subalgebra.pass && curvature.pass && closure.pass; }
};
PairVerdicts checkCharacteristicPair(const CharacteristicPair& pair);

/// L = {X + pi(x) + x : X in D, x in D^0} with D^0 the null space of D.
/// pi must be parity-preserving and super skew (one image per basis of V).
/// Maximal isotropy of the result needs D = (D^0)^0 on top of that.
GradedSubspace buildMaximalIsotropic(const SuperSpace& v, const GradedSubspace& d,
                                     const std::vector<SuperMap>& piGlobal);

/// Frame for the canonical basis of a subspace of V: one coordinate per
/// echelon row, named by the coordinate name when the row is a standard
/// unit vector and w<k> otherwise, carrying the row's parity.
SuperSpace canonicalBasisSpace(const SuperSpace& v, const GradedSubspace& w);

/// A Lie superalgebra structure on a subspace of V.
struct SubspaceLie {
  GradedSubspace w;       // subspace of V
  SuperSpace basisSpace;  // canonicalBasisSpace(v, w)
  BracketTable table;     // structure constants on basisSpace
};

/// [x,y] := pi(x,y) on W = D^0 of a Dirac structure; throws on non-Dirac L.
SubspaceLie lieFromDirac(const SuperSpace& v, const GradedSubspace& l);

/// D = W^0, pi = the zero extension of ad over the echelon complement of W;
/// returns a Dirac structure. The table must be a Lie superalgebra on a
/// frame whose parity sequence matches W's canonical basis (values are
/// transplanted positionally).
GradedSubspace diracFromLie(const SuperSpace& v, const GradedSubspace& w,
                            const BracketTable& tableOnW);

/// All graded subspaces of an F_p ambient space, by echelon pivot pattern
/// within each parity block.
void forEachGradedSubspace(const SuperSpace& ambient,
                           const std::function<void(const GradedSubspace&)>& fn);

/// All graded bilinear tables on V over F_p (no skewness imposed).
void forEachGradedBracket(const SuperSpace& v,
                          const std::function<void(const BracketTable&)>& fn);

/// All pairs (graded W in V, Lie superalgebra table on W) over F_p.
void forEachLieStructure(const SuperSpace& v, const std::function<void(const SubspaceLie&)>& fn);

/// Dual census at desk scale: Dirac structures of gl(V)+V versus
/// (W, Lie structure) pairs, with the two correspondences checked to be
/// mutually inverse on every element.
struct DiracCensus {
  std::vector<GradedSubspace> diracs;  // sorted canonical forms
  std::size_t lieStructureCount = 0;
  bool bijectionHolds = false;
  std::string failure;  // empty when the bijection holds
};
DiracCensus enumerateDirac(const SuperSpace& v, Exec exec = defaultExec());

}  // namespace superomni

#endif
