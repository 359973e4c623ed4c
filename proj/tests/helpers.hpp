#ifndef SUPEROMNI_TEST_HELPERS_HPP
#define SUPEROMNI_TEST_HELPERS_HPP

#include "superomni/bracket.hpp"

namespace testutil {

using namespace superomni;

// deterministic generator for property-style tests
class Rng {
public:
  explicit Rng(std::uint64_t seed) : m_state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    m_state ^= m_state << 13;
    m_state ^= m_state >> 7;
    m_state ^= m_state << 17;
    return m_state;
  }
  long pick(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }

private:
  std::uint64_t m_state;
};

inline Scalar randomScalar(Rng& rng, const Field& field) {
  if (field.isRational()) {
    long num = rng.pick(-4, 4);
    long den = rng.pick(1, 3);
    return Scalar::rational(num, den);
  }
  return field.fromLong(rng.pick(0, field.prime() - 1));
}

inline SuperVector randomVector(Rng& rng, const SuperSpace& space) {
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < space.dim(); ++i) coords.push_back(randomScalar(rng, space.field()));
  return SuperVector(space, std::move(coords));
}

// naive row-by-column product, independent of SuperMap::compose
inline std::vector<std::vector<Scalar>> naiveMatMul(const std::vector<std::vector<Scalar>>& a,
                                                    const std::vector<std::vector<Scalar>>& b,
                                                    const Field& field) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<std::vector<Scalar>> entriesOf(const SuperMap& m) {
  const std::size_t n = m.domain().dim();
  std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, m.domain().field().zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m.entry(i, j);
  return out;
}

// Heisenberg superalgebra on a 1|1 space: [f1,f1] = e1, everything else 0.
inline BracketTable heisenberg(const Field& field) {
  SuperSpace v = SuperSpace::standard(field, 1, 1);
  return BracketTable::build(v, [&](std::size_t i, std::size_t j) {
    if (i == 1 && j == 1) return SuperVector::basis(v, 0);
    return SuperVector::zero(v);
  });
}

}  // namespace testutil

#endif
