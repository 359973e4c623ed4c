#ifndef SUPEROMNI_SPACE_HPP
#define SUPEROMNI_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "superomni/scalar.hpp"

namespace superomni {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

/// (-1)^{|a||b|}
inline int koszulSign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

inline const char* parityName(Parity p) { return p == Parity::even ? "even" : "odd"; }

class SuperVector;

/// A Z2-graded coordinate space over an exact field.
///
/// standard(F, m, n) gives the m|n space with basis e1..em (even) then
/// f1..fn (odd). Derived frames such as gl(V) or gl(V)+V keep their natural
/// coordinate order (row-major E[i,j], then V), so the parity pattern of a
/// frame is arbitrary; every coordinate is homogeneous.
class SuperSpace {
public:
  SuperSpace();  // zero-dimensional rational space

  static SuperSpace standard(const Field& field, std::size_t evenDim, std::size_t oddDim);
  static SuperSpace withNames(const Field& field, std::vector<std::string> evenNames,
                              std::vector<std::string> oddNames);
  static SuperSpace frame(const Field& field, std::vector<std::string> names,
                          std::vector<Parity> parities);

  const Field& field() const { return m_data->field; }
  std::size_t dim() const { return m_data->names.size(); }
  std::size_t evenDim() const { return m_data->evenDim; }
  std::size_t oddDim() const { return m_data->oddDim; }
  Parity parity(std::size_t i) const { return m_data->parities.at(i); }
  const std::string& name(std::size_t i) const { return m_data->names.at(i); }
  const std::vector<std::string>& names() const { return m_data->names; }
  std::optional<std::size_t> indexOf(std::string_view name) const;

  SuperVector basisVector(std::size_t i) const;
  SuperVector zeroVector() const;

  bool operator==(const SuperSpace& o) const;
  bool operator!=(const SuperSpace& o) const { return !(*this == o); }
  std::string str() const;  // e.g. "Q^{1|1}"

  /// Stable identity of the shared payload; used to memoize derived frames.
  const void* identity() const { return m_data.get(); }

private:
  struct Data {
    Field field;
    std::vector<std::string> names;
    std::vector<Parity> parities;
    std::size_t evenDim = 0;
    std::size_t oddDim = 0;
    std::unordered_map<std::string, std::size_t> index;
  };
  explicit SuperSpace(std::shared_ptr<const Data> d) : m_data(std::move(d)) {}
  static SuperSpace make(Field field, std::vector<std::string> names, std::vector<Parity> parities);

  std::shared_ptr<const Data> m_data;
};

/// Endomorphism frame of V: coordinates E[i,j] (basis j -> basis i) in
/// row-major order, i outer; |E[i,j]| = |i| + |j|.
SuperSpace glSpace(const SuperSpace& v);

/// gl(V) + V frame: all E[i,j] row-major, then V's basis.
SuperSpace omniSpace(const SuperSpace& v);

inline std::size_t glCoord(const SuperSpace& v, std::size_t i, std::size_t j) {
  return i * v.dim() + j;
}

}  // namespace superomni

#endif
