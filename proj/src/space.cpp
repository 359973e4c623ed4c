#include "superomni/space.hpp"

#include <mutex>

#include "superomni/vector.hpp"

namespace superomni {

namespace {

// gl/omni frames are requested inside the exhaustive loops; memoize them
// per underlying space payload. The source space is pinned in the cache so
// its address cannot be reused by a different space.
class FrameCache {
public:
  SuperSpace get(const SuperSpace& v, SuperSpace (*build)(const SuperSpace&)) {
    std::lock_guard<std::mutex> lock(m_mutex);
    auto it = m_cache.find(v.identity());
    if (it != m_cache.end()) return it->second.second;
    SuperSpace frame = build(v);
    m_cache.emplace(v.identity(), std::make_pair(v, frame));
    return frame;
  }

private:
  std::mutex m_mutex;
  std::unordered_map<const void*, std::pair<SuperSpace, SuperSpace>> m_cache;
};

SuperSpace buildGlSpace(const SuperSpace& v) {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  names.reserve(v.dim() * v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      names.push_back("E[" + v.name(i) + "," + v.name(j) + "]");
      parities.push_back(v.parity(i) + v.parity(j));
    }
  return SuperSpace::frame(v.field(), std::move(names), std::move(parities));
}

SuperSpace buildOmniSpace(const SuperSpace& v) {
  SuperSpace gl = glSpace(v);
  std::vector<std::string> names(gl.names());
  std::vector<Parity> parities;
  parities.reserve(gl.dim() + v.dim());
  for (std::size_t i = 0; i < gl.dim(); ++i) parities.push_back(gl.parity(i));
  for (std::size_t k = 0; k < v.dim(); ++k) {
    names.push_back(v.name(k));
    parities.push_back(v.parity(k));
  }
  return SuperSpace::frame(v.field(), std::move(names), std::move(parities));
}

}  // namespace

SuperSpace::SuperSpace() { *this = make(Field::rationals(), {}, {}); }

SuperSpace SuperSpace::make(Field field, std::vector<std::string> names,
                            std::vector<Parity> parities) {
  if (names.size() != parities.size()) throw Error("name/parity count mismatch");
  auto data = std::make_shared<Data>();
  data->field = field;
  data->names = std::move(names);
  data->parities = std::move(parities);
  for (std::size_t i = 0; i < data->names.size(); ++i) {
    if (!data->index.emplace(data->names[i], i).second)
      throw Error("duplicate basis name '" + data->names[i] + "'");
    if (data->parities[i] == Parity::even)
      ++data->evenDim;
    else
      ++data->oddDim;
  }
  return SuperSpace(std::move(data));
}

SuperSpace SuperSpace::standard(const Field& field, std::size_t evenDim, std::size_t oddDim) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= evenDim; ++i) even.push_back("e" + std::to_string(i));
  for (std::size_t i = 1; i <= oddDim; ++i) odd.push_back("f" + std::to_string(i));
  return withNames(field, std::move(even), std::move(odd));
}

SuperSpace SuperSpace::withNames(const Field& field, std::vector<std::string> evenNames,
                                 std::vector<std::string> oddNames) {
  std::vector<std::string> names = std::move(evenNames);
  std::vector<Parity> parities(names.size(), Parity::even);
  for (auto& n : oddNames) {
    names.push_back(std::move(n));
    parities.push_back(Parity::odd);
  }
  return make(field, std::move(names), std::move(parities));
}

SuperSpace SuperSpace::frame(const Field& field, std::vector<std::string> names,
                             std::vector<Parity> parities) {
  return make(field, std::move(names), std::move(parities));
}

std::optional<std::size_t> SuperSpace::indexOf(std::string_view name) const {
  auto it = m_data->index.find(std::string(name));
  if (it == m_data->index.end()) return std::nullopt;
  return it->second;
}

SuperVector SuperSpace::basisVector(std::size_t i) const { return SuperVector::basis(*this, i); }

SuperVector SuperSpace::zeroVector() const { return SuperVector::zero(*this); }

bool SuperSpace::operator==(const SuperSpace& o) const {
  if (m_data == o.m_data) return true;
  return m_data->field == o.m_data->field && m_data->names == o.m_data->names &&
         m_data->parities == o.m_data->parities;
}

std::string SuperSpace::str() const {
  return field().str() + "^{" + std::to_string(evenDim()) + "|" + std::to_string(oddDim()) + "}";
}

SuperSpace glSpace(const SuperSpace& v) {
  static FrameCache cache;
  return cache.get(v, &buildGlSpace);
}

SuperSpace omniSpace(const SuperSpace& v) {
  static FrameCache cache;
  return cache.get(v, &buildOmniSpace);
}

}  // namespace superomni
