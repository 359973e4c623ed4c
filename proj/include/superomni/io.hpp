#ifndef SUPEROMNI_IO_HPP
#define SUPEROMNI_IO_HPP

#include <json.hpp>

#include "superomni/lie2.hpp"

namespace superomni::io {

using nlohmann::json;

/// Thrown for malformed documents; the CLI maps it to exit code 2.
class DocumentError : public Error {
public:
  using Error::Error;
};

json loadFile(const std::string& path);

Field parseField(const json& doc);
json fieldToJson(const Field& field);

/// AlgebraDocument: field, space (even/odd names), bracket entries, and an
/// optional Gram form. Missing pairs are zero; transposes are never
/// inferred; duplicate (left,right) entries are an error.
struct ParsedAlgebra {
  BracketTable table;
  std::optional<EvenBilinearForm> form;
};
ParsedAlgebra parseAlgebra(const json& doc);
json algebraToJson(const BracketTable& table, const EvenBilinearForm* form = nullptr);

/// SubspaceDocument: field, ambient {dims, kind "omni"|"V"}, generators as
/// coefficient tables over E[i,j] and V coordinate names.
struct ParsedSubspace {
  SuperSpace v;      // the underlying V (standard names)
  bool omniAmbient;  // ambient is gl(V)+V when true, V itself otherwise
  GradedSubspace subspace;
};
ParsedSubspace parseSubspace(const json& doc);
json subspaceToJson(const SuperSpace& v, const GradedSubspace& subspace, bool omniAmbient);

/// RhoDocument: module space plus one gl(module) element per algebra basis
/// name, written over E[i,j] coordinates of the module.
struct ParsedRho {
  SuperSpace module;
  std::vector<SuperMap> images;  // aligned with the algebra's basis order
};
ParsedRho parseRho(const json& doc, const SuperSpace& algebraSpace);

json lie2ToJson(const Lie2Superalgebra& t);
Lie2Superalgebra parseLie2(const json& doc);

json crossedToJson(const CrossedModule& c);
CrossedModule parseCrossed(const json& doc);

json verdictToJson(const Verdict& v);
json reportToJson(const Report& r);

}  // namespace superomni::io

#endif
