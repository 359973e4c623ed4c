#include "superomni/io.hpp"

#include <fstream>

namespace superomni::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DocumentError(what); }

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string scalarText(const json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(std::string(where) + ": coefficients must be exact strings or integers");
}

Scalar parseScalar(const Field& field, const json& j, const char* where) {
  try {
    return field.parse(scalarText(j, where));
  } catch (const Error& e) {
    bad(std::string(where) + ": " + e.what());
  }
}

std::vector<std::string> nameList(const json& j, const char* where) {
  if (!j.is_array()) bad(std::string(where) + " must be an array of names");
  std::vector<std::string> out;
  for (const json& n : j) {
    if (!n.is_string()) bad(std::string(where) + " must contain strings");
    out.push_back(n.get<std::string>());
  }
  return out;
}

SuperSpace parseSpace(const json& j, const Field& field, const char* where) {
  std::vector<std::string> even, odd;
  if (j.contains("even")) even = nameList(j["even"], where);
  if (j.contains("odd")) odd = nameList(j["odd"], where);
  try {
    return SuperSpace::withNames(field, std::move(even), std::move(odd));
  } catch (const Error& e) {
    bad(std::string(where) + ": " + e.what());
  }
}

std::size_t resolve(const SuperSpace& s, const json& j, const char* where) {
  if (!j.is_string()) bad(std::string(where) + ": expected a basis name");
  auto idx = s.indexOf(j.get<std::string>());
  if (!idx) bad(std::string(where) + ": unknown basis name '" + j.get<std::string>() + "'");
  return *idx;
}

SuperVector parseVector(const SuperSpace& s, const json& j, const char* where) {
  if (!j.is_object()) bad(std::string(where) + ": expected {name: coefficient}");
  SuperVector out = SuperVector::zero(s);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto idx = s.indexOf(it.key());
    if (!idx) bad(std::string(where) + ": unknown coordinate '" + it.key() + "'");
    out.addScaled(SuperVector::basis(s, *idx), parseScalar(s.field(), it.value(), where));
  }
  return out;
}

json vectorToJson(const SuperVector& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].isZero()) out[v.space().name(i)] = v[i].str();
  return out;
}

/// even coordinates first (in frame order), then odd; identity for spaces
/// built even-first.
std::vector<std::size_t> canonicalOrder(const SuperSpace& s) {
  std::vector<std::size_t> order;
  for (Parity p : {Parity::even, Parity::odd})
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (s.parity(i) == p) order.push_back(i);
  return order;
}

json spaceToJson(const SuperSpace& s) {
  json even = json::array(), odd = json::array();
  for (std::size_t i : canonicalOrder(s))
    (s.parity(i) == Parity::even ? even : odd).push_back(s.name(i));
  return json{{"even", even}, {"odd", odd}};
}

BracketTable parseBracket(const SuperSpace& s, const json& entries, const char* where) {
  if (!entries.is_array()) bad(std::string(where) + " must be an array of entries");
  std::vector<SuperVector> values(s.dim() * s.dim(), SuperVector::zero(s));
  std::vector<bool> seen(s.dim() * s.dim(), false);
  for (const json& e : entries) {
    std::size_t left = resolve(s, member(e, "left"), where);
    std::size_t right = resolve(s, member(e, "right"), where);
    if (seen[left * s.dim() + right])
      bad(std::string(where) + ": duplicate entry (" + s.name(left) + ", " + s.name(right) + ")");
    seen[left * s.dim() + right] = true;
    values[left * s.dim() + right] = parseVector(s, member(e, "value"), where);
  }
  return BracketTable(s, std::move(values));
}

json bracketToJson(const BracketTable& t) {
  json out = json::array();
  std::vector<std::size_t> order = canonicalOrder(t.space());
  for (std::size_t i : order)
    for (std::size_t j : order) {
      const SuperVector& v = t.value(i, j);
      if (v.isZero()) continue;
      out.push_back(json{{"left", t.space().name(i)},
                         {"right", t.space().name(j)},
                         {"value", vectorToJson(v)}});
    }
  return out;
}

}  // namespace

json loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Field parseField(const json& doc) {
  const json& f = member(doc, "field");
  if (f.is_string()) {
    if (f.get<std::string>() == "Q") return Field::rationals();
    bad("field must be \"Q\" or an odd prime");
  }
  if (f.is_number_integer()) {
    try {
      return Field::primeField(f.get<long>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  bad("field must be \"Q\" or an odd prime");
}

json fieldToJson(const Field& field) {
  if (field.isRational()) return "Q";
  return field.prime();
}

ParsedAlgebra parseAlgebra(const json& doc) {
  Field field = parseField(doc);
  SuperSpace space = parseSpace(member(doc, "space"), field, "space");
  BracketTable table = parseBracket(space, member(doc, "bracket"), "bracket");
  std::optional<EvenBilinearForm> form;
  if (doc.contains("form")) {
    const json& entries = doc["form"];
    if (!entries.is_array()) bad("form must be an array of entries");
    std::vector<Scalar> gram(space.dim() * space.dim(), field.zero());
    std::vector<bool> seen(space.dim() * space.dim(), false);
    for (const json& e : entries) {
      std::size_t left = resolve(space, member(e, "left"), "form");
      std::size_t right = resolve(space, member(e, "right"), "form");
      if (seen[left * space.dim() + right])
        bad("form: duplicate entry (" + space.name(left) + ", " + space.name(right) + ")");
      seen[left * space.dim() + right] = true;
      gram[left * space.dim() + right] = parseScalar(field, member(e, "value"), "form");
    }
    // fill super-symmetric partners that were left implicit
    for (std::size_t i = 0; i < space.dim(); ++i)
      for (std::size_t j = 0; j < space.dim(); ++j)
        if (seen[i * space.dim() + j] && !seen[j * space.dim() + i]) {
          Scalar v = gram[i * space.dim() + j];
          gram[j * space.dim() + i] =
              koszulSign(space.parity(i), space.parity(j)) < 0 ? -v : v;
          seen[j * space.dim() + i] = true;
        }
    try {
      form.emplace(space, std::move(gram));
    } catch (const Error& e) {
      bad(std::string("form: ") + e.what());
    }
  }
  return ParsedAlgebra{std::move(table), std::move(form)};
}

json algebraToJson(const BracketTable& table, const EvenBilinearForm* form) {
  json out{{"field", fieldToJson(table.space().field())},
           {"space", spaceToJson(table.space())},
           {"bracket", bracketToJson(table)}};
  if (form) {
    json entries = json::array();
    std::vector<std::size_t> order = canonicalOrder(table.space());
    for (std::size_t i : order)
      for (std::size_t j : order)
        if (!form->value(i, j).isZero())
          entries.push_back(json{{"left", table.space().name(i)},
                                 {"right", table.space().name(j)},
                                 {"value", form->value(i, j).str()}});
    out["form"] = entries;
  }
  return out;
}

ParsedSubspace parseSubspace(const json& doc) {
  Field field = parseField(doc);
  const json& ambient = member(doc, "ambient");
  const json& dims = member(ambient, "dims");
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer())
    bad("ambient.dims must be [m, n]");
  SuperSpace v = SuperSpace::standard(field, dims[0].get<std::size_t>(),
                                      dims[1].get<std::size_t>());
  bool omniAmbient = true;
  if (ambient.contains("kind")) {
    std::string kind = ambient["kind"].get<std::string>();
    if (kind == "V")
      omniAmbient = false;
    else if (kind != "omni")
      bad("ambient.kind must be \"omni\" or \"V\"");
  }
  SuperSpace frame = omniAmbient ? omniSpace(v) : v;
  const json& gens = member(doc, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  std::vector<SuperVector> vectors;
  for (const json& g : gens) vectors.push_back(parseVector(frame, g, "generators"));
  return ParsedSubspace{v, omniAmbient, GradedSubspace::fromGenerators(frame, vectors)};
}

json subspaceToJson(const SuperSpace& v, const GradedSubspace& subspace, bool omniAmbient) {
  json gens = json::array();
  for (std::size_t k = 0; k < subspace.dim(); ++k)
    gens.push_back(vectorToJson(subspace.basisVector(k)));
  return json{{"field", fieldToJson(v.field())},
              {"ambient", json{{"dims", json::array({v.evenDim(), v.oddDim()})},
                               {"kind", omniAmbient ? "omni" : "V"}}},
              {"generators", gens}};
}

ParsedRho parseRho(const json& doc, const SuperSpace& algebraSpace) {
  SuperSpace module = parseSpace(member(doc, "module"), algebraSpace.field(), "module");
  SuperSpace gl = glSpace(module);
  const json& images = member(doc, "images");
  if (!images.is_array()) bad("images must be an array");
  std::vector<std::optional<SuperMap>> byIndex(algebraSpace.dim());
  for (const json& e : images) {
    std::size_t arg = resolve(algebraSpace, member(e, "arg"), "images");
    if (byIndex[arg]) bad("images: duplicate entry for '" + algebraSpace.name(arg) + "'");
    SuperVector coords = parseVector(gl, member(e, "value"), "images");
    byIndex[arg] = SuperMap::fromGlCoords(module, coords);
  }
  std::vector<SuperMap> out;
  for (std::size_t i = 0; i < algebraSpace.dim(); ++i)
    out.push_back(byIndex[i] ? *byIndex[i] : SuperMap::zero(module, module));
  return ParsedRho{std::move(module), std::move(out)};
}

json lie2ToJson(const Lie2Superalgebra& t) {
  const SuperSpace& v0 = t.v0();
  const SuperSpace& v1 = t.v1();
  std::vector<std::size_t> order0 = canonicalOrder(v0);
  std::vector<std::size_t> order1 = canonicalOrder(v1);

  json d = json::array();
  for (std::size_t j : order1) {
    SuperVector img = t.d().column(j);
    if (!img.isZero()) d.push_back(json{{"arg", v1.name(j)}, {"value", vectorToJson(img)}});
  }
  json mixed = json::array();
  for (std::size_t a : order0)
    for (std::size_t j : order1)
      if (!t.l2MixedValue(a, j).isZero())
        mixed.push_back(json{{"left", v0.name(a)},
                             {"right", v1.name(j)},
                             {"value", vectorToJson(t.l2MixedValue(a, j))}});
  json l3 = json::array();
  for (std::size_t a : order0)
    for (std::size_t b : order0)
      for (std::size_t c : order0)
        if (!t.l3Value(a, b, c).isZero())
          l3.push_back(json{{"args", json::array({v0.name(a), v0.name(b), v0.name(c)})},
                            {"value", vectorToJson(t.l3Value(a, b, c))}});
  return json{{"field", fieldToJson(v0.field())}, {"v0", spaceToJson(v0)},
              {"v1", spaceToJson(v1)},           {"d", d},
              {"l2v0v0", bracketToJson(t.l2Level0())}, {"l2v0v1", mixed},
              {"l3", l3}};
}

Lie2Superalgebra parseLie2(const json& doc) {
  Field field = parseField(doc);
  SuperSpace v0 = parseSpace(member(doc, "v0"), field, "v0");
  SuperSpace v1 = parseSpace(member(doc, "v1"), field, "v1");

  std::vector<Scalar> dEntries(v0.dim() * v1.dim(), field.zero());
  if (doc.contains("d")) {
    if (!doc["d"].is_array()) bad("d must be an array");
    std::vector<bool> seen(v1.dim(), false);
    for (const json& e : doc["d"]) {
      std::size_t arg = resolve(v1, member(e, "arg"), "d");
      if (seen[arg]) bad("d: duplicate entry for '" + v1.name(arg) + "'");
      seen[arg] = true;
      SuperVector img = parseVector(v0, member(e, "value"), "d");
      for (std::size_t r = 0; r < v0.dim(); ++r) dEntries[r * v1.dim() + arg] = img[r];
    }
  }
  SuperMap d(v1, v0, std::move(dEntries));

  BracketTable l2Level0 = parseBracket(v0, member(doc, "l2v0v0"), "l2v0v0");

  std::vector<SuperVector> mixed(v0.dim() * v1.dim(), SuperVector::zero(v1));
  if (doc.contains("l2v0v1")) {
    if (!doc["l2v0v1"].is_array()) bad("l2v0v1 must be an array");
    std::vector<bool> seen(v0.dim() * v1.dim(), false);
    for (const json& e : doc["l2v0v1"]) {
      std::size_t a = resolve(v0, member(e, "left"), "l2v0v1");
      std::size_t j = resolve(v1, member(e, "right"), "l2v0v1");
      if (seen[a * v1.dim() + j])
        bad("l2v0v1: duplicate entry (" + v0.name(a) + ", " + v1.name(j) + ")");
      seen[a * v1.dim() + j] = true;
      mixed[a * v1.dim() + j] = parseVector(v1, member(e, "value"), "l2v0v1");
    }
  }

  std::vector<SuperVector> l3(v0.dim() * v0.dim() * v0.dim(), SuperVector::zero(v1));
  if (doc.contains("l3")) {
    if (!doc["l3"].is_array()) bad("l3 must be an array");
    std::vector<bool> seen(l3.size(), false);
    for (const json& e : doc["l3"]) {
      const json& args = member(e, "args");
      if (!args.is_array() || args.size() != 3) bad("l3 entries need three args");
      std::size_t a = resolve(v0, args[0], "l3");
      std::size_t b = resolve(v0, args[1], "l3");
      std::size_t c = resolve(v0, args[2], "l3");
      std::size_t idx = (a * v0.dim() + b) * v0.dim() + c;
      if (seen[idx])
        bad("l3: duplicate entry (" + v0.name(a) + ", " + v0.name(b) + ", " + v0.name(c) + ")");
      seen[idx] = true;
      l3[idx] = parseVector(v1, member(e, "value"), "l3");
    }
  }
  return Lie2Superalgebra(std::move(v0), std::move(v1), std::move(d), std::move(l2Level0),
                          std::move(mixed), std::move(l3));
}

json crossedToJson(const CrossedModule& c) {
  const SuperSpace& gs = c.g.space();
  const SuperSpace& hs = c.h.space();
  json action = json::array();
  for (std::size_t a : canonicalOrder(gs))
    for (std::size_t j : canonicalOrder(hs))
      if (!c.actionValue(a, j).isZero())
        action.push_back(json{{"left", gs.name(a)},
                              {"right", hs.name(j)},
                              {"value", vectorToJson(c.actionValue(a, j))}});
  json phi = json::array();
  for (std::size_t j : canonicalOrder(hs)) {
    SuperVector img = c.phi.column(j);
    if (!img.isZero()) phi.push_back(json{{"arg", hs.name(j)}, {"value", vectorToJson(img)}});
  }
  return json{{"field", fieldToJson(gs.field())},
              {"g", json{{"space", spaceToJson(gs)}, {"bracket", bracketToJson(c.g)}}},
              {"h", json{{"space", spaceToJson(hs)}, {"bracket", bracketToJson(c.h)}}},
              {"action", action},
              {"phi", phi}};
}

CrossedModule parseCrossed(const json& doc) {
  Field field = parseField(doc);
  const json& gDoc = member(doc, "g");
  const json& hDoc = member(doc, "h");
  SuperSpace gs = parseSpace(member(gDoc, "space"), field, "g.space");
  SuperSpace hs = parseSpace(member(hDoc, "space"), field, "h.space");
  BracketTable g = parseBracket(gs, member(gDoc, "bracket"), "g.bracket");
  BracketTable h = parseBracket(hs, member(hDoc, "bracket"), "h.bracket");

  std::vector<SuperVector> action(gs.dim() * hs.dim(), SuperVector::zero(hs));
  if (doc.contains("action")) {
    std::vector<bool> seen(action.size(), false);
    for (const json& e : doc["action"]) {
      std::size_t a = resolve(gs, member(e, "left"), "action");
      std::size_t j = resolve(hs, member(e, "right"), "action");
      if (seen[a * hs.dim() + j])
        bad("action: duplicate entry (" + gs.name(a) + ", " + hs.name(j) + ")");
      seen[a * hs.dim() + j] = true;
      action[a * hs.dim() + j] = parseVector(hs, member(e, "value"), "action");
    }
  }

  std::vector<Scalar> phiEntries(gs.dim() * hs.dim(), field.zero());
  if (doc.contains("phi")) {
    std::vector<bool> seen(hs.dim(), false);
    for (const json& e : doc["phi"]) {
      std::size_t arg = resolve(hs, member(e, "arg"), "phi");
      if (seen[arg]) bad("phi: duplicate entry for '" + hs.name(arg) + "'");
      seen[arg] = true;
      SuperVector img = parseVector(gs, member(e, "value"), "phi");
      for (std::size_t r = 0; r < gs.dim(); ++r) phiEntries[r * hs.dim() + arg] = img[r];
    }
  }
  SuperMap phi(hs, gs, std::move(phiEntries));
  return CrossedModule{std::move(g), std::move(h), std::move(action), std::move(phi)};
}

json verdictToJson(const Verdict& v) {
  json out{{"check", v.check}, {"pass", v.pass}};
  if (!v.tuple.empty()) out["tuple"] = v.tuple;
  if (!v.pass) {
    out["residual"] = v.residual;
    json coords = json::object();
    for (const auto& [name, coeff] : v.residualCoords) coords[name] = coeff;
    out["residualCoords"] = coords;
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json reportToJson(const Report& r) {
  json checks = json::array();
  for (const Verdict& v : r.verdicts) checks.push_back(verdictToJson(v));
  return json{{"pass", r.pass()}, {"checks", checks}};
}

}  // namespace superomni::io
