#include "gwo/document.hpp"

#include <fstream>
#include <sstream>

#include "gwo/error.hpp"
#include "json.hpp"

namespace gwo {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& field,
                               const std::string& why) {
  throw Error(ErrorCode::SchemaError, "field '" + field + "': " + why);
}

const ordered_json& member(const ordered_json& obj, const std::string& field) {
  if (!obj.is_object() || !obj.contains(field))
    schema_error(field, "missing");
  return obj.at(field);
}

int get_int(const ordered_json& obj, const std::string& field) {
  const auto& v = member(obj, field);
  if (!v.is_number_integer()) schema_error(field, "must be an integer");
  return v.get<int>();
}

std::vector<int> get_index_array(const ordered_json& v,
                                 const std::string& field, size_t len,
                                 int range) {
  if (!v.is_array() || v.size() != len)
    schema_error(field, "must be an array of length " + std::to_string(len));
  std::vector<int> out;
  out.reserve(len);
  for (const auto& e : v) {
    if (!e.is_number_integer()) schema_error(field, "entries must be integers");
    int i = e.get<int>();
    if (i < 0 || i >= range)
      schema_error(field, "index " + std::to_string(i) + " out of range");
    out.push_back(i);
  }
  return out;
}

/// rows x cols table given as nested arrays.
std::vector<int> get_table(const ordered_json& v, const std::string& field,
                           size_t rows, size_t cols, int range) {
  if (!v.is_array() || v.size() != rows)
    schema_error(field, "must have " + std::to_string(rows) + " rows");
  std::vector<int> out;
  out.reserve(rows * cols);
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols)
      schema_error(field, "row of wrong length");
    for (const auto& e : row) {
      if (!e.is_number_integer())
        schema_error(field, "entries must be integers");
      int i = e.get<int>();
      if (i < 0 || i >= range)
        schema_error(field, "index " + std::to_string(i) + " out of range");
      out.push_back(i);
    }
  }
  return out;
}

ordered_json table_to_json(const std::vector<int>& table, int rows, int cols) {
  ordered_json out = ordered_json::array();
  for (int r = 0; r < rows; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < cols; ++c) row.push_back(table[(size_t)r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

OpAlgebra parse_algebra(const ordered_json& p, const std::string& where) {
  OpAlgebra a;
  a.size = get_int(p, "size");
  if (a.size <= 0) schema_error(where + ".size", "must be positive");
  a.zero = p.contains("zero") ? get_int(p, "zero") : 0;
  if (a.zero != 0)
    schema_error(where + ".zero", "the zero element must be index 0");
  a.add = get_table(member(p, "add"), where + ".add", a.size, a.size, a.size);
  a.neg =
      get_index_array(member(p, "neg"), where + ".neg", a.size, a.size);
  if (p.contains("binary_ops")) {
    const auto& ops = p.at("binary_ops");
    if (!ops.is_object()) schema_error(where + ".binary_ops", "must be a map");
    for (const auto& [name, table] : ops.items())
      a.binary_ops[name] = get_table(table, where + ".binary_ops." + name,
                                     a.size, a.size, a.size);
  }
  if (p.contains("unary_ops")) {
    const auto& ops = p.at("unary_ops");
    if (!ops.is_object()) schema_error(where + ".unary_ops", "must be a map");
    for (const auto& [name, table] : ops.items())
      a.unary_ops[name] = get_index_array(table, where + ".unary_ops." + name,
                                          a.size, a.size);
  }
  if (p.contains("opposites")) {
    const auto& opp = p.at("opposites");
    if (!opp.is_object()) schema_error(where + ".opposites", "must be a map");
    for (const auto& [name, other] : opp.items()) {
      if (!other.is_string())
        schema_error(where + ".opposites", "values must be op names");
      if (!a.binary_ops.count(name) ||
          !a.binary_ops.count(other.get<std::string>()))
        schema_error(where + ".opposites", "unknown operation name");
      a.opposites[name] = other.get<std::string>();
    }
  }
  // generate missing opposites: self for symmetric tables, a fresh
  // transposed op otherwise
  std::vector<std::pair<std::string, std::vector<int>>> generated;
  for (const auto& [name, table] : a.binary_ops) {
    if (a.opposites.count(name)) continue;
    bool symmetric = true;
    for (int x = 0; x < a.size && symmetric; ++x)
      for (int y = 0; y < a.size && symmetric; ++y)
        if (table[(size_t)x * a.size + y] != table[(size_t)y * a.size + x])
          symmetric = false;
    if (symmetric) {
      a.opposites[name] = name;
    } else {
      std::vector<int> transpose((size_t)a.size * a.size);
      for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < a.size; ++y)
          transpose[(size_t)x * a.size + y] = table[(size_t)y * a.size + x];
      generated.push_back({name + "~", std::move(transpose)});
      a.opposites[name] = name + "~";
      a.opposites[name + "~"] = name;
    }
  }
  for (auto& [name, table] : generated) {
    if (a.binary_ops.count(name))
      schema_error(where + ".binary_ops", "name '" + name + "' collides with "
                   "a generated opposite");
    a.binary_ops[name] = std::move(table);
  }
  for (const auto& [name, other] : a.opposites)
    if (!a.opposites.count(other) || a.opposites.at(other) != name)
      schema_error(where + ".opposites", "pairing is not an involution");
  if (p.contains("identities")) {
    const auto& ids = p.at("identities");
    if (!ids.is_array()) schema_error(where + ".identities", "must be a list");
    for (const auto& text : ids) {
      if (!text.is_string())
        schema_error(where + ".identities", "entries must be strings");
      IdentityTerm id;
      try {
        id = parse_identity(text.get<std::string>());
      } catch (const Error& e) {
        schema_error(where + ".identities", e.what());
      }
      for (const auto& node : id.nodes) {
        if (node.kind == TermNode::Kind::Bin && !a.binary_ops.count(node.op))
          schema_error(where + ".identities",
                       "unknown operation '" + node.op + "'");
        if (node.kind == TermNode::Kind::Un && !a.unary_ops.count(node.op))
          schema_error(where + ".identities",
                       "unknown operation '" + node.op + "'");
      }
      a.extra_identities.push_back(std::move(id));
    }
  }
  return a;
}

ordered_json algebra_to_json(const OpAlgebra& a) {
  ordered_json p;
  p["size"] = a.size;
  p["zero"] = a.zero;
  p["add"] = table_to_json(a.add, a.size, a.size);
  p["neg"] = a.neg;
  if (!a.binary_ops.empty()) {
    ordered_json ops;
    for (const auto& [name, table] : a.binary_ops)
      ops[name] = table_to_json(table, a.size, a.size);
    p["binary_ops"] = std::move(ops);
    ordered_json opp;
    for (const auto& [name, other] : a.opposites) opp[name] = other;
    p["opposites"] = std::move(opp);
  }
  if (!a.unary_ops.empty()) {
    ordered_json ops;
    for (const auto& [name, table] : a.unary_ops) ops[name] = table;
    p["unary_ops"] = std::move(ops);
  }
  if (!a.extra_identities.empty()) {
    ordered_json ids = ordered_json::array();
    for (const auto& id : a.extra_identities) ids.push_back(id.text);
    p["identities"] = std::move(ids);
  }
  return p;
}

FinGroupoid parse_groupoid(const ordered_json& p, const std::string& where) {
  FinGroupoid g;
  g.num_objects = get_int(p, "objects");
  g.num_arrows = get_int(p, "arrows");
  if (g.num_objects <= 0) schema_error(where + ".objects", "must be positive");
  if (g.num_arrows <= 0) schema_error(where + ".arrows", "must be positive");
  g.src = get_index_array(member(p, "src"), where + ".src", g.num_arrows,
                          g.num_objects);
  g.tgt = get_index_array(member(p, "tgt"), where + ".tgt", g.num_arrows,
                          g.num_objects);
  g.id_of = get_index_array(member(p, "id_of"), where + ".id_of",
                            g.num_objects, g.num_arrows);
  const auto& comp = member(p, "comp");
  if (!comp.is_array()) schema_error(where + ".comp", "must be a list");
  for (const auto& triple : comp) {
    if (!triple.is_array() || triple.size() != 3)
      schema_error(where + ".comp", "entries must be [a,b,c] triples");
    std::vector<int> t =
        get_index_array(triple, where + ".comp", 3, g.num_arrows);
    if (g.tgt[t[0]] != g.src[t[1]])
      schema_error(where + ".comp", "pair (" + std::to_string(t[0]) + "," +
                                        std::to_string(t[1]) +
                                        ") is not composable");
    if (g.comp.count({t[0], t[1]}))
      schema_error(where + ".comp", "duplicate pair");
    g.comp[{t[0], t[1]}] = t[2];
  }
  return g;
}

ordered_json groupoid_to_json(const FinGroupoid& g) {
  ordered_json p;
  p["objects"] = g.num_objects;
  p["arrows"] = g.num_arrows;
  p["src"] = g.src;
  p["tgt"] = g.tgt;
  p["id_of"] = g.id_of;
  ordered_json comp = ordered_json::array();
  for (const auto& [pair, c] : g.comp)
    comp.push_back(ordered_json::array({pair.first, pair.second, c}));
  p["comp"] = std::move(comp);
  return p;
}

InternalGroupoid parse_internal(const ordered_json& p,
                                const std::string& where) {
  InternalGroupoid g;
  g.gpd = parse_groupoid(member(p, "groupoid"), where + ".groupoid");
  g.arrow_alg =
      parse_algebra(member(p, "arrow_algebra"), where + ".arrow_algebra");
  g.object_alg =
      parse_algebra(member(p, "object_algebra"), where + ".object_algebra");
  if (g.arrow_alg.size != g.gpd.num_arrows)
    schema_error(where + ".arrow_algebra.size", "must match the arrow count");
  if (g.object_alg.size != g.gpd.num_objects)
    schema_error(where + ".object_algebra.size", "must match the object count");
  if (g.arrow_alg.signature() != g.object_alg.signature())
    schema_error(where + ".object_algebra", "signature differs from the "
                 "arrow algebra");
  return g;
}

ordered_json internal_to_json(const InternalGroupoid& g) {
  ordered_json p;
  p["groupoid"] = groupoid_to_json(g.gpd);
  p["arrow_algebra"] = algebra_to_json(g.arrow_alg);
  p["object_algebra"] = algebra_to_json(g.object_alg);
  return p;
}

CrossedModule parse_xmod(const ordered_json& p, const std::string& where) {
  CrossedModule x;
  x.a = parse_algebra(member(p, "A"), where + ".A");
  x.b = parse_algebra(member(p, "B"), where + ".B");
  if (x.a.signature() != x.b.signature())
    schema_error(where + ".B", "signature differs from A");
  x.alpha = get_index_array(member(p, "alpha"), where + ".alpha", x.a.size,
                            x.b.size);
  x.action.actor = x.b;
  x.action.acted = x.a;
  x.action.dot = get_table(member(p, "dot"), where + ".dot", x.b.size,
                           x.a.size, x.a.size);
  if (!x.b.binary_ops.empty()) {
    const auto& stars = member(p, "star_actions");
    if (!stars.is_object())
      schema_error(where + ".star_actions", "must be a map");
    for (const auto& [name, table] : x.b.binary_ops) {
      (void)table;
      if (!stars.contains(name))
        schema_error(where + ".star_actions", "missing table for '" + name +
                                                  "'");
      x.action.stars[name] = get_table(stars.at(name),
                                       where + ".star_actions." + name,
                                       x.b.size, x.a.size, x.a.size);
    }
    for (const auto& [name, table] : stars.items()) {
      (void)table;
      if (!x.b.binary_ops.count(name))
        schema_error(where + ".star_actions", "unknown operation '" + name +
                                                  "'");
    }
  }
  return x;
}

ordered_json xmod_to_json(const CrossedModule& x) {
  ordered_json p;
  p["A"] = algebra_to_json(x.a);
  p["B"] = algebra_to_json(x.b);
  p["alpha"] = x.alpha;
  p["dot"] = table_to_json(x.action.dot, x.b.size, x.a.size);
  if (!x.action.stars.empty()) {
    ordered_json stars;
    for (const auto& [name, table] : x.action.stars)
      stars[name] = table_to_json(table, x.b.size, x.a.size);
    p["star_actions"] = std::move(stars);
  }
  return p;
}

std::map<std::pair<int, int>, int> parse_phi(const ordered_json& v,
                                             const std::string& where,
                                             int set_size, int num_arrows) {
  if (!v.is_array()) schema_error(where, "must be a list");
  std::map<std::pair<int, int>, int> phi;
  for (const auto& triple : v) {
    if (!triple.is_array() || triple.size() != 3)
      schema_error(where, "entries must be [x,a,y] triples");
    if (!triple[0].is_number_integer() || !triple[1].is_number_integer() ||
        !triple[2].is_number_integer())
      schema_error(where, "entries must be integers");
    int x = triple[0].get<int>(), a = triple[1].get<int>(),
        y = triple[2].get<int>();
    if (x < 0 || x >= set_size || y < 0 || y >= set_size)
      schema_error(where, "set index out of range");
    if (a < 0 || a >= num_arrows) schema_error(where, "arrow out of range");
    if (phi.count({x, a})) schema_error(where, "duplicate pair");
    phi[{x, a}] = y;
  }
  return phi;
}

ordered_json phi_to_json(const std::map<std::pair<int, int>, int>& phi) {
  ordered_json out = ordered_json::array();
  for (const auto& [pair, y] : phi)
    out.push_back(ordered_json::array({pair.first, pair.second, y}));
  return out;
}

StructureDocument::Payload parse_action(const ordered_json& p,
                                        const std::string& where) {
  bool internal = p.contains("internal");
  bool plain = p.contains("groupoid");
  if (internal == plain)
    schema_error(where, "need exactly one of 'internal' or 'groupoid'");
  if (internal) {
    InternalAction act;
    act.gpd = parse_internal(member(p, "internal"), where + ".internal");
    act.set_alg =
        parse_algebra(member(p, "set_algebra"), where + ".set_algebra");
    if (act.set_alg.signature() != act.gpd.object_alg.signature())
      schema_error(where + ".set_algebra", "signature differs from the "
                   "groupoid's");
    act.theta = get_index_array(member(p, "theta"), where + ".theta",
                                act.set_alg.size, act.gpd.gpd.num_objects);
    act.phi = parse_phi(member(p, "phi"), where + ".phi", act.set_alg.size,
                        act.gpd.gpd.num_arrows);
    return act;
  }
  GpdAction act;
  act.gpd = parse_groupoid(member(p, "groupoid"), where + ".groupoid");
  act.set_size = get_int(p, "set_size");
  if (act.set_size <= 0) schema_error(where + ".set_size", "must be positive");
  act.theta = get_index_array(member(p, "theta"), where + ".theta",
                              act.set_size, act.gpd.num_objects);
  act.phi = parse_phi(member(p, "phi"), where + ".phi", act.set_size,
                      act.gpd.num_arrows);
  return act;
}

StructureDocument::Payload parse_morphism(const ordered_json& p,
                                          const std::string& where) {
  const auto& flavor = member(p, "flavor");
  if (!flavor.is_string()) schema_error(where + ".flavor", "must be a string");
  std::string f = flavor.get<std::string>();
  if (f == "groupoid") {
    GpdMorphism m;
    m.source = parse_groupoid(member(p, "source"), where + ".source");
    m.target = parse_groupoid(member(p, "target"), where + ".target");
    m.arrow_map = get_index_array(member(p, "arrow_map"), where + ".arrow_map",
                                  m.source.num_arrows, m.target.num_arrows);
    m.object_map =
        get_index_array(member(p, "object_map"), where + ".object_map",
                        m.source.num_objects, m.target.num_objects);
    return m;
  }
  if (f == "internal") {
    InternalMorphism m;
    m.source = parse_internal(member(p, "source"), where + ".source");
    m.target = parse_internal(member(p, "target"), where + ".target");
    if (m.source.arrow_alg.signature() != m.target.arrow_alg.signature())
      schema_error(where + ".target", "signature differs from the source");
    m.arrow_map = get_index_array(member(p, "arrow_map"), where + ".arrow_map",
                                  m.source.gpd.num_arrows,
                                  m.target.gpd.num_arrows);
    m.object_map =
        get_index_array(member(p, "object_map"), where + ".object_map",
                        m.source.gpd.num_objects, m.target.gpd.num_objects);
    return m;
  }
  if (f == "xmod") {
    XModMorphism m;
    m.source = parse_xmod(member(p, "source"), where + ".source");
    m.target = parse_xmod(member(p, "target"), where + ".target");
    if (m.source.a.signature() != m.target.a.signature())
      schema_error(where + ".target", "signature differs from the source");
    m.f1 = get_index_array(member(p, "f1"), where + ".f1", m.source.a.size,
                           m.target.a.size);
    m.f2 = get_index_array(member(p, "f2"), where + ".f2", m.source.b.size,
                           m.target.b.size);
    return m;
  }
  schema_error(where + ".flavor", "unknown flavor '" + f + "'");
}

}  // namespace

std::string StructureDocument::kind() const {
  struct Visitor {
    std::string operator()(const OpAlgebra&) { return "algebra"; }
    std::string operator()(const FinGroupoid&) { return "groupoid"; }
    std::string operator()(const InternalGroupoid&) { return "internal"; }
    std::string operator()(const CrossedModule&) { return "xmod"; }
    std::string operator()(const GpdAction&) { return "action"; }
    std::string operator()(const InternalAction&) { return "action"; }
    std::string operator()(const GpdMorphism&) { return "morphism"; }
    std::string operator()(const InternalMorphism&) { return "morphism"; }
    std::string operator()(const XModMorphism&) { return "morphism"; }
  };
  return std::visit(Visitor{}, payload);
}

StructureDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object())
    throw Error(ErrorCode::SchemaError, "document must be a JSON object");

  StructureDocument doc;
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) schema_error("kind", "must be a string");
  doc.version = get_int(j, "version");
  if (doc.version != 1) schema_error("version", "unsupported version");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) schema_error("name", "must be a string");
    doc.name = j.at("name").get<std::string>();
  }
  if (j.contains("comment")) {
    if (!j.at("comment").is_string())
      schema_error("comment", "must be a string");
    doc.comment = j.at("comment").get<std::string>();
  }
  const auto& payload = member(j, "payload");
  if (!payload.is_object()) schema_error("payload", "must be an object");

  std::string k = kind.get<std::string>();
  if (k == "algebra") {
    doc.payload = parse_algebra(payload, "payload");
  } else if (k == "groupoid") {
    doc.payload = parse_groupoid(payload, "payload");
  } else if (k == "internal") {
    doc.payload = parse_internal(payload, "payload");
  } else if (k == "xmod") {
    doc.payload = parse_xmod(payload, "payload");
  } else if (k == "action") {
    doc.payload = parse_action(payload, "payload");
  } else if (k == "morphism") {
    doc.payload = parse_morphism(payload, "payload");
  } else {
    schema_error("kind", "unknown kind '" + k + "'");
  }
  if (j.contains("base")) {
    if (!j.at("base").is_number_integer())
      schema_error("base", "must be an integer");
    int base = j.at("base").get<int>();
    int limit = -1;
    if (const auto* m = std::get_if<GpdMorphism>(&doc.payload))
      limit = m->source.num_objects;
    else if (const auto* m = std::get_if<InternalMorphism>(&doc.payload))
      limit = m->source.gpd.num_objects;
    else
      schema_error("base", "only morphism documents carry a base object");
    if (base < 0 || base >= limit) schema_error("base", "out of range");
    doc.base = base;
  }
  return doc;
}

std::string serialize_document(const StructureDocument& doc) {
  ordered_json j;
  j["kind"] = doc.kind();
  j["version"] = doc.version;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.comment.empty()) j["comment"] = doc.comment;

  struct Visitor {
    ordered_json operator()(const OpAlgebra& a) { return algebra_to_json(a); }
    ordered_json operator()(const FinGroupoid& g) {
      return groupoid_to_json(g);
    }
    ordered_json operator()(const InternalGroupoid& g) {
      return internal_to_json(g);
    }
    ordered_json operator()(const CrossedModule& x) { return xmod_to_json(x); }
    ordered_json operator()(const GpdAction& act) {
      ordered_json p;
      p["groupoid"] = groupoid_to_json(act.gpd);
      p["set_size"] = act.set_size;
      p["theta"] = act.theta;
      p["phi"] = phi_to_json(act.phi);
      return p;
    }
    ordered_json operator()(const InternalAction& act) {
      ordered_json p;
      p["internal"] = internal_to_json(act.gpd);
      p["set_algebra"] = algebra_to_json(act.set_alg);
      p["theta"] = act.theta;
      p["phi"] = phi_to_json(act.phi);
      return p;
    }
    ordered_json operator()(const GpdMorphism& m) {
      ordered_json p;
      p["flavor"] = "groupoid";
      p["source"] = groupoid_to_json(m.source);
      p["target"] = groupoid_to_json(m.target);
      p["arrow_map"] = m.arrow_map;
      p["object_map"] = m.object_map;
      return p;
    }
    ordered_json operator()(const InternalMorphism& m) {
      ordered_json p;
      p["flavor"] = "internal";
      p["source"] = internal_to_json(m.source);
      p["target"] = internal_to_json(m.target);
      p["arrow_map"] = m.arrow_map;
      p["object_map"] = m.object_map;
      return p;
    }
    ordered_json operator()(const XModMorphism& m) {
      ordered_json p;
      p["flavor"] = "xmod";
      p["source"] = xmod_to_json(m.source);
      p["target"] = xmod_to_json(m.target);
      p["f1"] = m.f1;
      p["f2"] = m.f2;
      return p;
    }
  };
  j["payload"] = std::visit(Visitor{}, doc.payload);
  if (doc.base) j["base"] = *doc.base;
  return j.dump();
}

StructureDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const StructureDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << serialize_document(doc) << "\n";
}

ValidationReport validate_document(const StructureDocument& doc) {
  struct Visitor {
    ValidationReport operator()(const OpAlgebra& a) {
      return validate_algebra(a);
    }
    ValidationReport operator()(const FinGroupoid& g) {
      return validate_groupoid(g);
    }
    ValidationReport operator()(const InternalGroupoid& g) {
      return validate_internal(g);
    }
    ValidationReport operator()(const CrossedModule& x) {
      return validate_xmod(x);
    }
    ValidationReport operator()(const GpdAction& act) {
      ValidationReport report;
      report.absorb(validate_groupoid(act.gpd), "");
      if (report.ok()) report.absorb(validate_action(act), "");
      return report;
    }
    ValidationReport operator()(const InternalAction& act) {
      return validate_internal_action(act);
    }
    ValidationReport operator()(const GpdMorphism& m) {
      ValidationReport report;
      report.absorb(validate_groupoid(m.source), "source");
      report.absorb(validate_groupoid(m.target), "target");
      if (report.ok()) report.absorb(validate_morphism(m), "");
      return report;
    }
    ValidationReport operator()(const InternalMorphism& m) {
      ValidationReport report;
      report.absorb(validate_internal(m.source), "source");
      report.absorb(validate_internal(m.target), "target");
      if (report.ok()) report.absorb(validate_internal_morphism(m), "");
      return report;
    }
    ValidationReport operator()(const XModMorphism& m) {
      ValidationReport report;
      report.absorb(validate_xmod(m.source), "source");
      report.absorb(validate_xmod(m.target), "target");
      if (!report.ok()) return report;
      report.mark_run("xmod_morphism");
      if (!is_xmod_morphism(m))
        report.add({"xmod_morphism", "", {}, 0, 1,
                    "maps do not commute with alpha or the actions"});
      return report;
    }
  };
  return std::visit(Visitor{}, doc.payload);
}

namespace {

bool strip_prefix(std::string& check, const std::string& prefix) {
  if (check.rfind(prefix + ".", 0) == 0) {
    check = check.substr(prefix.size() + 1);
    return true;
  }
  return false;
}

bool reverify_algebra(const OpAlgebra& a, CheckFailure f);
bool reverify_groupoid(const FinGroupoid& g, CheckFailure f);
bool reverify_gpd_morphism(const GpdMorphism& m, CheckFailure f);
bool reverify_internal(const InternalGroupoid& g, CheckFailure f);
bool reverify_gpd_action(const GpdAction& act, CheckFailure f);
bool reverify_internal_action(const InternalAction& act, CheckFailure f);
bool reverify_xmod(const CrossedModule& x, CheckFailure f);

bool reverify_hom(const OpAlgebra& a, const OpAlgebra& b,
                  const std::vector<int>& map, const CheckFailure& f) {
  if (f.tuple.size() == 2) {
    int x = f.tuple[0], y = f.tuple[1];
    int lhs, rhs;
    if (f.op == "+") {
      lhs = map[a.plus(x, y)];
      rhs = b.plus(map[x], map[y]);
    } else {
      lhs = map[a.star(f.op, x, y)];
      rhs = b.star(f.op, map[x], map[y]);
    }
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  }
  if (f.tuple.size() == 1) {
    int x = f.tuple[0];
    int lhs = map[a.un(f.op, x)];
    int rhs = b.un(f.op, map[x]);
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  }
  return false;
}

bool reverify_algebra(const OpAlgebra& a, CheckFailure f) {
  const auto& t = f.tuple;
  auto confirm = [&](int lhs, int rhs) {
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  };
  if (f.check == "algebra.add_assoc")
    return confirm(a.plus(a.plus(t[0], t[1]), t[2]),
                   a.plus(t[0], a.plus(t[1], t[2])));
  if (f.check == "algebra.zero_identity")
    return confirm(a.plus(t[0], t[1]), f.note == "left identity" ? t[1] : t[0]);
  if (f.check == "algebra.neg_inverse")
    return confirm(f.note == "right inverse" ? a.plus(t[0], a.minus(t[0]))
                                             : a.plus(a.minus(t[0]), t[0]),
                   a.zero);
  if (f.check == "algebra.opposite")
    return confirm(a.star(a.opposites.at(f.op), t[0], t[1]),
                   a.star(f.op, t[1], t[0]));
  if (f.check == "algebra.left_distrib")
    return confirm(a.star(f.op, t[0], a.plus(t[1], t[2])),
                   a.plus(a.star(f.op, t[0], t[1]), a.star(f.op, t[0], t[2])));
  if (f.check == "algebra.unary_add")
    return confirm(a.un(f.op, a.plus(t[0], t[1])),
                   a.plus(a.un(f.op, t[0]), a.un(f.op, t[1])));
  if (f.check == "algebra.unary_star") {
    auto slash = f.op.find('/');
    if (slash == std::string::npos) return false;
    std::string w = f.op.substr(0, slash), s = f.op.substr(slash + 1);
    return confirm(a.star(s, a.un(w, t[0]), t[1]),
                   a.un(w, a.star(s, t[0], t[1])));
  }
  if (f.check.rfind("algebra.identity(", 0) == 0 || f.check == "identity") {
    IdentityTerm id = parse_identity(f.op);
    if (t.size() != id.vars.size()) return false;
    return confirm(eval_term(a, id, id.lhs, t), eval_term(a, id, id.rhs, t));
  }
  return false;
}

bool reverify_groupoid(const FinGroupoid& g, CheckFailure f) {
  const auto& t = f.tuple;
  auto confirm = [&](int lhs, int rhs) {
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  };
  if (f.check == "groupoid.eps_section")
    return confirm(f.note == "d0(eps)" ? g.src[g.id_of[t[0]]]
                                       : g.tgt[g.id_of[t[0]]],
                   t[0]);
  if (f.check == "groupoid.comp_total")
    return g.tgt[t[0]] == g.src[t[1]] && !g.comp.count({t[0], t[1]});
  if (f.check == "groupoid.comp_endpoints") {
    auto c = g.compose(t[0], t[1]);
    if (!c) return false;
    return f.note == "src" ? confirm(g.src[*c], g.src[t[0]])
                           : confirm(g.tgt[*c], g.tgt[t[1]]);
  }
  if (f.check == "groupoid.assoc") {
    auto ab = g.compose(t[0], t[1]);
    auto bc = g.compose(t[1], t[2]);
    if (!ab || !bc) return false;
    auto lhs = g.compose(*ab, t[2]);
    auto rhs = g.compose(t[0], *bc);
    return lhs && rhs && confirm(*lhs, *rhs);
  }
  if (f.check == "groupoid.identity_law") {
    auto v = f.note == "eps(src a).a" ? g.compose(g.id_of[g.src[t[0]]], t[0])
                                      : g.compose(t[0], g.id_of[g.tgt[t[0]]]);
    return (v ? *v : -1) == f.lhs && f.lhs != t[0];
  }
  if (f.check == "groupoid.inverses") return g.inverse(t[0]) < 0;
  return false;
}

bool reverify_gpd_morphism(const GpdMorphism& m, CheckFailure f) {
  if (strip_prefix(f.check, "source")) return reverify_groupoid(m.source, f);
  if (strip_prefix(f.check, "target")) return reverify_groupoid(m.target, f);
  const auto& t = f.tuple;
  auto confirm = [&](int lhs, int rhs) {
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  };
  if (f.check == "morphism.src_tgt") {
    int fa = m.arrow_map[t[0]];
    return f.note == "src"
               ? confirm(m.target.src[fa], m.object_map[m.source.src[t[0]]])
               : confirm(m.target.tgt[fa], m.object_map[m.source.tgt[t[0]]]);
  }
  if (f.check == "morphism.identities")
    return confirm(m.arrow_map[m.source.id_of[t[0]]],
                   m.target.id_of[m.object_map[t[0]]]);
  if (f.check == "morphism.composition") {
    auto c = m.source.compose(t[0], t[1]);
    if (!c) return false;
    auto fc = m.target.compose(m.arrow_map[t[0]], m.arrow_map[t[1]]);
    return (fc ? *fc : -1) == f.lhs && f.rhs == m.arrow_map[*c] &&
           f.lhs != f.rhs;
  }
  return false;
}

bool reverify_internal(const InternalGroupoid& g, CheckFailure f) {
  if (f.check.rfind("groupoid.", 0) == 0) return reverify_groupoid(g.gpd, f);
  if (strip_prefix(f.check, "arrow_algebra"))
    return reverify_algebra(g.arrow_alg, f);
  if (strip_prefix(f.check, "object_algebra"))
    return reverify_algebra(g.object_alg, f);
  const auto& t = f.tuple;
  if (f.check == "internal.d0_hom")
    return reverify_hom(g.arrow_alg, g.object_alg, g.gpd.src, f);
  if (f.check == "internal.d1_hom")
    return reverify_hom(g.arrow_alg, g.object_alg, g.gpd.tgt, f);
  if (f.check == "internal.eps_hom")
    return reverify_hom(g.object_alg, g.arrow_alg, g.gpd.id_of, f);
  if (f.check == "internal.eps_zero")
    return g.gpd.id_of[g.object_alg.zero] != g.arrow_alg.zero;
  if (f.check == "internal.interchange") {
    auto combine = [&](int x, int y) {
      return f.op == "+" ? g.arrow_alg.plus(x, y)
                         : g.arrow_alg.star(f.op, x, y);
    };
    auto ac = g.gpd.compose(t[0], t[2]);
    auto bd = g.gpd.compose(t[1], t[3]);
    if (!ac || !bd) return false;
    auto lhs = g.gpd.compose(combine(t[0], t[1]), combine(t[2], t[3]));
    int rhs = combine(*ac, *bd);
    return (lhs ? *lhs : -1) == f.lhs && rhs == f.rhs && f.lhs != f.rhs;
  }
  if (f.check == "internal.unary_interchange") {
    auto ab = g.gpd.compose(t[0], t[1]);
    if (!ab) return false;
    auto lhs = g.gpd.compose(g.arrow_alg.un(f.op, t[0]),
                             g.arrow_alg.un(f.op, t[1]));
    int rhs = g.arrow_alg.un(f.op, *ab);
    return (lhs ? *lhs : -1) == f.lhs && rhs == f.rhs && f.lhs != f.rhs;
  }
  if (f.check == "internal.inverse_formula") {
    int by_formula = g.arrow_alg.plus(
        g.arrow_alg.plus(g.gpd.id_of[g.gpd.tgt[t[0]]], g.arrow_alg.minus(t[0])),
        g.gpd.id_of[g.gpd.src[t[0]]]);
    return by_formula == f.lhs && g.gpd.inverse(t[0]) == f.rhs &&
           f.lhs != f.rhs;
  }
  return false;
}

bool reverify_gpd_action(const GpdAction& act, CheckFailure f) {
  if (f.check.rfind("groupoid.", 0) == 0)
    return reverify_groupoid(act.gpd, f);
  const auto& t = f.tuple;
  if (f.check == "action.domain") {
    bool should = act.theta[t[0]] == act.gpd.src[t[1]];
    bool has = act.phi.count({t[0], t[1]}) > 0;
    return should != has;
  }
  if (f.check == "action.theta_of_xa") {
    auto y = act.act(t[0], t[1]);
    return y && act.theta[*y] != act.gpd.tgt[t[1]];
  }
  if (f.check == "action.compose") {
    auto ab = act.gpd.compose(t[1], t[2]);
    if (!ab) return false;
    auto x_ab = act.act(t[0], *ab);
    auto xa = act.act(t[0], t[1]);
    auto xa_b = xa ? act.act(*xa, t[2]) : std::nullopt;
    return !x_ab || !xa_b || *x_ab != *xa_b;
  }
  if (f.check == "action.unit") {
    auto xe = act.act(t[0], act.gpd.id_of[act.theta[t[0]]]);
    return !xe || *xe != t[0];
  }
  return false;
}

bool reverify_internal_action(const InternalAction& act, CheckFailure f) {
  if (strip_prefix(f.check, "set_algebra"))
    return reverify_algebra(act.set_alg, f);
  if (f.check.rfind("groupoid.", 0) == 0 ||
      f.check.rfind("arrow_algebra.", 0) == 0 ||
      f.check.rfind("object_algebra.", 0) == 0 ||
      f.check.rfind("internal.", 0) == 0)
    return reverify_internal(act.gpd, f);
  if (f.check == "action.theta_hom")
    return reverify_hom(act.set_alg, act.gpd.object_alg, act.theta, f);
  const auto& t = f.tuple;
  if (f.check == "action.compat") {
    auto on_set = [&](int x, int y) {
      return f.op == "+" ? act.set_alg.plus(x, y)
                         : act.set_alg.star(f.op, x, y);
    };
    auto on_arrows = [&](int a, int b) {
      return f.op == "+" ? act.gpd.arrow_alg.plus(a, b)
                         : act.gpd.arrow_alg.star(f.op, a, b);
    };
    auto xa = act.act(t[0], t[2]);
    auto yb = act.act(t[1], t[3]);
    if (!xa || !yb) return false;
    auto lhs = act.act(on_set(t[0], t[1]), on_arrows(t[2], t[3]));
    int rhs = on_set(*xa, *yb);
    return (lhs ? *lhs : -1) == f.lhs && rhs == f.rhs && f.lhs != f.rhs;
  }
  if (f.check == "action.unary_compat") {
    auto xa = act.act(t[0], t[1]);
    if (!xa) return false;
    auto lhs = act.act(act.set_alg.un(f.op, t[0]),
                       act.gpd.arrow_alg.un(f.op, t[1]));
    int rhs = act.set_alg.un(f.op, *xa);
    return (lhs ? *lhs : -1) == f.lhs && rhs == f.rhs && f.lhs != f.rhs;
  }
  if (f.check.rfind("action.", 0) == 0)
    return reverify_gpd_action(act.underlying(), f);
  return false;
}

bool reverify_xmod(const CrossedModule& x, CheckFailure f) {
  if (strip_prefix(f.check, "A")) return reverify_algebra(x.a, f);
  if (strip_prefix(f.check, "B")) return reverify_algebra(x.b, f);
  const auto& t = f.tuple;
  auto confirm = [&](int lhs, int rhs) {
    return lhs == f.lhs && rhs == f.rhs && lhs != rhs;
  };
  if (f.check == "xmod.alpha_hom")
    return !is_homomorphism({x.a, x.b, x.alpha});
  if (f.check == "xmod.derived_action")
    return !validate_algebra(semidirect_product(x.action)).ok();
  if (f.check == "xmod.cm1")
    return confirm(x.alpha[x.action.dot_of(t[0], t[1])],
                   x.b.plus(x.b.plus(t[0], x.alpha[t[1]]), x.b.minus(t[0])));
  if (f.check == "xmod.cm2")
    return confirm(x.action.dot_of(x.alpha[t[0]], t[1]),
                   x.a.plus(x.a.plus(t[0], t[1]), x.a.minus(t[0])));
  if (f.check == "xmod.cm3")
    return confirm(x.action.star_of(f.op, x.alpha[t[0]], t[1]),
                   x.a.star(f.op, t[0], t[1]));
  if (f.check == "xmod.cm4") {
    if (f.note == "alpha(b*a)")
      return confirm(x.alpha[x.action.star_of(f.op, t[0], t[1])],
                     x.b.star(f.op, t[0], x.alpha[t[1]]));
    return confirm(x.alpha[x.action.star_of(x.a.opposites.at(f.op), t[0],
                                            t[1])],
                   x.b.star(f.op, x.alpha[t[1]], t[0]));
  }
  return false;
}

}  // namespace

bool reverify_counterexample(const StructureDocument& doc,
                             const CheckFailure& failure) {
  struct Visitor {
    CheckFailure f;
    bool operator()(const OpAlgebra& a) { return reverify_algebra(a, f); }
    bool operator()(const FinGroupoid& g) { return reverify_groupoid(g, f); }
    bool operator()(const InternalGroupoid& g) {
      return reverify_internal(g, f);
    }
    bool operator()(const CrossedModule& x) { return reverify_xmod(x, f); }
    bool operator()(const GpdAction& act) { return reverify_gpd_action(act, f); }
    bool operator()(const InternalAction& act) {
      return reverify_internal_action(act, f);
    }
    bool operator()(const GpdMorphism& m) {
      return reverify_gpd_morphism(m, f);
    }
    bool operator()(const InternalMorphism& m) {
      CheckFailure g = f;
      if (strip_prefix(g.check, "source")) return reverify_internal(m.source, g);
      if (strip_prefix(g.check, "target")) return reverify_internal(m.target, g);
      if (g.check.rfind("morphism.", 0) == 0)
        return reverify_gpd_morphism(m.underlying(), g);
      if (g.check == "internal_morphism.arrow_hom")
        return reverify_hom(m.source.arrow_alg, m.target.arrow_alg,
                            m.arrow_map, g);
      if (g.check == "internal_morphism.object_hom")
        return reverify_hom(m.source.object_alg, m.target.object_alg,
                            m.object_map, g);
      return false;
    }
    bool operator()(const XModMorphism& m) {
      CheckFailure g = f;
      if (strip_prefix(g.check, "source")) return reverify_xmod(m.source, g);
      if (strip_prefix(g.check, "target")) return reverify_xmod(m.target, g);
      if (g.check == "xmod_morphism") return !is_xmod_morphism(m);
      return false;
    }
  };
  return std::visit(Visitor{failure}, doc.payload);
}

}  // namespace gwo
