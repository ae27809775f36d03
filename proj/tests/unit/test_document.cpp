#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gwo/document.hpp"
#include "gwo/error.hpp"
#include "support/builders.hpp"

using namespace gwo;
using namespace gwo::testing;

namespace {

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(GWO_DATA_DIR))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  REQUIRE(!out.empty());
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("document");

TEST_CASE("a canonical algebra document parses") {
  std::string text = R"({
    "kind": "algebra", "version": 1, "name": "z2",
    "payload": {
      "size": 2, "zero": 0,
      "add": [[0,1],[1,0]],
      "neg": [0,1]
    }
  })";
  StructureDocument doc = parse_document(text);
  CHECK(doc.kind() == "algebra");
  const auto& a = std::get<OpAlgebra>(doc.payload);
  CHECK(a.size == 2);
  CHECK(validate_document(doc).ok());
}

TEST_CASE("wrong row lengths name the offending field") {
  std::string text = R"({
    "kind": "algebra", "version": 1,
    "payload": {
      "size": 2, "zero": 0,
      "add": [[0,1,0],[1,0]],
      "neg": [0,1]
    }
  })";
  try {
    parse_document(text);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("add") != std::string::npos);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_document("{\"kind\": }");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("out-of-range indices are schema errors") {
  std::string text = R"({
    "kind": "algebra", "version": 1,
    "payload": {"size": 2, "zero": 0, "add": [[0,1],[1,5]], "neg": [0,1]}
  })";
  CHECK_THROWS_AS(parse_document(text), Error);
}

TEST_CASE("unknown kinds and versions are rejected") {
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"magma","version":1,"payload":{}})"), Error);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"algebra","version":2,"payload":{}})"), Error);
}

TEST_CASE("missing opposites are generated; transposes for noncommutative") {
  std::string text = R"({
    "kind": "algebra", "version": 1,
    "payload": {
      "size": 2, "zero": 0,
      "add": [[0,1],[1,0]], "neg": [0,1],
      "binary_ops": {"*": [[0,1],[0,0]]}
    }
  })";
  StructureDocument doc = parse_document(text);
  const auto& a = std::get<OpAlgebra>(doc.payload);
  REQUIRE(a.binary_ops.count("*~"));
  CHECK(a.opposites.at("*") == "*~");
  CHECK(a.star("*~", 0, 1) == a.star("*", 1, 0));
}

TEST_CASE("identities referencing unknown operations are schema errors") {
  std::string text = R"({
    "kind": "algebra", "version": 1,
    "payload": {
      "size": 2, "zero": 0, "add": [[0,1],[1,0]], "neg": [0,1],
      "identities": ["x*y = y*x"]
    }
  })";
  CHECK_THROWS_AS(parse_document(text), Error);
}

TEST_CASE("round-trip stability over the whole corpus") {
  for (const std::string& path : corpus_files()) {
    CAPTURE(path);
    std::string text = slurp(path);
    StructureDocument doc = parse_document(text);
    std::string once = serialize_document(doc);
    StructureDocument doc2 = parse_document(once);
    std::string twice = serialize_document(doc2);
    CHECK(once == twice);
    CHECK(doc == doc2);
  }
}

TEST_CASE("every corpus document validates cleanly") {
  for (const std::string& path : corpus_files()) {
    CAPTURE(path);
    StructureDocument doc = load_document(path);
    ValidationReport report = validate_document(doc);
    CHECK(report.ok());
  }
}

TEST_CASE("morphism documents resolve flavors and bases") {
  StructureDocument doc = load_document(std::string(GWO_DATA_DIR) +
                                        "/cover-z4-02.json");
  CHECK(doc.kind() == "morphism");
  REQUIRE(doc.base.has_value());
  CHECK(*doc.base == 0);
  CHECK(std::holds_alternative<InternalMorphism>(doc.payload));
}

TEST_CASE("action documents load the internal flavor") {
  StructureDocument doc = load_document(std::string(GWO_DATA_DIR) +
                                        "/action-z4-02.json");
  CHECK(doc.kind() == "action");
  CHECK(std::holds_alternative<InternalAction>(doc.payload));
}

TEST_CASE("counterexamples reverify against the corrupted structure") {
  std::mt19937 rng(42);
  std::vector<std::string> files = corpus_files();
  int reverified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::string& path = files[trial % files.size()];
    StructureDocument doc = load_document(path);

    // corrupt one entry of whichever algebra-like table comes first
    bool mutated = false;
    if (auto* a = std::get_if<OpAlgebra>(&doc.payload)) {
      int i = (int)(rng() % a->add.size());
      a->add[i] = (int)((a->add[i] + 1 + rng() % (a->size - 1 ? a->size - 1 : 1)) % a->size);
      mutated = true;
    } else if (auto* g = std::get_if<InternalGroupoid>(&doc.payload)) {
      int i = (int)(rng() % g->arrow_alg.add.size());
      g->arrow_alg.add[i] = (int)((g->arrow_alg.add[i] + 1) % g->arrow_alg.size);
      mutated = g->arrow_alg.size > 1;
    } else if (auto* x = std::get_if<CrossedModule>(&doc.payload)) {
      int i = (int)(rng() % x->action.dot.size());
      x->action.dot[i] = (int)((x->action.dot[i] + 1) % x->a.size);
      mutated = x->a.size > 1;
    }
    if (!mutated) continue;

    ValidationReport report = validate_document(doc);
    if (report.ok()) continue;  // a few corruptions cancel out
    for (const auto& failure : report.failures()) {
      CAPTURE(path);
      CAPTURE(failure.check);
      CHECK(reverify_counterexample(doc, failure));
      ++reverified;
    }
  }
  CHECK(reverified > 50);
}

TEST_SUITE_END();
