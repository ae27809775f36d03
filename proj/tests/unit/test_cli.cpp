#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gwo/cli.hpp"
#include "gwo/document.hpp"
#include "json.hpp"

using namespace gwo;
using json = nlohmann::json;

namespace {

std::string data(const std::string& file) {
  return std::string(GWO_DATA_DIR) + "/" + file;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

/// Structural validator for the subset of JSON Schema the published
/// report schema uses: type, enum, required, properties,
/// additionalProperties and items. Enough to certify conformance.
bool conforms(const json& schema, const json& value);

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

bool conforms(const json& schema, const json& value) {
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& option : schema.at("enum"))
      if (option == value) any = true;
    if (!any) return false;
  }
  if (schema.contains("type") &&
      !type_matches(schema.at("type").get<std::string>(), value))
    return false;
  if (schema.contains("required"))
    for (const auto& field : schema.at("required"))
      if (!value.contains(field.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : value.items()) {
      if (schema.at("properties").contains(key)) {
        if (!conforms(schema.at("properties").at(key), sub)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties") == false) {
        return false;
      }
    }
  }
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!conforms(schema.at("items"), item)) return false;
  return true;
}

json report_schema() {
  std::ifstream in(std::string(GWO_DOCS_DIR) + "/report-schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check passes on every corpus document") {
  for (const auto& entry : std::filesystem::directory_iterator(GWO_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CliReport report = run_command({"check", entry.path().string()});
    CAPTURE(entry.path().string());
    CHECK(report.exit_code == 0);
  }
}

TEST_CASE("check reports failures with exit code 1") {
  // corrupt a corpus algebra on disk
  StructureDocument doc = load_document(data("z4.json"));
  auto& a = std::get<OpAlgebra>(doc.payload);
  a.add[1 * 4 + 1] = 3;
  std::string path = temp_path("gwo-corrupt-z4.json");
  {
    std::ofstream out(path);
    out << serialize_document(doc);
  }
  CliReport report = run_command({"check", path});
  CHECK(report.exit_code == 1);
  bool has_counterexample = false;
  for (const auto& entry : report.entries)
    if (!entry.counterexamples.empty()) has_counterexample = true;
  CHECK(has_counterexample);
}

TEST_CASE("usage and parse problems exit with 2") {
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"check"}).exit_code == 2);
  CHECK(run_command({"check", "/nonexistent.json"}).exit_code == 2);
  CHECK(run_command({"cover", data("z4-internal.json")}).exit_code == 2);
  CHECK(run_command({"cover", data("z4-internal.json"), "--subgroup", "a,b"})
            .exit_code == 2);
  std::string path = temp_path("gwo-notjson.json");
  {
    std::ofstream out(path);
    out << "not json";
  }
  CHECK(run_command({"check", path}).exit_code == 2);
}

TEST_CASE("cover on an internal document reports the characteristic group") {
  std::string out_path = temp_path("gwo-cover.json");
  CliReport report = run_command({"cover", data("z4-internal.json"),
                                  "--object", "0", "--subgroup", "0,2",
                                  "--out", out_path});
  REQUIRE(report.exit_code == 0);
  bool char_group = false;
  for (const auto& entry : report.entries)
    if (entry.name == "characteristic_group" && entry.detail == "{0,2}")
      char_group = true;
  CHECK(char_group);

  // the emitted document is valid and checkable
  CliReport check = run_command({"check", out_path});
  CHECK(check.exit_code == 0);
  bool covering_flag = false;
  for (const auto& entry : check.entries)
    if (entry.name == "is_covering" && entry.detail == "true")
      covering_flag = true;
  CHECK(covering_flag);
}

TEST_CASE("cover with a non-subobject exits 1 with the reason") {
  CliReport report = run_command({"cover", data("z4-internal.json"),
                                  "--subgroup", "0,1"});
  CHECK(report.exit_code == 1);
  CHECK(report.error.find("NotASubobject") != std::string::npos);
}

TEST_CASE("cover on a plain groupoid document") {
  CliReport report = run_command({"cover", data("s3-gpd.json"), "--object",
                                  "0", "--subgroup", "0,4,5"});
  CHECK(report.exit_code == 0);
  bool char_group = false;
  for (const auto& entry : report.entries)
    if (entry.name == "characteristic_group" && entry.detail == "{0,4,5}")
      char_group = true;
  CHECK(char_group);
}

TEST_CASE("to-xmod and to-internal round trip through files") {
  std::string xmod_path = temp_path("gwo-z4-xmod.json");
  CliReport to_xmod = run_command({"to-xmod", data("xmod-z2-internal.json"),
                                   "--out", xmod_path});
  REQUIRE(to_xmod.exit_code == 0);

  std::string internal_path = temp_path("gwo-back-internal.json");
  CliReport to_internal = run_command({"to-internal", xmod_path, "--out",
                                       internal_path});
  REQUIRE(to_internal.exit_code == 0);

  // the regenerated internal groupoid equals the original payload
  StructureDocument original = load_document(data("xmod-z2-internal.json"));
  StructureDocument round = load_document(internal_path);
  CHECK(std::get<InternalGroupoid>(original.payload) ==
        std::get<InternalGroupoid>(round.payload));
}

TEST_CASE("lift finds the unique lift through a cover") {
  // f: one-object {0,2} groupoid into Z4, base 0; p: the two-coset cover
  StructureDocument f_doc;
  GpdMorphism include;
  include.source = one_object_groupoid(cyclic_algebra(2));
  include.target = one_object_groupoid(cyclic_algebra(4));
  include.arrow_map = {0, 2};
  include.object_map = {0};
  f_doc.payload = include;
  f_doc.base = 0;
  std::string f_path = temp_path("gwo-include.json");
  save_document(f_doc, f_path);

  std::string lifted_path = temp_path("gwo-lifted.json");
  CliReport report = run_command({"lift", data("cover-z4-02.json"), f_path,
                                  "--out", lifted_path});
  REQUIRE(report.exit_code == 0);
  CliReport check = run_command({"check", lifted_path});
  CHECK(check.exit_code == 0);
}

TEST_CASE("lift without containment fails with the criterion") {
  StructureDocument f_doc;
  GpdMorphism self;
  self.source = one_object_groupoid(cyclic_algebra(4));
  self.target = self.source;
  self.arrow_map = {0, 1, 2, 3};
  self.object_map = {0};
  f_doc.payload = self;
  f_doc.base = 0;
  std::string f_path = temp_path("gwo-self.json");
  save_document(f_doc, f_path);

  CliReport report = run_command({"lift", data("cover-z4-universal.json"),
                                  f_path});
  CHECK(report.exit_code == 1);
  CHECK(report.error.find("CharacteristicGroupNotContained") !=
        std::string::npos);
}

TEST_CASE("equiv passes on the canonical battery, plain and relabeled") {
  CliReport plain = run_command({"equiv", data("z4-internal.json")});
  CHECK(plain.exit_code == 0);
  CliReport seeded = run_command({"equiv", data("z4-internal.json"), "--seed",
                                  "7"});
  CHECK(seeded.exit_code == 0);
  CliReport ring = run_command({"equiv", data("r4zero-internal.json"),
                                "--seed", "11"});
  CHECK(ring.exit_code == 0);
}

TEST_CASE("equiv accepts a battery directory") {
  std::string dir = temp_path("gwo-battery");
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(data("action-z4-02.json"), dir + "/a.json",
                             std::filesystem::copy_options::overwrite_existing);
  std::filesystem::copy_file(data("cover-z4-02.json"), dir + "/c.json",
                             std::filesystem::copy_options::overwrite_existing);
  CliReport report = run_command({"equiv", data("z4-internal.json"),
                                  "--battery", dir});
  CHECK(report.exit_code == 0);
}

TEST_CASE("corr maps covers to xmod covers and non-covers to non-covers") {
  std::string out_path = temp_path("gwo-corr.json");
  CliReport cover = run_command({"corr", data("cover-z4-02.json"), "--out",
                                 out_path});
  REQUIRE(cover.exit_code == 0);
  bool is_cover = false;
  for (const auto& entry : cover.entries)
    if (entry.name == "is_xmod_cover" && entry.detail == "true")
      is_cover = true;
  CHECK(is_cover);
  CHECK(run_command({"check", out_path}).exit_code == 0);

  CliReport non = run_command({"corr", data("noncover-z2-collapse.json")});
  REQUIRE(non.exit_code == 0);
  bool non_cover = false;
  for (const auto& entry : non.entries)
    if (entry.name == "is_xmod_cover" && entry.detail == "false")
      non_cover = true;
  CHECK(non_cover);
}

TEST_CASE("json reports validate against the published schema") {
  json schema = report_schema();
  std::vector<std::vector<std::string>> commands = {
      {"check", data("z4.json")},
      {"check", data("cover-z4-02.json")},
      {"cover", data("z4-internal.json"), "--subgroup", "0,2"},
      {"cover", data("z4-internal.json"), "--subgroup", "0,1"},
      {"check", "/nonexistent.json"},
      {"equiv", data("z4-internal.json")},
  };
  for (const auto& argv : commands) {
    CliReport report = run_command(argv);
    json parsed = json::parse(report.to_json());
    CAPTURE(report.to_json());
    CHECK(conforms(schema, parsed));
  }
}

TEST_CASE("text and json reports carry the same check names") {
  CliReport report = run_command({"check", data("z4-internal.json")});
  json parsed = json::parse(report.to_json());
  std::set<std::string> json_names;
  for (const auto& entry : parsed.at("checks"))
    json_names.insert(entry.at("name").get<std::string>());
  std::string text = report.to_text();
  for (const auto& name : json_names)
    CHECK(text.find(name) != std::string::npos);
}

TEST_SUITE_END();
