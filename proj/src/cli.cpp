#include "gwo/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "gwo/document.hpp"
#include "gwo/error.hpp"
#include "gwo/oracle.hpp"
#include "json.hpp"

namespace gwo {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_indices(const std::vector<int>& v) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << "}";
  return out.str();
}

/// Folds a ValidationReport into report entries, one per check id.
void add_validation(CliReport& report, const ValidationReport& validation,
                    const std::string& prefix = "") {
  for (const auto& check : validation.checks_run()) {
    ReportEntry entry;
    entry.name = prefix.empty() ? check : prefix + "." + check;
    entry.status = validation.check_passed(check) ? "pass" : "fail";
    for (const auto& f : validation.failures())
      if (f.check == check) entry.counterexamples.push_back(f);
    if (!entry.counterexamples.empty()) {
      entry.detail = std::to_string(entry.counterexamples.size()) +
                     " counterexample(s)";
      report.exit_code = 1;
    }
    report.entries.push_back(std::move(entry));
  }
}

void add_info(CliReport& report, const std::string& name,
              const std::string& detail) {
  report.entries.push_back({name, "info", detail, {}});
}

void add_fail(CliReport& report, const std::string& name,
              const std::string& detail) {
  report.entries.push_back({name, "fail", detail, {}});
  report.exit_code = std::max(report.exit_code, 1);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::MalformedTable:
    case ErrorCode::UnknownOperationName:
    case ErrorCode::Usage:
      return 2;
    default:
      return 1;
  }
}

struct ParsedArgs {
  std::string subcommand;
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  std::string report_format = "text";
};

ParsedArgs parse_args(const std::vector<std::string>& argv) {
  static const std::set<std::string> known_flags = {
      "--report", "--out", "--object", "--subgroup", "--battery", "--seed"};
  ParsedArgs args;
  if (argv.empty()) throw Error(ErrorCode::Usage, "missing subcommand");
  args.subcommand = argv[0];
  for (size_t i = 1; i < argv.size(); ++i) {
    const std::string& tok = argv[i];
    if (tok.rfind("--", 0) == 0) {
      if (!known_flags.count(tok))
        throw Error(ErrorCode::Usage, "unknown option '" + tok + "'");
      if (i + 1 >= argv.size())
        throw Error(ErrorCode::Usage, "option '" + tok + "' needs a value");
      args.options[tok.substr(2)] = argv[++i];
    } else {
      args.positional.push_back(tok);
    }
  }
  auto it = args.options.find("report");
  if (it != args.options.end()) {
    if (it->second != "text" && it->second != "json")
      throw Error(ErrorCode::Usage, "--report must be 'text' or 'json'");
    args.report_format = it->second;
  }
  return args;
}

std::vector<int> parse_subgroup(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "--subgroup entries must be integers");
    }
  }
  if (out.empty())
    throw Error(ErrorCode::Usage, "--subgroup needs at least one index");
  return out;
}

/// Validates a constructed document and, when clean, optionally writes
/// it. The tool never emits a document that fails its own validator.
void emit_output(CliReport& report, const StructureDocument& doc,
                 const ParsedArgs& args) {
  ValidationReport validation = validate_document(doc);
  add_validation(report, validation, "output");
  if (!validation.ok()) {
    add_fail(report, "output.write", "constructed structure failed validation");
    return;
  }
  auto it = args.options.find("out");
  if (it != args.options.end()) {
    save_document(doc, it->second);
    add_info(report, "output.write", "wrote " + doc.kind() + " document to " +
                                         it->second);
  }
}

// --- relabeling (used by `equiv --seed` to exercise the oracle search) ---

std::vector<int> random_zero_fixing_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (n > 2) std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

OpAlgebra relabel_algebra(const OpAlgebra& a, const std::vector<int>& perm) {
  OpAlgebra out = a;
  for (int x = 0; x < a.size; ++x) {
    out.neg[perm[x]] = perm[a.minus(x)];
    for (int y = 0; y < a.size; ++y)
      out.add[(size_t)perm[x] * a.size + perm[y]] = perm[a.plus(x, y)];
  }
  for (const auto& [name, table] : a.binary_ops) {
    (void)table;
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < a.size; ++y)
        out.binary_ops[name][(size_t)perm[x] * a.size + perm[y]] =
            perm[a.star(name, x, y)];
  }
  for (const auto& [name, table] : a.unary_ops) {
    (void)table;
    for (int x = 0; x < a.size; ++x)
      out.unary_ops[name][perm[x]] = perm[a.un(name, x)];
  }
  return out;
}

InternalAction relabel_action(const InternalAction& act, std::mt19937& rng) {
  std::vector<int> perm =
      random_zero_fixing_permutation(act.set_alg.size, rng);
  InternalAction out = act;
  out.set_alg = relabel_algebra(act.set_alg, perm);
  for (int x = 0; x < act.set_alg.size; ++x)
    out.theta[perm[x]] = act.theta[x];
  out.phi.clear();
  for (const auto& [pair, y] : act.phi)
    out.phi[{perm[pair.first], pair.second}] = perm[y];
  return out;
}

InternalMorphism relabel_cover(const InternalMorphism& p, std::mt19937& rng) {
  std::vector<int> operm =
      random_zero_fixing_permutation(p.source.gpd.num_objects, rng);
  std::vector<int> aperm =
      random_zero_fixing_permutation(p.source.gpd.num_arrows, rng);
  InternalMorphism out = p;
  out.source.arrow_alg = relabel_algebra(p.source.arrow_alg, aperm);
  out.source.object_alg = relabel_algebra(p.source.object_alg, operm);
  for (int a = 0; a < p.source.gpd.num_arrows; ++a) {
    out.source.gpd.src[aperm[a]] = operm[p.source.gpd.src[a]];
    out.source.gpd.tgt[aperm[a]] = operm[p.source.gpd.tgt[a]];
    out.arrow_map[aperm[a]] = p.arrow_map[a];
  }
  for (int x = 0; x < p.source.gpd.num_objects; ++x) {
    out.source.gpd.id_of[operm[x]] = aperm[p.source.gpd.id_of[x]];
    out.object_map[operm[x]] = p.object_map[x];
  }
  out.source.gpd.comp.clear();
  for (const auto& [pair, c] : p.source.gpd.comp)
    out.source.gpd.comp[{aperm[pair.first], aperm[pair.second]}] = aperm[c];
  return out;
}

// --- subcommands ---

void cmd_check(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "check needs exactly one file");
  StructureDocument doc = load_document(args.positional[0]);
  add_info(report, "kind", doc.kind());
  ValidationReport validation = validate_document(doc);
  add_validation(report, validation);
  if (!validation.ok()) return;

  // derived facts for morphism documents
  if (const auto* m = std::get_if<GpdMorphism>(&doc.payload)) {
    bool covering = is_covering(*m);
    add_info(report, "is_covering", covering ? "true" : "false");
    if (covering && doc.base) {
      add_info(report, "characteristic_group",
               join_indices(characteristic_group(*m, *doc.base)));
      add_info(report, "is_universal_cover",
               is_universal_cover(*m) ? "true" : "false");
    }
  } else if (const auto* im = std::get_if<InternalMorphism>(&doc.payload)) {
    bool covering = is_internal_covering(*im);
    add_info(report, "is_covering", covering ? "true" : "false");
    if (covering) {
      add_info(report, "star_zero_restriction_iso",
               star_zero_restriction_is_iso(*im) ? "true" : "false");
      if (doc.base)
        add_info(report, "characteristic_group",
                 join_indices(
                     characteristic_group(im->underlying(), *doc.base)));
    }
  } else if (const auto* xm = std::get_if<XModMorphism>(&doc.payload)) {
    add_info(report, "is_xmod_cover", is_xmod_cover(*xm) ? "true" : "false");
  }
}

void cmd_cover(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "cover needs exactly one file");
  if (!args.options.count("subgroup"))
    throw Error(ErrorCode::Usage, "cover needs --subgroup i,j,...");
  std::vector<int> c = parse_subgroup(args.options.at("subgroup"));
  int object = 0;
  if (args.options.count("object")) {
    try {
      object = std::stoi(args.options.at("object"));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "--object must be an integer");
    }
  }
  StructureDocument doc = load_document(args.positional[0]);

  StructureDocument out;
  if (const auto* g = std::get_if<FinGroupoid>(&doc.payload)) {
    ValidationReport validation = validate_groupoid(*g);
    if (!validation.ok()) {
      add_validation(report, validation, "input");
      return;
    }
    CosetCover cover = coset_cover(*g, object, c);
    add_info(report, "cosets", std::to_string(cover.action.set_size));
    add_info(report, "characteristic_group",
             join_indices(characteristic_group(cover.projection, cover.base)));
    out.payload = cover.projection;
    out.base = cover.base;
    out.name = doc.name.empty() ? "" : doc.name + "-cover";
  } else if (const auto* ig = std::get_if<InternalGroupoid>(&doc.payload)) {
    if (object != ig->object_alg.zero)
      throw Error(ErrorCode::Usage,
                  "internal lifts are based at the zero object");
    auto [lifted, projection] = lift_internal_structure(*ig, c);
    (void)lifted;
    add_info(report, "cosets",
             std::to_string(projection.source.gpd.num_objects));
    add_info(report, "characteristic_group",
             join_indices(characteristic_group(projection.underlying(), 0)));
    add_info(report, "star_zero_restriction_iso",
             star_zero_restriction_is_iso(projection) ? "true" : "false");
    out.payload = projection;
    out.base = 0;
    out.name = doc.name.empty() ? "" : doc.name + "-cover";
  } else {
    throw Error(ErrorCode::Usage,
                "cover expects a groupoid or internal document");
  }
  emit_output(report, out, args);
}

void cmd_to_xmod(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "to-xmod needs exactly one file");
  StructureDocument doc = load_document(args.positional[0]);
  const auto* g = std::get_if<InternalGroupoid>(&doc.payload);
  if (!g)
    throw Error(ErrorCode::Usage, "to-xmod expects an internal document");
  CrossedModule x = internal_to_xmod(*g);
  add_info(report, "kernel_size", std::to_string(x.a.size));
  StructureDocument out;
  out.payload = std::move(x);
  out.name = doc.name.empty() ? "" : doc.name + "-xmod";
  emit_output(report, out, args);
}

void cmd_to_internal(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "to-internal needs exactly one file");
  StructureDocument doc = load_document(args.positional[0]);
  const auto* x = std::get_if<CrossedModule>(&doc.payload);
  if (!x)
    throw Error(ErrorCode::Usage, "to-internal expects an xmod document");
  InternalGroupoid g = xmod_to_internal(*x);
  add_info(report, "arrows", std::to_string(g.gpd.num_arrows));
  StructureDocument out;
  out.payload = std::move(g);
  out.name = doc.name.empty() ? "" : doc.name + "-internal";
  emit_output(report, out, args);
}

void cmd_lift(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 2)
    throw Error(ErrorCode::Usage, "lift needs a cover file and a morphism file");
  StructureDocument cover_doc = load_document(args.positional[0]);
  StructureDocument morphism_doc = load_document(args.positional[1]);

  GpdMorphism p;
  if (const auto* m = std::get_if<GpdMorphism>(&cover_doc.payload))
    p = *m;
  else if (const auto* im = std::get_if<InternalMorphism>(&cover_doc.payload))
    p = im->underlying();
  else
    throw Error(ErrorCode::Usage, "first argument must be a morphism document");
  GpdMorphism f;
  if (const auto* m = std::get_if<GpdMorphism>(&morphism_doc.payload))
    f = *m;
  else if (const auto* im = std::get_if<InternalMorphism>(&morphism_doc.payload))
    f = im->underlying();
  else
    throw Error(ErrorCode::Usage,
                "second argument must be a morphism document");
  if (!cover_doc.base)
    throw Error(ErrorCode::Usage, "cover document needs a base object");
  if (!morphism_doc.base)
    throw Error(ErrorCode::Usage, "morphism document needs a base object");

  GpdMorphism lifted = lift_morphism(p, f, *morphism_doc.base,
                                     *cover_doc.base);
  add_info(report, "lift", "found the unique lift through the cover");
  StructureDocument out;
  out.payload = lifted;
  out.base = *morphism_doc.base;
  emit_output(report, out, args);
}

void cmd_equiv(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "equiv needs exactly one internal file");
  StructureDocument doc = load_document(args.positional[0]);
  const auto* g = std::get_if<InternalGroupoid>(&doc.payload);
  if (!g) throw Error(ErrorCode::Usage, "equiv expects an internal document");
  ValidationReport validation = validate_internal(*g);
  if (!validation.ok()) {
    add_validation(report, validation, "input");
    return;
  }

  std::vector<InternalAction> actions;
  std::vector<InternalMorphism> covers;
  if (args.options.count("battery")) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.options.at("battery")))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      StructureDocument member = load_document(path.string());
      if (const auto* act = std::get_if<InternalAction>(&member.payload))
        actions.push_back(*act);
      else if (const auto* m = std::get_if<InternalMorphism>(&member.payload))
        covers.push_back(*m);
      else
        throw Error(ErrorCode::SchemaError,
                    "battery entries must be internal actions or morphisms: " +
                        path.string());
    }
  } else {
    actions.push_back(canonical_self_action(*g));
    if (is_transitive(g->gpd)) {
      for (const auto& c : subobjects_of_object_group(*g)) {
        auto [source, projection] = lift_internal_structure(*g, c);
        (void)source;
        actions.push_back(covering_to_action(projection));
        covers.push_back(std::move(projection));
      }
    }
  }
  if (args.options.count("seed")) {
    unsigned seed = 0;
    try {
      seed = (unsigned)std::stoul(args.options.at("seed"));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Usage, "--seed must be an integer");
    }
    std::mt19937 rng(seed);
    for (auto& act : actions) act = relabel_action(act, rng);
    for (auto& cover : covers) cover = relabel_cover(cover, rng);
  }
  add_info(report, "battery",
           std::to_string(actions.size()) + " action(s), " +
               std::to_string(covers.size()) + " cover(s)");
  add_validation(report, check_act_cov_equivalence(*g, actions, covers));
}

void cmd_corr(CliReport& report, const ParsedArgs& args) {
  if (args.positional.size() != 1)
    throw Error(ErrorCode::Usage, "corr needs exactly one cover file");
  StructureDocument doc = load_document(args.positional[0]);
  const auto* p = std::get_if<InternalMorphism>(&doc.payload);
  if (!p)
    throw Error(ErrorCode::Usage,
                "corr expects an internal morphism document");
  XModMorphism m = cover_correspondence(*p);
  bool covering = is_internal_covering(*p);
  add_info(report, "is_covering", covering ? "true" : "false");
  add_info(report, "is_xmod_cover", is_xmod_cover(m) ? "true" : "false");
  StructureDocument out;
  out.payload = std::move(m);
  out.name = doc.name.empty() ? "" : doc.name + "-xmod";
  emit_output(report, out, args);
}

}  // namespace

std::string CliReport::to_text() const {
  std::ostringstream out;
  out << "command:";
  for (const auto& a : command) out << " " << a;
  out << "\n";
  for (const auto& e : entries) {
    out << "  [" << e.status << "] " << e.name;
    if (!e.detail.empty()) out << ": " << e.detail;
    out << "\n";
    for (const auto& c : e.counterexamples) {
      out << "      at (";
      for (size_t i = 0; i < c.tuple.size(); ++i) {
        if (i) out << ",";
        out << c.tuple[i];
      }
      out << ")";
      if (!c.op.empty()) out << " op=" << c.op;
      out << ": " << c.lhs << " != " << c.rhs;
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << "\n";
    }
  }
  if (!error.empty()) out << "  error: " << error << "\n";
  out << "elapsed_ms: " << elapsed_ms << "\n";
  out << "exit: " << exit_code << "\n";
  return out.str();
}

std::string CliReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json checks = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json entry;
    entry["name"] = e.name;
    entry["status"] = e.status;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    if (!e.counterexamples.empty()) {
      ordered_json list = ordered_json::array();
      for (const auto& c : e.counterexamples) {
        ordered_json cj;
        cj["check"] = c.check;
        if (!c.op.empty()) cj["op"] = c.op;
        cj["tuple"] = c.tuple;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        if (!c.note.empty()) cj["note"] = c.note;
        list.push_back(std::move(cj));
      }
      entry["counterexamples"] = std::move(list);
    }
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  if (!error.empty()) j["error"] = error;
  j["elapsed_ms"] = elapsed_ms;
  j["exit"] = exit_code;
  return j.dump();
}

CliReport run_command(const std::vector<std::string>& argv) {
  auto start = std::chrono::steady_clock::now();
  CliReport report;
  report.command = argv;
  try {
    ParsedArgs args = parse_args(argv);
    if (args.subcommand == "check") {
      cmd_check(report, args);
    } else if (args.subcommand == "cover") {
      cmd_cover(report, args);
    } else if (args.subcommand == "to-xmod") {
      cmd_to_xmod(report, args);
    } else if (args.subcommand == "to-internal") {
      cmd_to_internal(report, args);
    } else if (args.subcommand == "lift") {
      cmd_lift(report, args);
    } else if (args.subcommand == "equiv") {
      cmd_equiv(report, args);
    } else if (args.subcommand == "corr") {
      cmd_corr(report, args);
    } else {
      throw Error(ErrorCode::Usage,
                  "unknown subcommand '" + args.subcommand + "'");
    }
  } catch (const Error& e) {
    report.error = e.what();
    report.exit_code = exit_code_for(e);
  } catch (const std::exception& e) {
    report.error = e.what();
    report.exit_code = 2;
  }
  auto end = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

}  // namespace gwo
