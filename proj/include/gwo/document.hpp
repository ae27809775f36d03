#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gwo/internal.hpp"
#include "gwo/xmod.hpp"

namespace gwo {

/// A structure document: one JSON object with fields kind, version,
/// optional name/comment, and a kind-specific payload. Kinds:
///   algebra | groupoid | internal | xmod | action | morphism
/// Action documents carry either a plain groupoid action or an internal
/// one; morphism documents carry a flavor tag (groupoid/internal/xmod)
/// and, for pointed morphisms, an optional base object.
struct StructureDocument {
  using Payload =
      std::variant<OpAlgebra, FinGroupoid, InternalGroupoid, CrossedModule,
                   GpdAction, InternalAction, GpdMorphism, InternalMorphism,
                   XModMorphism>;

  int version = 1;
  std::string name;
  std::string comment;
  Payload payload;
  std::optional<int> base;

  std::string kind() const;

  bool operator==(const StructureDocument&) const = default;
};

/// Parses and schema-validates a document. All shapes, index ranges and
/// cross-references (carrier sizes, operation-name sets, opposite
/// pairings) are checked here; missing opposite tables are generated.
/// Throws Error(ParseError) with line/column on malformed JSON and
/// Error(SchemaError) naming the offending field otherwise.
StructureDocument parse_document(const std::string& text);

/// Canonical serialization: fixed field order, sorted operation names,
/// minimal whitespace. parse(serialize(parse(d))) == parse(d).
std::string serialize_document(const StructureDocument& doc);

StructureDocument load_document(const std::string& path);
void save_document(const StructureDocument& doc, const std::string& path);

/// Dispatches to the validator for the document's kind. For morphism
/// documents this validates source, target and the morphism conditions.
ValidationReport validate_document(const StructureDocument& doc);

/// Re-evaluates a reported counterexample directly against the raw
/// tables of the document's payload: true when the violation is
/// reproduced. Reports are self-certifying under this check.
bool reverify_counterexample(const StructureDocument& doc,
                             const CheckFailure& failure);

}  // namespace gwo
