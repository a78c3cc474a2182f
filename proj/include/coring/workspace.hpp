#pragma once

// Instance documents. A document is a JSON object with one section per
// object kind (rings, modules, morphisms, corings, coring_morphisms,
// comodules, cells, two_cells, adjunctions, dual_tensors); each entry names
// a recipe by "kind" plus its arguments. Rationals are strings "p/q".

#include "coring/adjunction.hpp"
#include "coring/bicategory.hpp"
#include "coring/constructors.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coring {

using Json = nlohmann::json;

class SpecError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Reference, Dimension, Schema, Invalid };
  SpecError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(SpecError::Kind kind);

struct AdjunctionEntry {
  ModulePtr sigma;
  DualBasisFamily family;
  std::optional<CoringPtr> coring;  // for the base extension consistency check
};

struct DualTensorEntry {
  ModulePtr w;
  ModulePtr sigma;
};

struct Workspace {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, RingMorphism> morphisms;
  std::map<std::string, CoringPtr> corings;
  std::map<std::string, CoringMorphism> coring_morphisms;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, OneCell> cells;
  std::map<std::string, TwoCell> two_cells;
  std::map<std::string, AdjunctionEntry> adjunctions;
  std::map<std::string, DualTensorEntry> dual_tensors;
  /// section -> name -> normalized definition
  Json canonical = Json::object();

  std::size_t size() const;
  /// "kind" of a definition, empty when absent.
  std::string kind_of(const std::string& section, const std::string& name) const;
};

struct ParseOptions {
  /// Idempotents materialized for lazily infinite rings without an explicit corner.
  std::size_t corner_bound = 3;
};

/// Each document is parsed and all of them merged; names must be unique per section.
Workspace parse_spec(const std::vector<std::string>& documents, const ParseOptions& options = {});
Workspace parse_spec(const std::string& document, const ParseOptions& options = {});

/// Sorted keys, two-space indent, trailing newline.
std::string serialize(const Workspace& w);
std::string canonical_dump(const Json& doc);

/// A self-contained document describing c explicitly: its ring, carrier and
/// structure maps by basis labels.
Json coring_document(const Coring& c, const std::string& name);

}  // namespace coring
