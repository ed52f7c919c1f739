#pragma once

// Line-oriented configuration documents.
//
//   # comment
//   [graph]
//   vertices = 1
//   edges = 0-0, 0-0
//   base = 0
//
//   [groups]
//   Z4 = cyclic 4
//   V = product Z2 Z2
//   T = table 0 1; 1 0
//   S3 = generated perm 1 0 2, perm 0 2 1
//
//   [tower]                      [cover]
//   level = Z2                   group = S3
//   images = 1                   images = perm 1 0 2, perm 0 2 1
//   level = Z4                   subgroup = perm 0 1 2, perm 1 0 2
//   images = 1
//   bond = mod
//
// A tower may instead be the single line `solenoid p=2 depth=3`, which
// expands to cyclic levels Z2, Z4, Z8 over the circle.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftspace/covers.hpp"
#include "liftspace/tower.hpp"

namespace liftspace::cli {

/// Written form of a group element: an integer, `perm i j k`, or a tuple.
struct ElementExpr {
  enum class Kind { Integer, Perm, Tuple };
  Kind kind = Kind::Integer;
  long long value = 0;
  Permutation perm;
  std::vector<ElementExpr> parts;

  static ElementExpr integer(long long v) { return {Kind::Integer, v, {}, {}}; }
  static ElementExpr permutation(Permutation p) { return {Kind::Perm, 0, std::move(p), {}}; }
  static ElementExpr tuple(std::vector<ElementExpr> parts) { return {Kind::Tuple, 0, {}, std::move(parts)}; }

  friend bool operator==(const ElementExpr&, const ElementExpr&) = default;
};

struct GraphSection {
  std::size_t vertices = 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId base = 0;

  friend bool operator==(const GraphSection&, const GraphSection&) = default;
};

struct GroupDef {
  enum class Kind { Cyclic, Product, Table, Generated };
  std::string name;
  Kind kind = Kind::Cyclic;
  std::size_t order = 0;                        // Cyclic
  std::vector<std::string> factors;             // Product
  std::vector<std::vector<Element>> table;      // Table
  std::vector<Permutation> generators;          // Generated

  friend bool operator==(const GroupDef&, const GroupDef&) = default;
};

struct BondDef {
  enum class Kind { Mod, Table };
  Kind kind = Kind::Mod;
  /// Images of the upper level's elements, in element index order.
  std::vector<ElementExpr> table;

  friend bool operator==(const BondDef&, const BondDef&) = default;
};

struct LevelDef {
  std::string group;
  std::vector<ElementExpr> images;
  std::optional<BondDef> bond;  // absent on the first level only

  friend bool operator==(const LevelDef&, const LevelDef&) = default;
};

struct CoverSection {
  std::string group;
  std::vector<ElementExpr> images;
  std::vector<ElementExpr> subgroup;  // empty means trivial

  friend bool operator==(const CoverSection&, const CoverSection&) = default;
};

struct ConfigDocument {
  std::optional<GraphSection> graph;  // absent means the circle
  std::vector<GroupDef> groups;
  std::optional<std::vector<LevelDef>> tower;
  std::optional<CoverSection> cover;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

/// A group together with the notation used to read and print its elements.
struct NamedGroup {
  GroupDef def;
  FiniteGroup group;
  std::vector<Permutation> perms;            // Generated: element index -> permutation
  std::vector<const NamedGroup*> factors;    // Product
};

/// The objects a document describes, built and validated.
struct Model {
  Pi1Basis basis;
  std::map<std::string, NamedGroup> groups;
  std::vector<const NamedGroup*> tower_groups;
  std::optional<TowerSpec> tower;
  const NamedGroup* cover_group = nullptr;
  std::optional<CoverSpec> cover;

  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  Model(Model&&) = default;
  explicit Model(Pi1Basis b) : basis(std::move(b)) {}
};

/// Throws SyntaxError (message starts "line N:"), UnknownReference or
/// DuplicateSection, plus any validation error of the described objects.
ConfigDocument parse_config(std::string_view text);

/// Canonical text; parse_config(render(doc)) == doc.
std::string render(const ConfigDocument& doc);

/// Builds the model. `depth`, when given, truncates a tower to its first
/// levels.
Model resolve(const ConfigDocument& doc, std::optional<std::size_t> depth = std::nullopt);

Element element_of(const NamedGroup& g, const ElementExpr& e);
ElementExpr expr_of(const NamedGroup& g, Element x);

ElementExpr parse_element(std::string_view text);
std::string format_element(const ElementExpr& e);
std::string format_element(const NamedGroup& g, Element x);

/// Splits on commas outside parentheses; blank input gives no items.
std::vector<std::string> split_top_level(std::string_view text);

}  // namespace liftspace::cli
