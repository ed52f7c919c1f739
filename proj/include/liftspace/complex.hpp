#pragma once

// Finite connected base graphs, their BFS spanning trees and the resulting
// free basis of the fundamental group at the base vertex.
//
// A graph is stored as darts (directed half-edges). Each undirected edge is a
// pair of darts related by the `reverse` involution; a loop contributes two
// darts with the same endpoints.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liftspace/word.hpp"

namespace liftspace {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;

struct Dart {
  DartId id = 0;
  VertexId source = 0;
  VertexId target = 0;
  DartId reverse = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct RawGraph {
  std::size_t vertex_count = 0;
  std::vector<Dart> darts;
  VertexId base_vertex = 0;
};

class BaseGraph {
 public:
  /// Edge k becomes darts 2k (u -> v) and 2k+1 (v -> u).
  static BaseGraph from_edges(std::size_t vertex_count,
                              std::span<const std::pair<VertexId, VertexId>> edges,
                              VertexId base_vertex = 0);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t dart_count() const noexcept { return darts_.size(); }
  std::size_t edge_count() const noexcept { return darts_.size() / 2; }
  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const Dart& dart(DartId d) const { return darts_.at(d); }
  VertexId base_vertex() const noexcept { return base_vertex_; }

  /// Darts leaving `v`, ascending by id.
  const std::vector<DartId>& out_darts(VertexId v) const { return out_.at(v); }

  friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.darts_ == b.darts_ &&
           a.base_vertex_ == b.base_vertex_;
  }

 private:
  BaseGraph() = default;

  std::size_t vertex_count_ = 0;
  std::vector<Dart> darts_;
  VertexId base_vertex_ = 0;
  std::vector<std::vector<DartId>> out_;

  friend BaseGraph validate_graph(RawGraph raw);
};

/// Checks that dart ids are 0..n-1 in order, that `reverse` is a fixed-point
/// free involution swapping endpoints, and that the graph is connected.
BaseGraph validate_graph(RawGraph raw);

BaseGraph circle_graph();
BaseGraph wedge_of_circles(std::size_t count);
/// Two vertices joined by three parallel edges.
BaseGraph theta_graph();

class Pi1Basis {
 public:
  const BaseGraph& graph() const noexcept { return graph_; }
  /// Tree darts, both orientations, ascending.
  const std::vector<DartId>& tree() const noexcept { return tree_; }
  /// Positive chord darts in generator order (ascending id).
  const std::vector<DartId>& chords() const noexcept { return chords_; }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  std::size_t rank() const noexcept { return chords_.size(); }

  bool is_tree_dart(DartId d) const { return !letter_[d].has_value(); }
  /// The generator letter a chord dart contributes; nullopt for tree darts.
  const std::optional<Letter>& letter_of(DartId d) const { return letter_.at(d); }
  /// Dart of the generator's chord traversed in the direction of `l`.
  DartId chord_dart(const Letter& l) const;

  /// Tree darts from the base vertex to `v`.
  std::vector<DartId> tree_path_from_base(VertexId v) const;
  /// Tree darts from `v` back to the base vertex.
  std::vector<DartId> tree_path_to_base(VertexId v) const;

 private:
  BaseGraph graph_;
  std::vector<DartId> tree_;
  std::vector<DartId> chords_;
  std::vector<std::string> names_;
  std::vector<std::optional<Letter>> letter_;
  std::vector<std::optional<DartId>> parent_dart_;  // tree dart into v from its BFS parent

  explicit Pi1Basis(BaseGraph g) : graph_(std::move(g)) {}
  friend Pi1Basis spanning_tree(const BaseGraph& g);
};

/// BFS from the base vertex, scanning out-darts by ascending id. In each
/// non-tree edge the smaller dart id is the positive generator.
Pi1Basis spanning_tree(const BaseGraph& g);

/// Generator names: a..z, then g26, g27, ...
std::string generator_name(std::size_t index);

struct EdgePath {
  VertexId start = 0;
  VertexId end = 0;
  std::vector<DartId> darts;

  /// Validates incidence of consecutive darts (NotIncident).
  static EdgePath make(const BaseGraph& g, VertexId start, std::vector<DartId> darts);
  static EdgePath constant(VertexId v) { return EdgePath{v, v, {}}; }

  bool is_loop_at(VertexId v) const { return start == v && end == v; }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Concatenation; p must end where q starts.
EdgePath concat(const EdgePath& p, const EdgePath& q);

Word path_to_word(const Pi1Basis& basis, const EdgePath& p);

/// Per letter: tree path to the chord source, the chord, tree path home.
EdgePath word_to_path(const Pi1Basis& basis, const Word& w);

}  // namespace liftspace
