#include "liftspace/complex.hpp"

#include <algorithm>
#include <queue>

#include "liftspace/error.hpp"

namespace liftspace {

BaseGraph BaseGraph::from_edges(std::size_t vertex_count,
                                std::span<const std::pair<VertexId, VertexId>> edges,
                                VertexId base_vertex) {
  RawGraph raw;
  raw.vertex_count = vertex_count;
  raw.base_vertex = base_vertex;
  DartId next = 0;
  for (const auto& [u, v] : edges) {
    raw.darts.push_back(Dart{next, u, v, next + 1});
    raw.darts.push_back(Dart{next + 1, v, u, next});
    next += 2;
  }
  return validate_graph(std::move(raw));
}

BaseGraph validate_graph(RawGraph raw) {
  if (raw.vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  if (raw.base_vertex >= raw.vertex_count)
    throw Error(ErrorCode::InvalidArgument, "base vertex out of range");
  const auto& darts = raw.darts;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const Dart& d = darts[i];
    if (d.id != i)
      throw Error(ErrorCode::InvalidArgument, "dart ids must be 0.." + std::to_string(darts.size() - 1) + " in order");
    if (d.source >= raw.vertex_count || d.target >= raw.vertex_count)
      throw Error(ErrorCode::InvalidArgument, "dart " + std::to_string(i) + " has an endpoint out of range");
    if (d.reverse >= darts.size())
      throw Error(ErrorCode::BadInvolution, "dart " + std::to_string(i) + " has no valid reverse");
    const Dart& r = darts[d.reverse];
    if (d.reverse == d.id)
      throw Error(ErrorCode::BadInvolution, "dart " + std::to_string(i) + " is its own reverse");
    if (r.reverse != d.id)
      throw Error(ErrorCode::BadInvolution, "reverse of dart " + std::to_string(i) + " does not reverse back");
    if (r.source != d.target || r.target != d.source)
      throw Error(ErrorCode::BadInvolution, "dart " + std::to_string(i) + " and its reverse do not swap endpoints");
  }

  BaseGraph g;
  g.vertex_count_ = raw.vertex_count;
  g.base_vertex_ = raw.base_vertex;
  g.out_.assign(raw.vertex_count, {});
  for (const auto& d : darts) g.out_[d.source].push_back(d.id);
  g.darts_ = std::move(raw.darts);

  std::vector<bool> seen(g.vertex_count_, false);
  std::queue<VertexId> frontier;
  seen[g.base_vertex_] = true;
  frontier.push(g.base_vertex_);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (auto d : g.out_[v]) {
      const VertexId t = g.darts_[d].target;
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        frontier.push(t);
      }
    }
  }
  if (reached != g.vertex_count_) {
    const auto missing = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw Error(ErrorCode::Disconnected,
                "vertex " + std::to_string(missing) + " is unreachable from the base vertex");
  }
  return g;
}

BaseGraph circle_graph() {
  const std::pair<VertexId, VertexId> edges[] = {{0, 0}};
  return BaseGraph::from_edges(1, edges);
}

BaseGraph wedge_of_circles(std::size_t count) {
  std::vector<std::pair<VertexId, VertexId>> edges(count, {0, 0});
  return BaseGraph::from_edges(1, edges);
}

BaseGraph theta_graph() {
  const std::pair<VertexId, VertexId> edges[] = {{0, 1}, {0, 1}, {0, 1}};
  return BaseGraph::from_edges(2, edges);
}

std::string generator_name(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "g" + std::to_string(index);
}

DartId Pi1Basis::chord_dart(const Letter& l) const {
  if (l.generator >= chords_.size())
    throw Error(ErrorCode::UnknownGenerator,
                "generator " + std::to_string(l.generator) + " is not in the basis");
  const DartId d = chords_[l.generator];
  return l.sign > 0 ? d : graph_.dart(d).reverse;
}

std::vector<DartId> Pi1Basis::tree_path_from_base(VertexId v) const {
  std::vector<DartId> path;
  while (parent_dart_.at(v)) {
    const DartId d = *parent_dart_[v];
    path.push_back(d);
    v = graph_.dart(d).source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<DartId> Pi1Basis::tree_path_to_base(VertexId v) const {
  std::vector<DartId> path;
  while (parent_dart_.at(v)) {
    const DartId d = *parent_dart_[v];
    path.push_back(graph_.dart(d).reverse);
    v = graph_.dart(d).source;
  }
  return path;
}

Pi1Basis spanning_tree(const BaseGraph& g) {
  Pi1Basis basis(g);
  const std::size_t n = g.vertex_count();
  basis.parent_dart_.assign(n, std::nullopt);
  std::vector<bool> in_tree(g.dart_count(), false);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  seen[g.base_vertex()] = true;
  frontier.push(g.base_vertex());
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (auto d : g.out_darts(v)) {
      const VertexId t = g.dart(d).target;
      if (seen[t]) continue;
      seen[t] = true;
      basis.parent_dart_[t] = d;
      in_tree[d] = true;
      in_tree[g.dart(d).reverse] = true;
      frontier.push(t);
    }
  }

  basis.letter_.assign(g.dart_count(), std::nullopt);
  for (const auto& d : g.darts()) {
    if (in_tree[d.id]) {
      basis.tree_.push_back(d.id);
    } else if (d.id < d.reverse) {
      basis.chords_.push_back(d.id);
    }
  }
  for (std::size_t i = 0; i < basis.chords_.size(); ++i) {
    const DartId d = basis.chords_[i];
    const auto gen = static_cast<std::uint32_t>(i);
    basis.letter_[d] = Letter{gen, +1};
    basis.letter_[g.dart(d).reverse] = Letter{gen, -1};
    basis.names_.push_back(generator_name(i));
  }
  return basis;
}

EdgePath EdgePath::make(const BaseGraph& g, VertexId start, std::vector<DartId> darts) {
  if (start >= g.vertex_count()) throw Error(ErrorCode::NotIncident, "start vertex out of range");
  VertexId at = start;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    if (darts[i] >= g.dart_count())
      throw Error(ErrorCode::NotIncident, "dart " + std::to_string(darts[i]) + " does not exist");
    const Dart& d = g.dart(darts[i]);
    if (d.source != at)
      throw Error(ErrorCode::NotIncident, "dart " + std::to_string(d.id) + " at position " +
                                              std::to_string(i) + " does not start at vertex " +
                                              std::to_string(at));
    at = d.target;
  }
  return EdgePath{start, at, std::move(darts)};
}

EdgePath concat(const EdgePath& p, const EdgePath& q) {
  if (p.end != q.start) throw Error(ErrorCode::NotIncident, "paths do not meet");
  EdgePath r{p.start, q.end, p.darts};
  r.darts.insert(r.darts.end(), q.darts.begin(), q.darts.end());
  return r;
}

Word path_to_word(const Pi1Basis& basis, const EdgePath& p) {
  const BaseGraph& g = basis.graph();
  const EdgePath checked = EdgePath::make(g, p.start, p.darts);
  if (checked.end != p.end)
    throw Error(ErrorCode::NotIncident, "path does not end at its declared end vertex");
  if (!checked.is_loop_at(g.base_vertex()))
    throw Error(ErrorCode::NotALoop, "path is not a loop at the base vertex");
  std::vector<Letter> letters;
  for (auto d : p.darts)
    if (const auto& l = basis.letter_of(d)) letters.push_back(*l);
  return reduce_word(letters);
}

EdgePath word_to_path(const Pi1Basis& basis, const Word& w) {
  const BaseGraph& g = basis.graph();
  std::vector<DartId> darts;
  for (const auto& l : w.letters()) {
    const Dart& chord = g.dart(basis.chord_dart(l));
    const auto out = basis.tree_path_from_base(chord.source);
    darts.insert(darts.end(), out.begin(), out.end());
    darts.push_back(chord.id);
    const auto back = basis.tree_path_to_base(chord.target);
    darts.insert(darts.end(), back.begin(), back.end());
  }
  return EdgePath::make(g, g.base_vertex(), std::move(darts));
}

}  // namespace liftspace
