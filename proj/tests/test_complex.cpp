#include <doctest.h>

#include <deque>

#include "liftspace/error.hpp"
#include "support/testkit.hpp"

using namespace liftspace;
using namespace testkit;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

std::vector<std::size_t> bfs_distances(const BaseGraph& g) {
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::deque<VertexId> queue{g.base_vertex()};
  dist[g.base_vertex()] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const auto& d : g.darts())
      if (d.source == v && dist[d.target] == SIZE_MAX) {
        dist[d.target] = dist[v] + 1;
        queue.push_back(d.target);
      }
  }
  return dist;
}

/// A random closed walk at the base: a random walk followed by the tree path home.
EdgePath random_loop(std::mt19937_64& rng, const Pi1Basis& basis, std::size_t steps) {
  const BaseGraph& g = basis.graph();
  std::vector<DartId> darts;
  VertexId at = g.base_vertex();
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& out = g.out_darts(at);
    if (out.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
    const DartId d = out[pick(rng)];
    darts.push_back(d);
    at = g.dart(d).target;
  }
  for (auto d : basis.tree_path_to_base(at)) darts.push_back(d);
  return EdgePath::make(g, g.base_vertex(), darts);
}

}  // namespace

TEST_CASE("validate_graph") {
  const BaseGraph circle = circle_graph();
  CHECK(circle.vertex_count() == 1);
  CHECK(circle.dart_count() == 2);
  CHECK(circle.dart(0).reverse == 1);

  CHECK(code_of([] { BaseGraph::from_edges(2, {}); }) == ErrorCode::Disconnected);

  const BaseGraph wedge = wedge_of_circles(2);
  CHECK(wedge.vertex_count() == 1);
  CHECK(wedge.dart_count() == 4);

  RawGraph raw{2, {{0, 0, 1, 1}, {1, 1, 0, 1}}, 0};
  CHECK(code_of([&] { validate_graph(raw); }) == ErrorCode::BadInvolution);
  raw.darts[1].reverse = 0;
  raw.darts[1].target = 1;
  CHECK(code_of([&] { validate_graph(raw); }) == ErrorCode::BadInvolution);
  raw.darts[1].target = 0;
  CHECK_NOTHROW(validate_graph(raw));
}

TEST_CASE("spanning trees") {
  const Pi1Basis circle = spanning_tree(circle_graph());
  CHECK(circle.tree().empty());
  CHECK(circle.chords() == std::vector<DartId>{0});
  CHECK(circle.rank() == 1);
  CHECK(circle.generator_names() == std::vector<std::string>{"a"});

  CHECK(spanning_tree(wedge_of_circles(2)).rank() == 2);

  const Pi1Basis theta = spanning_tree(theta_graph());
  CHECK(theta.rank() == 2);
  CHECK(theta.chords() == std::vector<DartId>{2, 4});
  CHECK(generator_name(25) == "z");
  CHECK(generator_name(26) == "g26");
}

TEST_CASE("path_to_word") {
  const Pi1Basis circle = spanning_tree(circle_graph());
  CHECK(path_to_word(circle, EdgePath::make(circle.graph(), 0, {0})) == Word::generator(0));
  CHECK(path_to_word(circle, EdgePath::constant(0)).empty());

  const Pi1Basis wedge = spanning_tree(wedge_of_circles(2));
  const DartId b_rev = wedge.graph().dart(wedge.chords()[1]).reverse;
  const EdgePath p = EdgePath::make(wedge.graph(), 0, {wedge.chords()[0], b_rev});
  CHECK(path_to_word(wedge, p) == Word::generator(0) * Word::generator(1, -1));

  const Pi1Basis theta = spanning_tree(theta_graph());
  CHECK(code_of([&] { path_to_word(theta, EdgePath::make(theta.graph(), 0, {0})); }) == ErrorCode::NotALoop);
  CHECK(code_of([&] { EdgePath::make(theta.graph(), 0, {0, 2}); }) == ErrorCode::NotIncident);
}

TEST_CASE("word_to_path") {
  const Pi1Basis circle = spanning_tree(circle_graph());
  CHECK(word_to_path(circle, Word::generator(0)).darts == std::vector<DartId>{0});
  CHECK(word_to_path(circle, Word{}) == EdgePath::constant(0));

  // Theta graph: tree dart 0 (0 -> 1); chord a is dart 2 (0 -> 1), back along dart 1.
  const Pi1Basis theta = spanning_tree(theta_graph());
  const EdgePath p = word_to_path(theta, Word::generator(0));
  CHECK(p.darts == std::vector<DartId>{2, 1});
  CHECK(p.is_loop_at(0));

  CHECK(code_of([&] { word_to_path(theta, Word::generator(2)); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("property: rank equals the first Betti number and the tree is BFS") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const BaseGraph g = random_graph(rng, 7, 6);
    const Pi1Basis basis = spanning_tree(g);
    CHECK(basis.rank() == g.edge_count() - g.vertex_count() + 1);
    CHECK(basis.tree().size() == 2 * (g.vertex_count() - 1));
    for (auto d : basis.tree()) CHECK(basis.is_tree_dart(g.dart(d).reverse));
    for (std::size_t i = 0; i < basis.rank(); ++i) {
      const DartId c = basis.chords()[i];
      CHECK(c < g.dart(c).reverse);
      if (i > 0) CHECK(basis.chords()[i - 1] < c);
    }
    const auto dist = bfs_distances(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const auto path = basis.tree_path_from_base(v);
      CHECK(path.size() == dist[v]);
      CHECK(EdgePath::make(g, g.base_vertex(), path).end == v);
    }
  }
}

TEST_CASE("property: word_to_path and path_to_word round trip") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Pi1Basis basis = spanning_tree(random_graph(rng, 6, 5));
    for (int k = 0; k < 10; ++k) {
      const Word w = random_word(rng, basis.rank(), 10);
      const EdgePath p = word_to_path(basis, w);
      CHECK(p.is_loop_at(basis.graph().base_vertex()));
      CHECK(path_to_word(basis, p) == w);
    }
  }
}

TEST_CASE("property: path_to_word is a homomorphism on loops") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Pi1Basis basis = spanning_tree(random_graph(rng, 6, 5));
    const EdgePath p = random_loop(rng, basis, 8), q = random_loop(rng, basis, 8);
    CHECK(path_to_word(basis, concat(p, q)) == path_to_word(basis, p) * path_to_word(basis, q));
  }
}
