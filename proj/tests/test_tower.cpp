#include <doctest.h>

#include <string>

#include "liftspace/error.hpp"
#include "support/testkit.hpp"

using namespace liftspace;
using namespace testkit;

namespace {

template <typename F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorCode::InvalidArgument, "no error raised");
}

/// Index of ker(phi) in the free group, by collecting distinct images of
/// every reduced word up to a length that exhausts the image.
std::size_t enumerated_index(const FiniteGroup& g, const std::vector<Element>& images, std::size_t max_length) {
  std::set<Element> seen;
  for (const auto& w : all_reduced_words(images.size(), max_length)) seen.insert(evaluate_word(g, images, w));
  return seen.size();
}

/// Componentwise closure of the generator tuples (phi_1(a), ..., phi_d(a)).
std::set<std::vector<Element>> tuple_closure(const TowerSpec& t) {
  const std::size_t d = t.depth();
  std::set<std::vector<Element>> seen{std::vector<Element>(d, 0)};
  std::vector<std::vector<Element>> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t a = 0; a < t.basis().rank(); ++a) {
      std::vector<Element> next(d);
      for (std::size_t i = 0; i < d; ++i) next[i] = t.level(i).mul(queue[k][i], t.gen_images(i)[a]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("validate_tower") {
  RawTower raw;
  raw.levels = {cyclic_group(2), cyclic_group(4)};
  raw.gen_images = {{0}, {1}};
  raw.bonds = {{0, 1, 0, 1}};
  const Error incompatible = error_of([&] { validate_tower(raw); });
  CHECK(incompatible.code() == ErrorCode::Incompatible);
  CHECK(incompatible.level() == 1);
  CHECK(std::string(incompatible.what()).find("(1, a)") != std::string::npos);

  raw.gen_images = {{1}, {1}};
  raw.levels = {cyclic_group(4), cyclic_group(4)};
  raw.bonds = {{0, 2, 0, 2}};
  const Error onto = error_of([&] { validate_tower(raw); });
  CHECK(onto.code() == ErrorCode::BondNotSurjective);
  CHECK(onto.level() == 1);

  raw.levels = {cyclic_group(2), cyclic_group(4)};
  raw.bonds = {{0, 1, 1, 0}};
  const Error not_hom = error_of([&] { validate_tower(raw); });
  CHECK(not_hom.code() == ErrorCode::InvalidArgument);
  CHECK(std::string(not_hom.what()).find("bond 1") != std::string::npos);

  raw.bonds = {};
  CHECK(error_of([&] { validate_tower(raw); }).code() == ErrorCode::InvalidArgument);
}

TEST_CASE("solenoid towers") {
  for (auto [p, d] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 1}, {5, 4}}) {
    const TowerSpec t = solenoid_tower(p, d);
    REQUIRE(t.depth() == d);
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
      n *= p;
      CHECK(t.level(i).order() == n);
      CHECK(t.gen_images(i) == std::vector<Element>{1});
      for (Element x = 0; i > 0 && x < n; ++x) CHECK(t.bond(i - 1)(x) == x % (n / p));
    }
  }
  CHECK(error_of([] { solenoid_tower(1, 3); }).code() == ErrorCode::InvalidArgument);
}

TEST_CASE("build_tower_covers") {
  const TowerCover dyadic = build_tower_covers(solenoid_tower(2, 2));
  REQUIRE(dyadic.levels.size() == 2);
  CHECK(dyadic.levels[0].vertex_count() == 2);
  CHECK(dyadic.levels[1].vertex_count() == 4);
  CHECK(dyadic.levels[1].dart_count() == 8);
  CHECK(is_covering_map(dyadic.levels[1], dyadic.levels[0], dyadic.vertex_maps[0], dyadic.dart_maps[0]));

  CHECK(build_tower_covers(solenoid_tower(3, 1)).vertex_maps.empty());

  const TowerCover wedge = build_tower_covers(wedge_abelian_tower(2));
  CHECK(wedge.levels[1].vertex_count() == 16);
  std::map<CoverVertexId, std::size_t> preimages;
  for (auto v : wedge.vertex_maps[0]) ++preimages[v];
  CHECK(preimages.size() == 4);
  for (const auto& [v, count] : preimages) CHECK(count == 4);
}

TEST_CASE("theta on the dyadic tower") {
  const TowerSpec t = solenoid_tower(2, 3);
  const Word a = Word::generator(0);
  CHECK(theta(t, a.pow(3), 3).components() == std::vector<Element>{1, 3, 3});
  CHECK(theta(t, a.pow(-1), 3).components() == std::vector<Element>{1, 3, 7});
  CHECK(theta(t, Word{}, 2).components() == std::vector<Element>{0, 0});
  CHECK(error_of([&] { theta(t, a, 4); }).code() == ErrorCode::DepthExceeded);

  const auto x = ProfiniteElement::make(t, {1, 3, 7});
  const auto y = ProfiniteElement::make(t, {1, 1, 5});
  CHECK(fibre_mul(x, y).components() == std::vector<Element>{0, 0, 4});
  CHECK(fibre_inv(x).components() == std::vector<Element>{1, 1, 1});
  CHECK(error_of([&] { fibre_mul(x, y.truncate(2)); }).code() == ErrorCode::DepthMismatch);
  CHECK(error_of([&] { ProfiniteElement::make(t, {1, 2, 2}); }).code() == ErrorCode::Incompatible);
  CHECK(error_of([&] { x.truncate(4); }).code() == ErrorCode::DepthExceeded);
}

TEST_CASE("dense_leaf_check") {
  CHECK(dense_leaf_check(solenoid_tower(2, 4)).passed);

  RawTower raw;
  raw.levels = {cyclic_group(1), cyclic_group(4)};
  raw.gen_images = {{0}, {2}};
  raw.bonds = {{0, 0, 0, 0}};
  const DenseLeafReport r = dense_leaf_check(validate_tower(raw));
  CHECK_FALSE(r.passed);
  CHECK(r.first_failure == 2);
  CHECK(r.levels[0].surjective);
  CHECK(r.levels[1].image_size == 2);
  CHECK(r.levels[1].order == 4);
}

TEST_CASE("kernel_chain") {
  const auto chain = kernel_chain(solenoid_tower(2, 3));
  REQUIRE(chain.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(chain[i].level == i + 1);
    CHECK(chain[i].index == std::size_t{2} << i);
    CHECK(chain[i].isomorphism);
  }

  RawTower trivial;
  trivial.levels = {cyclic_group(1)};
  trivial.gen_images = {{0}};
  CHECK(kernel_chain(validate_tower(trivial)).front().index == 1);

  const TowerSpec sign = sign_tower();
  const auto s3 = kernel_chain(sign);
  CHECK(s3[1].index == 6);
  CHECK(s3[1].index == enumerated_index(sign.level(1), sign.gen_images(1), 4));
  CHECK(s3[1].isomorphism);

  RawTower sparse;
  sparse.levels = {cyclic_group(4)};
  sparse.gen_images = {{2}};
  const Error e = error_of([&] { kernel_chain(validate_tower(sparse)); });
  CHECK(e.code() == ErrorCode::NotDense);
  CHECK(e.level() == 1);
}

TEST_CASE("property: theta is a homomorphism compatible with truncation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const TowerSpec t = random_tower(rng);
    for (int k = 0; k < 20; ++k) {
      const Word u = random_word(rng, 2, 8), v = random_word(rng, 2, 8);
      const auto tu = theta(t, u, 3), tv = theta(t, v, 3);
      CHECK(theta(t, u * v, 3) == fibre_mul(tu, tv));
      CHECK(theta(t, u.inverse(), 3) == fibre_inv(tu));
      for (std::size_t d = 1; d <= 3; ++d) CHECK(tu.truncate(d) == theta(t, u, d));
      for (std::size_t i = 0; i < 3; ++i) CHECK(tu[i] == evaluate_word(t.level(i), t.gen_images(i), u));
    }
  }
}

TEST_CASE("property: compatible tuples form a group") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const TowerSpec t = random_tower(rng);
    const auto tuples = brute_compatible_tuples(t, 3);
    std::vector<ProfiniteElement> elems;
    for (const auto& c : tuples) elems.push_back(ProfiniteElement::make(t, c));
    const auto e = ProfiniteElement::identity(t, 3);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int k = 0; k < 50; ++k) {
      const auto& x = elems[pick(rng)];
      const auto& y = elems[pick(rng)];
      const auto& z = elems[pick(rng)];
      CHECK(tuples.count(fibre_mul(x, y).components()) == 1);
      CHECK(fibre_mul(fibre_mul(x, y), z) == fibre_mul(x, fibre_mul(y, z)));
      CHECK(fibre_mul(x, e) == x);
      CHECK(fibre_mul(x, fibre_inv(x)) == e);
    }
  }
}

TEST_CASE("property: tower covering maps intertwine the projections") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const TowerSpec t = random_tower(rng);
    const TowerCover covers = build_tower_covers(t);
    for (std::size_t i = 0; i + 1 < t.depth(); ++i) {
      const CoverGraph& up = covers.levels[i + 1];
      const CoverGraph& down = covers.levels[i];
      CHECK(is_covering_map(up, down, covers.vertex_maps[i], covers.dart_maps[i]));
      for (CoverVertexId v = 0; v < up.vertex_count(); ++v) {
        const CoverVertex x = up.vertex(v);
        const CoverVertex y = down.vertex(covers.vertex_maps[i][v]);
        CHECK(x.base == y.base);
        CHECK(y.fibre.coset == t.bond(i)(x.fibre.coset));
      }
      for (CoverDartId d = 0; d < up.dart_count(); ++d)
        CHECK(down.dart(covers.dart_maps[i][d]).base_dart == up.dart(d).base_dart);
    }
  }
}

TEST_CASE("property: density is exactly surjectivity of every phi") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const TowerSpec t = random_tower(rng);
    const DenseLeafReport r = dense_leaf_check(t);
    bool all = true;
    for (std::size_t i = 0; i < t.depth(); ++i) {
      const auto reached = brute_closure(t.level(i), t.gen_images(i));
      CHECK(r.levels[i].image_size == reached.size());
      all = all && reached.size() == t.level(i).order();
    }
    CHECK(r.passed == all);
    // Dense towers: the generator tuples reach every compatible tuple.
    if (all) CHECK(tuple_closure(t) == brute_compatible_tuples(t, 3));
  }
}
