#include <doctest.h>

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

const Word a = Word::generator(0);
const Word b = Word::generator(1);

CoverSpec s3_cover(std::vector<Element> k = {}) {
  const S3 s;
  return wedge_cover(s.g(), {s.t01, s.t12}, std::move(k));
}

std::uint32_t brute_coset_index(const FiniteGroup& g, const std::vector<Element>& k, Element x) {
  const auto cosets = brute_right_cosets(g, k);
  for (std::uint32_t c = 0; c < cosets.size(); ++c)
    if (std::binary_search(cosets[c].begin(), cosets[c].end(), x)) return c;
  return UINT32_MAX;
}

std::size_t brute_orbit_size(const CoverSpec& spec) {
  std::set<std::uint32_t> orbit;
  for (const auto& f : brute_deck_permutations(spec)) orbit.insert(f[spec.base_point().coset]);
  return orbit.size();
}

}  // namespace

TEST_CASE("build_cover examples") {
  const CoverSpec circle = CoverSpec::make(spanning_tree(circle_graph()), cyclic_group(2), {1});
  const CoverGraph e = build_cover(circle);
  CHECK(e.vertex_count() == 2);
  CHECK(e.dart_count() == 4);
  for (std::uint32_t c = 0; c < 2; ++c) CHECK(e.lift_dart(c, 0).target == 1 - c);
  CHECK(is_covering(e));

  const FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  const CoverGraph k = build_cover(wedge_cover(klein, {2, 1}));
  CHECK(k.vertex_count() == 4);
  for (CoverVertexId v = 0; v < 4; ++v) {
    std::size_t valence = 0;
    for (const auto& d : k.darts()) valence += d.source == v;
    CHECK(valence == 4);
  }

  const S3 s;
  const CoverGraph idx3 = build_cover(s3_cover({s.e, s.t01}));
  CHECK(idx3.vertex_count() == 3);
  CHECK(is_covering(idx3));
}

TEST_CASE("is_connected_cover examples") {
  CHECK(is_connected_cover(s3_cover()));
  const CoverSpec half = CoverSpec::make(spanning_tree(circle_graph()), cyclic_group(4), {2});
  CHECK_FALSE(is_connected_cover(half));
  CHECK_FALSE(is_connected_graph(build_cover(half)));
  const S3 s;
  CHECK(is_connected_cover(s3_cover({s.e, s.t01})));
}

TEST_CASE("monodromy examples") {
  const CoverSpec z4 = CoverSpec::make(spanning_tree(circle_graph()), cyclic_group(4), {1});
  CHECK(monodromy(z4, FibrePoint{0}, a).coset == 1);
  CHECK(monodromy(z4, FibrePoint{3}, Word{}).coset == 3);

  const S3 s;
  const std::vector<Element> k{std::min(s.e, s.t01), std::max(s.e, s.t01)};
  const CoverSpec spec = s3_cover(k);
  const FibrePoint x = monodromy(spec, spec.base_point(), b);
  CHECK(x.coset == brute_coset_index(s.g(), k, s.t12));
  CHECK(code_of([&] { monodromy(spec, spec.base_point(), Word::generator(2)); }) == ErrorCode::UnknownGenerator);
}

TEST_CASE("regularity examples agree with conjugate and orbit enumeration") {
  const S3 s;
  const CoverSpec trivial = s3_cover();
  const CoverSpec idx3 = s3_cover({s.e, s.t01});
  const CoverSpec a3 = s3_cover({s.e, s.c1, s.c2});
  CHECK(is_regular(trivial));
  CHECK_FALSE(is_regular(idx3));
  CHECK(is_regular(a3));
  CHECK(brute_orbit_size(idx3) == 1);
  CHECK(brute_orbit_size(a3) == 2);
  CHECK(brute_conjugates(s.g(), idx3.subgroup().elements()).size() == 3);

  const CoverSpec half = CoverSpec::make(spanning_tree(circle_graph()), cyclic_group(4), {2});
  CHECK(code_of([&] { is_regular(half); }) == ErrorCode::NotSurjective);
  CHECK(code_of([&] { deck_group(half); }) == ErrorCode::NotSurjective);
}

TEST_CASE("deck groups") {
  const CoverSpec z8 = CoverSpec::make(spanning_tree(circle_graph()), cyclic_group(8), {1});
  const DeckGroup d8 = deck_group(z8);
  CHECK(d8.carrier.order() == 8);
  for (Element d = 0; d < 8; ++d)
    for (std::uint32_t x = 0; x < 8; ++x) CHECK(d8.apply(d, FibrePoint{x}).coset == (d8.representatives[d] + x) % 8);

  const S3 s;
  const DeckGroup none = deck_group(s3_cover({s.e, s.t01}));
  CHECK(none.carrier.order() == 1);
  CHECK(none.acts_freely());
  CHECK_FALSE(none.acts_transitively());

  const DeckGroup two = deck_group(s3_cover({s.e, s.c1, s.c2}));
  CHECK(two.carrier.order() == 2);
  CHECK(two.acts_transitively());
}

TEST_CASE("fibre groups") {
  const FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  const FibreGroup fk = fibre_group(wedge_cover(klein, {2, 1}));
  CHECK(fk.group == klein);
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(fk.theta[i].coset == i);

  const FiniteGroup z8 = cyclic_group(8);
  const CoverSpec quarter = CoverSpec::make(spanning_tree(circle_graph()), z8, {1}, Subgroup::make(z8, {0, 4}));
  const FibreGroup f4 = fibre_group(quarter);
  CHECK(f4.group.order() == 4);
  CHECK(f4.group.element_order(1) == 4);

  const S3 s;
  CHECK(fibre_group(s3_cover({s.e, s.c1, s.c2})).group.order() == 2);
  CHECK(code_of([&] { fibre_group(s3_cover({s.e, s.t01})); }) == ErrorCode::NotRegular);
}

TEST_CASE("left action examples") {
  const S3 s;
  const CoverSpec spec = s3_cover();
  const FibrePoint x{s.t12};
  CHECK(left_action(spec, a, x).coset == s.pg.index_of(apply_then({1, 0, 2}, {0, 2, 1})));
  CHECK(monodromy(spec, x, a).coset == s.pg.index_of(apply_then({0, 2, 1}, {1, 0, 2})));
  CHECK(left_action(spec, a, x) != monodromy(spec, x, a));
  CHECK(left_action(spec, a * b, spec.base_point()) == monodromy(spec, spec.base_point(), a * b));
  CHECK(code_of([&] { left_action(s3_cover({s.e, s.t01}), a, x); }) == ErrorCode::NotRegular);

  const FiniteGroup z12 = direct_product(cyclic_group(3), cyclic_group(4));
  const CoverSpec ab = wedge_cover(z12, {4, 1});
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const Word w = random_word(rng, 2, 6);
    for (auto p : ab.fibre()) CHECK(left_action(ab, w, p) == monodromy(ab, p, w));
  }
}

TEST_CASE("equalizer sets") {
  const S3 s;
  const CoverSpec spec = s3_cover();
  const auto eq = equalizer_set(spec, a);
  CHECK(eq.size() == 2);
  std::vector<Element> got;
  for (auto p : eq) got.push_back(p.coset);
  CHECK(got == brute_centralizer(s.g(), s.t01));
  CHECK(equalizer_set(spec, a * a).size() == 6);

  const FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  const CoverSpec k = wedge_cover(klein, {2, 1});
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) CHECK(equalizer_set(k, random_word(rng, 2, 6)).size() == 4);
}

TEST_CASE("property: coset numbering matches brute-force right cosets") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const CoverSpec spec = random_cover(rng);
    const auto cosets = brute_right_cosets(spec.group(), spec.subgroup().elements());
    REQUIRE(spec.coset_count() == cosets.size());
    for (std::uint32_t c = 0; c < cosets.size(); ++c) {
      CHECK(spec.representative(FibrePoint{c}) == cosets[c].front());
      for (auto x : cosets[c]) CHECK(spec.coset_of(x).coset == c);
    }
  }
}

TEST_CASE("property: covers are coverings and connectivity agrees with graph search") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    const CoverSpec spec = random_cover(rng);
    const CoverGraph cover = build_cover(spec);
    CHECK(cover.vertex_count() == spec.base().vertex_count() * spec.coset_count());
    CHECK(is_covering(cover));
    CHECK(is_connected_cover(spec) == is_connected_graph(cover));
  }
}

TEST_CASE("property: regularity, normality and deck orbits agree") {
  std::mt19937_64 rng(35);
  int irregular = 0, regular = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CoverSpec spec = random_cover(rng);
    if (!spec.phi_surjective() || spec.coset_count() > 7) continue;
    const bool reg = is_regular(spec);
    CHECK(reg == is_normal(spec.group(), spec.subgroup()));
    CHECK(reg == (brute_orbit_size(spec) == spec.coset_count()));
    const DeckGroup deck = deck_group(spec);
    CHECK(deck.carrier.order() == brute_deck_permutations(spec).size());
    CHECK(deck.acts_freely());
    CHECK(deck.acts_transitively() == reg);
    CHECK(deck_orbit_by_search(build_cover(spec)).size() == brute_orbit_size(spec));
    (reg ? regular : irregular)++;
  }
  CHECK(regular > 20);
  CHECK(irregular > 5);
}

TEST_CASE("property: action laws on random regular covers") {
  std::mt19937_64 rng(36);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    const CoverSpec spec = random_cover(rng);
    if (!spec.phi_surjective() || !spec.subgroup_normal() || spec.basis().rank() == 0) continue;
    ++tested;
    const FibreGroup fg = fibre_group(spec);
    const std::size_t rank = spec.basis().rank();
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(spec.coset_count() - 1));
    for (int i = 0; i < 30; ++i) {
      const Word w1 = random_word(rng, rank, 6), w2 = random_word(rng, rank, 6);
      const FibrePoint x{pick(rng)};
      CHECK(monodromy(spec, x, w1 * w2) == monodromy(spec, monodromy(spec, x, w1), w2));
      CHECK(left_action(spec, w1 * w2, x) == left_action(spec, w1, left_action(spec, w2, x)));
      CHECK(left_action(spec, w1, monodromy(spec, x, w2)) == monodromy(spec, left_action(spec, w1, x), w2));
      const Element t = monodromy(spec, spec.base_point(), w1).coset;
      CHECK(left_action(spec, w1, x).coset == fg.group.mul(t, x.coset));
      CHECK(monodromy(spec, x, w1).coset == fg.group.mul(x.coset, t));
    }
  }
  CHECK(tested == 60);
}

TEST_CASE("property: monodromy by cosets equals dart-by-dart lifting") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const CoverSpec spec = random_cover(rng);
    const CoverGraph cover = build_cover(spec);
    const VertexId base = spec.base().base_vertex();
    for (int i = 0; i < 20; ++i) {
      const Word w = random_word(rng, spec.basis().rank(), 8);
      const auto darts = word_to_path(spec.basis(), w).darts;
      for (auto x : spec.fibre()) {
        const FibrePoint m = monodromy(spec, x, w);
        CHECK(monodromy_by_lifting(spec, cover, x, w) == m);
        CHECK(brute_lift(cover, cover.vertex_id(base, x), darts) == cover.vertex_id(base, m));
      }
    }
  }
}

TEST_CASE("extend_cover_map recovers deck transformations") {
  const S3 s;
  const CoverSpec spec = s3_cover();
  const CoverGraph e = build_cover(spec);
  const auto id = extend_cover_map(e, e, e.base_point(), e.base_point());
  REQUIRE(id.has_value());
  for (CoverVertexId v = 0; v < e.vertex_count(); ++v) CHECK((*id)[v] == v);

  const CoverGraph idx3 = build_cover(s3_cover({s.e, s.t01}));
  for (std::uint32_t c = 1; c < 3; ++c) CHECK_FALSE(extend_cover_map(idx3, idx3, 0, c).has_value());
}
