#pragma once

// Brute-force oracles and seeded generators shared by the test binaries.
// Oracles recompute from first principles (explicit permutations, full
// enumeration) and avoid the library routine they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "liftspace/borel.hpp"
#include "liftspace/complex.hpp"
#include "liftspace/covers.hpp"
#include "liftspace/groups.hpp"
#include "liftspace/tower.hpp"
#include "liftspace/word.hpp"

namespace testkit {

using namespace liftspace;

// ---------------------------------------------------------------- oracles

/// Applies p first, then q, pointwise.
inline Permutation apply_then(const Permutation& p, const Permutation& q) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Multiplication table of S_n with lexicographic indices.
inline std::vector<std::vector<Element>> symmetric_table(std::size_t n) {
  const auto perms = all_permutations(n);
  std::map<Permutation, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<Element>> t(perms.size(), std::vector<Element>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) t[a][b] = index.at(apply_then(perms[a], perms[b]));
  return t;
}

inline bool brute_associative(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (Element c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

inline std::vector<Element> brute_centralizer(const FiniteGroup& g, Element a) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(a, x) == g.mul(x, a)) out.push_back(x);
  return out;
}

/// Every conjugate gKg^-1 as a sorted element set.
inline std::set<std::vector<Element>> brute_conjugates(const FiniteGroup& g, const std::vector<Element>& k) {
  std::set<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> c;
    for (auto y : k) c.push_back(g.mul(g.mul(x, y), g.inv(x)));
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

inline std::vector<Element> brute_closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::set<Element> s{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : gens)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

/// Right cosets K\G as sets, numbered by ascending minimal element.
inline std::vector<std::vector<Element>> brute_right_cosets(const FiniteGroup& g, const std::vector<Element>& k) {
  std::set<std::vector<Element>> cosets;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> c;
    for (auto y : k) c.push_back(g.mul(y, x));
    std::sort(c.begin(), c.end());
    cosets.insert(c);
  }
  std::vector<std::vector<Element>> out(cosets.begin(), cosets.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

/// Fibre permutations commuting with the monodromy of every generator. For
/// a connected cover these are exactly the deck transformations.
inline std::vector<std::vector<std::uint32_t>> brute_deck_permutations(const CoverSpec& spec) {
  const std::size_t n = spec.coset_count();
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t a = 0; a < spec.basis().rank(); ++a) {
    std::vector<std::uint32_t> m(n);
    for (std::uint32_t x = 0; x < n; ++x) m[x] = spec.right_multiply(FibrePoint{x}, spec.gen_images()[a]).coset;
    gens.push_back(m);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& f : all_permutations(n)) {
    bool ok = true;
    for (const auto& m : gens)
      for (std::uint32_t x = 0; x < n && ok; ++x) ok = f[m[x]] == m[f[x]];
    if (ok) out.push_back(f);
  }
  return out;
}

/// Walks the lift of `darts` from `start` by scanning every lifted dart.
inline CoverVertexId brute_lift(const CoverGraph& cover, CoverVertexId start, const std::vector<DartId>& darts) {
  CoverVertexId at = start;
  for (auto d : darts) {
    for (const auto& ld : cover.darts()) {
      if (ld.source == at && ld.base_dart == d) {
        at = ld.target;
        break;
      }
    }
  }
  return at;
}

/// Does some bijection between the fibres commute with the monodromy of every
/// generator? Both specs share a base.
inline bool brute_fibre_isomorphic(const CoverSpec& a, const CoverSpec& b) {
  const std::size_t n = a.coset_count();
  if (n != b.coset_count()) return false;
  for (const auto& f : all_permutations(n)) {
    bool ok = true;
    for (std::uint32_t g = 0; g < a.basis().rank() && ok; ++g)
      for (std::uint32_t x = 0; x < n && ok; ++x)
        ok = f[a.right_multiply(FibrePoint{x}, a.gen_images()[g]).coset] ==
             b.right_multiply(FibrePoint{f[x]}, b.gen_images()[g]).coset;
    if (ok) return true;
  }
  return false;
}

// ------------------------------------------------------------- generators

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// A mix of cyclic groups, products and small permutation groups.
inline FiniteGroup random_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> small(1, 8);
  switch (kind(rng)) {
    case 0:
      return cyclic_group(small(rng));
    case 1:
      return direct_product(cyclic_group(small(rng) % 4 + 1), cyclic_group(small(rng) % 4 + 1));
    case 2: {
      std::uniform_int_distribution<std::size_t> deg(2, 4);
      const std::size_t n = deg(rng);
      std::vector<Permutation> gens{random_permutation(rng, n), random_permutation(rng, n)};
      return permutation_group(gens).group;
    }
    default:
      return symmetric_group(3).group;
  }
}

inline std::vector<Element> random_elements(std::mt19937_64& rng, const FiniteGroup& g, std::size_t count) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
  std::vector<Element> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(pick(rng));
  return out;
}

/// Random connected multigraph: a random tree plus extra edges (loops and
/// parallel edges allowed).
inline BaseGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_extra) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<std::size_t> extra(0, max_extra);
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(n - 1));
  for (std::size_t k = extra(rng); k > 0; --k) edges.emplace_back(any(rng), any(rng));
  std::shuffle(edges.begin(), edges.end(), rng);
  return BaseGraph::from_edges(n, edges, any(rng));
}

/// A random cover with a random subgroup generated by up to two elements.
inline CoverSpec random_cover(std::mt19937_64& rng, std::size_t max_vertices = 3, std::size_t max_extra = 3) {
  BaseGraph g = random_graph(rng, max_vertices, max_extra);
  Pi1Basis basis = spanning_tree(g);
  FiniteGroup group = random_group(rng);
  auto images = random_elements(rng, group, basis.rank());
  std::uniform_int_distribution<std::size_t> kgens(0, 2);
  const auto kg = random_elements(rng, group, kgens(rng));
  return CoverSpec::make(basis, group, images, generated_subgroup(group, kg));
}

inline CoverSpec wedge_cover(const FiniteGroup& g, std::vector<Element> images, std::vector<Element> k = {}) {
  Pi1Basis basis = spanning_tree(wedge_of_circles(images.size()));
  Subgroup sub = k.empty() ? Subgroup::trivial(g) : Subgroup::make(g, std::move(k));
  return CoverSpec::make(basis, g, std::move(images), std::move(sub));
}

/// S3 with its lexicographic permutation indices.
struct S3 {
  PermutationGroup pg = symmetric_group(3);
  Element e = pg.index_of({0, 1, 2});
  Element t01 = pg.index_of({1, 0, 2});
  Element t12 = pg.index_of({0, 2, 1});
  Element t02 = pg.index_of({2, 1, 0});
  Element c1 = pg.index_of({1, 2, 0});
  Element c2 = pg.index_of({2, 0, 1});
  const FiniteGroup& g() const { return pg.group; }
};

/// The wedge tower (Z/2^k)^2 for k = 1..depth with a, b the standard generators.
inline TowerSpec wedge_abelian_tower(std::size_t depth) {
  RawTower raw;
  raw.base = wedge_of_circles(2);
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::size_t n = std::size_t{1} << k;
    raw.levels.push_back(direct_product(cyclic_group(n), cyclic_group(n)));
    raw.gen_images.push_back({static_cast<Element>(n), 1});
    if (k > 1) {
      const std::size_t m = n / 2;
      std::vector<Element> bond(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) bond[x * n + y] = static_cast<Element>((x % m) * m + y % m);
      raw.bonds.push_back(bond);
    }
  }
  return validate_tower(std::move(raw));
}

/// Wedge tower Z/2 <- S3 with a -> (0 1), b -> (1 2) on top and the sign map
/// as bond.
inline TowerSpec sign_tower() {
  const S3 s;
  RawTower raw;
  raw.base = wedge_of_circles(2);
  std::vector<Element> sign(6);
  for (Element x = 0; x < 6; ++x) {
    const auto& p = s.pg.elements[x];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    sign[x] = static_cast<Element>(inversions % 2);
  }
  raw.levels = {cyclic_group(2), s.g()};
  raw.gen_images = {{1, 1}, {s.t01, s.t12}};
  raw.bonds = {sign};
  return validate_tower(std::move(raw));
}

/// Levels G/N, G, G x Z/2 over a wedge of two circles, where G is a random
/// two-generated group, N a random normal subgroup and both bonds are
/// projections. Generator images on top are (g_i, 1).
inline TowerSpec random_tower(std::mt19937_64& rng) {
  FiniteGroup g = random_group(rng);
  const auto gens = random_elements(rng, g, 2);
  Subgroup n = generated_subgroup(g, random_elements(rng, g, 1));
  if (!is_normal(g, n)) n = Subgroup::trivial(g);
  const Quotient q = quotient_group(g, n);
  const FiniteGroup top = direct_product(g, cyclic_group(2));
  RawTower raw;
  raw.base = wedge_of_circles(2);
  raw.levels = {q.group, g, top};
  raw.gen_images = {{q.projection(gens[0]), q.projection(gens[1])},
                    gens,
                    {gens[0] * 2 + 1, gens[1] * 2 + 1}};
  std::vector<Element> drop(top.order());
  for (Element x = 0; x < top.order(); ++x) drop[x] = x / 2;
  raw.bonds = {q.projection.table(), drop};
  return validate_tower(std::move(raw));
}

/// Every compatible tuple of the first `depth` levels, by brute force over
/// the product of the level groups.
inline std::set<std::vector<Element>> brute_compatible_tuples(const TowerSpec& t, std::size_t depth) {
  std::set<std::vector<Element>> out;
  std::vector<Element> tuple(depth, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < depth && ok; ++i) ok = t.bond(i)(tuple[i + 1]) == tuple[i];
    if (ok) out.insert(tuple);
    std::size_t k = 0;
    while (k < depth && ++tuple[k] == t.level(k).order()) tuple[k++] = 0;
    if (k == depth) break;
  }
  return out;
}

}  // namespace testkit
