#include "liftspace/borel.hpp"

#include <algorithm>
#include <numeric>

#include "liftspace/error.hpp"

namespace liftspace {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_levels(const TowerSpec& tower, std::size_t i, std::size_t j) {
  if (i > j)
    throw Error(ErrorCode::LevelOrder,
                "level pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") has i > j",
                i + 1);
  if (j >= tower.depth())
    throw Error(ErrorCode::DepthExceeded,
                "level " + std::to_string(j + 1) + " exceeds tower depth " + std::to_string(tower.depth()),
                j + 1);
}

void require_dense_through(const TowerSpec& tower, std::size_t j) {
  const DenseLeafReport dense = dense_leaf_check(tower);
  for (std::size_t k = 0; k <= j && k < dense.levels.size(); ++k)
    if (!dense.levels[k].surjective)
      throw Error(ErrorCode::NotDense, "phi is not onto G at level " + std::to_string(k + 1), k + 1);
}

}  // namespace

// With K trivial the fibre point of a level-i vertex is its group element.
CoverVertexId phi_map(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                      std::size_t j, Element u, CoverVertexId y) {
  check_levels(tower, i, j);
  const CoverVertex v = covers.levels.at(j).vertex(y);
  const Element g = tower.project(v.fibre.coset, j, i);
  const Element image = tower.level(i).mul(u, g);
  return covers.levels.at(i).vertex_id(v.base, FibrePoint{image});
}

LiftedPhi phi_map_by_lifting(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                             std::size_t j, Element u, const EdgePath& alpha) {
  check_levels(tower, i, j);
  if (alpha.start != tower.base().base_vertex())
    throw Error(ErrorCode::NotIncident, "path must start at the base vertex");
  const CoverGraph& leaf = covers.levels.at(j);
  const CoverGraph& target = covers.levels.at(i);
  LiftedPhi out;
  out.leaf_point = lift_path(leaf, leaf.base_point(), alpha);
  out.image = lift_path(target, target.vertex_id(alpha.start, FibrePoint{u}), alpha);
  return out;
}

BorelQuotient borel_quotient(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                             std::size_t j) {
  check_levels(tower, i, j);
  require_dense_through(tower, j);
  const FiniteGroup& gi = tower.level(i);
  const FiniteGroup& gj = tower.level(j);
  const CoverGraph& ej = covers.levels.at(j);
  const CoverGraph& ei = covers.levels.at(i);
  const std::size_t vj = ej.vertex_count();

  BorelQuotient bq;
  bq.i = i;
  bq.j = j;
  bq.pair_count = gi.order() * vj;
  auto index = [vj](Element u, CoverVertexId y) { return static_cast<std::uint32_t>(u * vj + y); };

  // Orbits of a group are the components of the action graph of any generating set.
  DisjointSets sets(bq.pair_count);
  for (const Element gamma : generating_set(gj)) {
    const Element shift = tower.project(gamma, j, i);
    const Element gamma_inv = gj.inv(gamma);
    for (Element u = 0; u < gi.order(); ++u) {
      const Element moved_u = gi.mul(u, shift);
      for (CoverVertexId y = 0; y < vj; ++y) {
        const CoverVertex v = ej.vertex(y);
        const CoverVertexId moved_y = ej.vertex_id(v.base, FibrePoint{gj.mul(gamma_inv, v.fibre.coset)});
        sets.unite(index(u, y), index(moved_u, moved_y));
      }
    }
  }

  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> class_of_root(bq.pair_count, unset);
  bq.class_of.resize(bq.pair_count);
  bq.well_defined = true;
  for (Element u = 0; u < gi.order(); ++u) {
    for (CoverVertexId y = 0; y < vj; ++y) {
      const std::uint32_t p = index(u, y);
      const std::uint32_t root = sets.find(p);
      const CoverVertexId image = phi_map(tower, covers, i, j, u, y);
      if (class_of_root[root] == unset) {
        class_of_root[root] = static_cast<std::uint32_t>(bq.class_image.size());
        bq.class_image.push_back(image);
      } else if (bq.class_image[class_of_root[root]] != image) {
        bq.well_defined = false;
      }
      bq.class_of[p] = class_of_root[root];
    }
  }
  bq.class_count = bq.class_image.size();

  std::vector<bool> hit(ei.vertex_count(), false);
  bool injective = true;
  for (auto v : bq.class_image) {
    if (hit[v]) injective = false;
    hit[v] = true;
  }
  bq.bijective = bq.well_defined && injective && bq.class_count == ei.vertex_count();
  return bq;
}

FibreData fibre_data(const TowerSpec& tower) {
  FibreData data;
  data.base = tower.base();
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    data.levels.push_back(tower.level(i));
    data.theta_generators.push_back(tower.gen_images(i));
  }
  return data;
}

bool Reconstruction::all_isomorphic() const {
  for (const auto& l : levels)
    if (!l.isomorphic) return false;
  return true;
}

Reconstruction reconstruct_tower(const FibreData& data, const TowerCover& original,
                                 std::size_t exhaustive_limit) {
  const std::size_t depth = data.levels.size();
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "fibre data has no levels");
  if (data.theta_generators.size() != depth || original.levels.size() != depth)
    throw Error(ErrorCode::InvalidArgument, "fibre data and original tower disagree on depth");
  for (std::size_t i = 0; i < depth; ++i) {
    if (generated_subgroup(data.levels[i], data.theta_generators[i]).size() != data.levels[i].order())
      throw Error(ErrorCode::NotDense, "theta is not onto the fibre quotient at level " + std::to_string(i + 1),
                  i + 1);
  }

  // Each level is pi_1/ker theta_i acting on itself.
  std::vector<KernelQuotient> quotients;
  for (std::size_t i = 0; i < depth; ++i)
    quotients.push_back(kernel_quotient(data.levels[i], data.theta_generators[i]));

  RawTower raw;
  raw.base = data.base;
  for (const auto& kq : quotients) {
    raw.levels.push_back(kq.group);
    raw.gen_images.push_back(kq.generator_images);
  }
  // The bond sends the class of w at level i+1 to the class of w at level i.
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const KernelQuotient& upper = quotients[i + 1];
    const KernelQuotient& lower = quotients[i];
    constexpr auto unset = static_cast<Element>(-1);
    std::vector<Element> bond(upper.group.order(), unset);
    std::vector<Element> frontier{upper.group.identity()};
    bond[upper.group.identity()] = lower.group.identity();
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      const Element x = frontier[k];
      for (std::size_t a = 0; a < upper.generator_images.size(); ++a) {
        const Element nx = upper.group.mul(x, upper.generator_images[a]);
        const Element ny = lower.group.mul(bond[x], lower.generator_images[a]);
        if (bond[nx] == unset) {
          bond[nx] = ny;
          frontier.push_back(nx);
        } else if (bond[nx] != ny) {
          throw Error(ErrorCode::Incompatible,
                      "ker theta_" + std::to_string(i + 2) + " is not inside ker theta_" +
                          std::to_string(i + 1),
                      i + 1);
        }
      }
    }
    raw.bonds.push_back(std::move(bond));
  }

  Reconstruction out{validate_tower(std::move(raw)), {}};
  const TowerCover rebuilt = build_tower_covers(out.tower);
  for (std::size_t i = 0; i < depth; ++i) {
    const CoverGraph& mine = rebuilt.levels[i];
    const CoverGraph& theirs = original.levels[i];
    LevelIsomorphism li;
    li.level = i + 1;
    li.exhaustive = theirs.sheets() <= exhaustive_limit;
    const VertexId b = theirs.base().base_vertex();
    const std::uint32_t candidates = li.exhaustive ? static_cast<std::uint32_t>(theirs.sheets()) : 1;
    for (std::uint32_t c = 0; c < candidates; ++c) {
      const CoverVertexId target = li.exhaustive ? theirs.vertex_id(b, FibrePoint{c}) : theirs.base_point();
      if (auto map = extend_cover_map(mine, theirs, mine.base_point(), target)) {
        if (li.isomorphisms_found++ == 0) li.vertex_map = std::move(*map);
      }
    }
    li.isomorphic = li.isomorphisms_found > 0;
    out.levels.push_back(std::move(li));
  }
  return out;
}

Reconstruction reconstruct_tower(const TowerSpec& original, std::size_t exhaustive_limit) {
  return reconstruct_tower(fibre_data(original), build_tower_covers(original), exhaustive_limit);
}

}  // namespace liftspace
