#include "liftspace/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "liftspace/error.hpp"

namespace liftspace {

Element TowerSpec::phi(std::size_t i, const Word& w) const {
  return evaluate_word(level(i), gen_images(i), w);
}

Element TowerSpec::project(Element g, std::size_t from, std::size_t to) const {
  if (to > from) throw Error(ErrorCode::LevelOrder, "cannot project to a deeper level", to + 1);
  for (std::size_t k = from; k > to; --k) g = bond(k - 1)(g);
  return g;
}

CoverSpec TowerSpec::cover_spec(std::size_t i) const {
  return CoverSpec::make(basis_, level(i), gen_images(i));
}

TowerSpec validate_tower(RawTower raw) {
  const std::size_t depth = raw.levels.size();
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "tower has no levels");
  if (raw.bonds.size() != depth - 1)
    throw Error(ErrorCode::InvalidArgument, "tower of depth " + std::to_string(depth) + " needs " +
                                                std::to_string(depth - 1) + " bonds");
  if (raw.gen_images.size() != depth)
    throw Error(ErrorCode::InvalidArgument, "every level needs generator images");

  Pi1Basis basis = spanning_tree(raw.base);
  auto levels = std::make_shared<TowerSpec::Levels>();
  levels->groups = std::move(raw.levels);
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& images = raw.gen_images[i];
    if (images.size() != basis.rank())
      throw Error(ErrorCode::InvalidArgument,
                  "level " + std::to_string(i + 1) + " has " + std::to_string(images.size()) +
                      " generator images, the base has rank " + std::to_string(basis.rank()),
                  i + 1);
    for (auto x : images)
      if (!levels->groups[i].contains(x))
        throw Error(ErrorCode::InvalidArgument,
                    "generator image outside the group at level " + std::to_string(i + 1), i + 1);
  }
  levels->images = std::move(raw.gen_images);

  for (std::size_t i = 0; i + 1 < depth; ++i) {
    GroupHom q = [&] {
      try {
        return GroupHom::make(levels->groups[i + 1], levels->groups[i], std::move(raw.bonds[i]));
      } catch (const Error& e) {
        throw Error(e.code(), "bond " + std::to_string(i + 1) + ": " + e.what(), i + 1);
      }
    }();
    if (!is_surjective(q))
      throw Error(ErrorCode::BondNotSurjective,
                  "bond from level " + std::to_string(i + 2) + " onto level " +
                      std::to_string(i + 1) + " is not surjective",
                  i + 1);
    for (std::size_t a = 0; a < basis.rank(); ++a) {
      if (q(levels->images[i + 1][a]) != levels->images[i][a])
        throw Error(ErrorCode::Incompatible,
                    "(" + std::to_string(i + 1) + ", " + basis.generator_names()[a] +
                        "): q(phi_" + std::to_string(i + 2) + "(" + basis.generator_names()[a] +
                        ")) != phi_" + std::to_string(i + 1) + "(" + basis.generator_names()[a] + ")",
                    i + 1);
    }
    levels->bonds.push_back(std::move(q));
  }
  return TowerSpec(std::move(basis), std::move(levels));
}

TowerSpec solenoid_tower(std::size_t p, std::size_t depth) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "solenoid needs p >= 2");
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "solenoid needs depth >= 1");
  RawTower raw;
  raw.base = circle_graph();
  std::size_t order = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t prev = order;
    order *= p;
    raw.levels.push_back(cyclic_group(order));
    raw.gen_images.push_back({1});
    if (i > 0) {
      std::vector<Element> bond(order);
      for (std::size_t g = 0; g < order; ++g) bond[g] = static_cast<Element>(g % prev);
      raw.bonds.push_back(std::move(bond));
    }
  }
  return validate_tower(std::move(raw));
}

ProfiniteElement ProfiniteElement::make(const TowerSpec& tower, std::vector<Element> components) {
  if (components.size() > tower.depth())
    throw Error(ErrorCode::DepthExceeded, "element deeper than the tower");
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!tower.level(i).contains(components[i]))
      throw Error(ErrorCode::InvalidArgument, "component outside its level group", i + 1);
  for (std::size_t i = 0; i + 1 < components.size(); ++i)
    if (tower.bond(i)(components[i + 1]) != components[i])
      throw Error(ErrorCode::Incompatible,
                  "components at levels " + std::to_string(i + 1) + " and " +
                      std::to_string(i + 2) + " are not compatible",
                  i + 1);
  return ProfiniteElement(tower.shared_levels(), std::move(components));
}

ProfiniteElement ProfiniteElement::identity(const TowerSpec& tower, std::size_t depth) {
  if (depth > tower.depth()) throw Error(ErrorCode::DepthExceeded, "depth exceeds the tower");
  std::vector<Element> c;
  for (std::size_t i = 0; i < depth; ++i) c.push_back(tower.level(i).identity());
  return ProfiniteElement(tower.shared_levels(), std::move(c));
}

ProfiniteElement ProfiniteElement::truncate(std::size_t depth) const {
  if (depth > components_.size()) throw Error(ErrorCode::DepthExceeded, "cannot extend by truncation");
  return ProfiniteElement(levels_, {components_.begin(), components_.begin() + static_cast<std::ptrdiff_t>(depth)});
}

ProfiniteElement theta(const TowerSpec& tower, const Word& w, std::size_t depth) {
  if (depth > tower.depth())
    throw Error(ErrorCode::DepthExceeded, "depth " + std::to_string(depth) + " exceeds tower depth " +
                                              std::to_string(tower.depth()));
  std::vector<Element> c;
  c.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) c.push_back(tower.phi(i, w));
  for (std::size_t i = 0; i + 1 < depth; ++i)
    if (tower.bond(i)(c[i + 1]) != c[i]) throw std::logic_error("theta produced an incompatible tuple");
  return ProfiniteElement(tower.shared_levels(), std::move(c));
}

namespace {

void check_compatible(const ProfiniteElement& x) {
  const auto& lv = x.levels();
  for (std::size_t i = 0; i + 1 < x.depth(); ++i)
    if (lv.bonds[i](x[i + 1]) != x[i]) throw std::logic_error("fibre arithmetic left the fibre");
}

}  // namespace

ProfiniteElement fibre_mul(const ProfiniteElement& x, const ProfiniteElement& y) {
  if (x.depth() != y.depth())
    throw Error(ErrorCode::DepthMismatch, "depths " + std::to_string(x.depth()) + " and " +
                                              std::to_string(y.depth()));
  if (x.levels_ != y.levels_ && !(x.levels_->groups == y.levels_->groups))
    throw Error(ErrorCode::InvalidArgument, "elements of different towers");
  std::vector<Element> c(x.depth());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.levels_->groups[i].mul(x[i], y[i]);
  ProfiniteElement out(x.levels_, std::move(c));
  check_compatible(out);
  return out;
}

ProfiniteElement fibre_inv(const ProfiniteElement& x) {
  std::vector<Element> c(x.depth());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.levels_->groups[i].inv(x[i]);
  ProfiniteElement out(x.levels_, std::move(c));
  check_compatible(out);
  return out;
}

TowerCover build_tower_covers(const TowerSpec& tower) {
  TowerCover tc;
  std::vector<CoverSpec> specs;
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    specs.push_back(tower.cover_spec(i));
    tc.levels.push_back(build_cover(specs.back()));
  }
  for (std::size_t i = 0; i + 1 < tower.depth(); ++i) {
    const CoverGraph& upper = tc.levels[i + 1];
    const CoverGraph& lower = tc.levels[i];
    const GroupHom& q = tower.bond(i);
    std::vector<CoverVertexId> vmap(upper.vertex_count());
    for (CoverVertexId v = 0; v < upper.vertex_count(); ++v) {
      const CoverVertex cv = upper.vertex(v);
      const Element g = specs[i + 1].representative(cv.fibre);
      vmap[v] = lower.vertex_id(cv.base, specs[i].coset_of(q(g)));
    }
    std::vector<CoverDartId> dmap(upper.dart_count());
    for (const auto& d : upper.darts()) dmap[d.id] = lower.lift_dart(vmap[d.source], d.base_dart).id;
    tc.vertex_maps.push_back(std::move(vmap));
    tc.dart_maps.push_back(std::move(dmap));
  }
  return tc;
}

bool is_covering_map(const CoverGraph& upper, const CoverGraph& lower,
                     const std::vector<CoverVertexId>& vertex_map,
                     const std::vector<CoverDartId>& dart_map) {
  if (!(upper.base() == lower.base())) return false;
  if (vertex_map.size() != upper.vertex_count() || dart_map.size() != upper.dart_count()) return false;
  std::vector<bool> hit(lower.vertex_count(), false);
  for (CoverVertexId v = 0; v < upper.vertex_count(); ++v) {
    if (vertex_map[v] >= lower.vertex_count()) return false;
    if (lower.vertex(vertex_map[v]).base != upper.vertex(v).base) return false;
    hit[vertex_map[v]] = true;
  }
  for (bool h : hit)
    if (!h) return false;
  for (const auto& d : upper.darts()) {
    if (dart_map[d.id] >= lower.dart_count()) return false;
    const LiftedDart& image = lower.dart(dart_map[d.id]);
    if (image.base_dart != d.base_dart || image.source != vertex_map[d.source] ||
        image.target != vertex_map[d.target])
      return false;
  }
  // Star bijection: out-darts of v map injectively onto the out-darts of r(v).
  for (CoverVertexId v = 0; v < upper.vertex_count(); ++v) {
    const auto& base_out = upper.base().out_darts(upper.vertex(v).base);
    std::vector<CoverDartId> images;
    for (auto bd : base_out) images.push_back(dart_map[upper.lift_dart(v, bd).id]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    std::vector<CoverDartId> lower_star;
    for (auto bd : base_out) lower_star.push_back(lower.lift_dart(vertex_map[v], bd).id);
    std::sort(lower_star.begin(), lower_star.end());
    if (images != lower_star) return false;
  }
  return true;
}

DenseLeafReport dense_leaf_check(const TowerSpec& tower) {
  DenseLeafReport report;
  report.passed = true;
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    LevelDensity ld;
    ld.level = i + 1;
    ld.order = tower.level(i).order();
    ld.image_size = generated_subgroup(tower.level(i), tower.gen_images(i)).size();
    ld.surjective = ld.image_size == ld.order;
    if (!ld.surjective && report.passed) {
      report.passed = false;
      report.first_failure = ld.level;
    }
    report.levels.push_back(ld);
  }
  return report;
}

KernelQuotient kernel_quotient(const FiniteGroup& g, const std::vector<Element>& gen_images) {
  KernelQuotient kq;
  // Points: image(phi), discovered by right multiplication from the identity.
  std::map<Element, std::uint32_t> point_index;
  kq.points.push_back(g.identity());
  point_index.emplace(g.identity(), 0);
  for (std::size_t i = 0; i < kq.points.size(); ++i) {
    for (auto s : gen_images) {
      const Element y = g.mul(kq.points[i], s);
      if (point_index.emplace(y, static_cast<std::uint32_t>(kq.points.size())).second)
        kq.points.push_back(y);
    }
  }
  const std::size_t n = kq.points.size();
  std::vector<Permutation> sigma;
  for (auto s : gen_images) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = point_index.at(g.mul(kq.points[i], s));
    sigma.push_back(std::move(p));
  }

  // Close the generator permutations; each class is keyed by the image of point 0.
  kq.perms.assign(n, Permutation{});
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0u);
  kq.perms[0] = id;
  std::vector<std::uint32_t> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& s : sigma) {
      Permutation next = compose(kq.perms[order[i]], s);
      const std::uint32_t key = next[0];
      if (kq.perms[key].empty()) {
        kq.perms[key] = std::move(next);
        order.push_back(key);
      } else if (kq.perms[key] != next) {
        throw std::logic_error("generator action on the image is not regular");
      }
    }
  }
  if (order.size() != n) throw std::logic_error("generator action on the image is not transitive");

  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = kq.perms[b][kq.perms[a][0]];
  kq.group = make_group_unchecked(n, std::move(mult), "pi1/ker");
  for (const auto& s : sigma) kq.generator_images.push_back(s[0]);

  kq.embeds = true;
  for (std::size_t a = 0; a < n && kq.embeds; ++a)
    for (std::size_t b = 0; b < n && kq.embeds; ++b)
      kq.embeds = g.mul(kq.points[a], kq.points[b]) ==
                  kq.points[kq.group.mul(static_cast<Element>(a), static_cast<Element>(b))];
  return kq;
}

std::vector<KernelLevel> kernel_chain(const TowerSpec& tower) {
  const DenseLeafReport dense = dense_leaf_check(tower);
  if (!dense.passed)
    throw Error(ErrorCode::NotDense,
                "phi is not onto G at level " + std::to_string(dense.first_failure),
                dense.first_failure);
  std::vector<KernelLevel> chain;
  for (std::size_t i = 0; i < tower.depth(); ++i) {
    const KernelQuotient kq = kernel_quotient(tower.level(i), tower.gen_images(i));
    KernelLevel kl;
    kl.level = i + 1;
    kl.index = kq.group.order();
    kl.order = tower.level(i).order();
    kl.isomorphism = kq.embeds && kl.index == kl.order;
    chain.push_back(kl);
  }
  return chain;
}

}  // namespace liftspace
