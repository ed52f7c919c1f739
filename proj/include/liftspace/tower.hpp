#pragma once

// Finite truncations of inverse sequences of regular covers of a base graph.
//
// Levels are numbered from 0 in the API; user-facing text and Error::level()
// count from 1. bond(i) maps level i+1 onto level i.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "liftspace/complex.hpp"
#include "liftspace/covers.hpp"
#include "liftspace/groups.hpp"
#include "liftspace/word.hpp"

namespace liftspace {

struct RawTower {
  BaseGraph base = circle_graph();
  std::vector<FiniteGroup> levels;
  /// bonds[i] is the image table of q_i: levels[i+1] -> levels[i].
  std::vector<std::vector<Element>> bonds;
  /// gen_images[i][a] = phi_i(a).
  std::vector<std::vector<Element>> gen_images;
};

class TowerSpec {
 public:
  struct Levels {
    std::vector<FiniteGroup> groups;
    std::vector<GroupHom> bonds;
    std::vector<std::vector<Element>> images;
  };

  std::size_t depth() const noexcept { return levels_->groups.size(); }
  const BaseGraph& base() const noexcept { return basis_.graph(); }
  const Pi1Basis& basis() const noexcept { return basis_; }
  const FiniteGroup& level(std::size_t i) const { return levels_->groups.at(i); }
  const GroupHom& bond(std::size_t i) const { return levels_->bonds.at(i); }
  const std::vector<Element>& gen_images(std::size_t i) const { return levels_->images.at(i); }
  const std::shared_ptr<const Levels>& shared_levels() const noexcept { return levels_; }

  /// phi_i(w).
  Element phi(std::size_t i, const Word& w) const;
  /// q_ij = q_i o ... o q_{j-1}: level j -> level i, for i <= j.
  Element project(Element g, std::size_t from, std::size_t to) const;
  /// The regular cover at level i (K trivial).
  CoverSpec cover_spec(std::size_t i) const;

 private:
  TowerSpec(Pi1Basis basis, std::shared_ptr<const Levels> levels)
      : basis_(std::move(basis)), levels_(std::move(levels)) {}

  Pi1Basis basis_;
  std::shared_ptr<const Levels> levels_;

  friend TowerSpec validate_tower(RawTower raw);
};

/// Checks every bond is a surjective homomorphism and that generator images
/// are compatible: q_i(phi_{i+1}(a)) = phi_i(a).
TowerSpec validate_tower(RawTower raw);

/// Circle base, levels Z/p, Z/p^2, ..., bonds by reduction, a -> 1.
TowerSpec solenoid_tower(std::size_t p, std::size_t depth);

/// A compatible tuple (g_1, ..., g_d), a truncated point of the profinite fibre.
class ProfiniteElement {
 public:
  /// Verifies compatibility of the components (Incompatible otherwise).
  static ProfiniteElement make(const TowerSpec& tower, std::vector<Element> components);
  static ProfiniteElement identity(const TowerSpec& tower, std::size_t depth);

  std::size_t depth() const noexcept { return components_.size(); }
  const std::vector<Element>& components() const noexcept { return components_; }
  Element operator[](std::size_t i) const { return components_.at(i); }
  const TowerSpec::Levels& levels() const noexcept { return *levels_; }

  /// Drops components beyond `depth`.
  ProfiniteElement truncate(std::size_t depth) const;

  friend bool operator==(const ProfiniteElement& a, const ProfiniteElement& b) {
    return a.components_ == b.components_;
  }

 private:
  ProfiniteElement(std::shared_ptr<const TowerSpec::Levels> levels, std::vector<Element> c)
      : levels_(std::move(levels)), components_(std::move(c)) {}

  std::shared_ptr<const TowerSpec::Levels> levels_;
  std::vector<Element> components_;

  friend ProfiniteElement fibre_mul(const ProfiniteElement& x, const ProfiniteElement& y);
  friend ProfiniteElement fibre_inv(const ProfiniteElement& x);
  friend ProfiniteElement theta(const TowerSpec& tower, const Word& w, std::size_t depth);
};

/// (phi_1(w), ..., phi_d(w)).
ProfiniteElement theta(const TowerSpec& tower, const Word& w, std::size_t depth);
ProfiniteElement fibre_mul(const ProfiniteElement& x, const ProfiniteElement& y);
ProfiniteElement fibre_inv(const ProfiniteElement& x);

struct TowerCover {
  std::vector<CoverGraph> levels;
  /// vertex_maps[i][v] = r_i(v) for v in E_{i+1}: (b, g) -> (b, q_i(g)).
  std::vector<std::vector<CoverVertexId>> vertex_maps;
  std::vector<std::vector<CoverDartId>> dart_maps;
};

TowerCover build_tower_covers(const TowerSpec& tower);

/// r commutes with the projections and restricts to a bijection on every star.
bool is_covering_map(const CoverGraph& upper, const CoverGraph& lower,
                     const std::vector<CoverVertexId>& vertex_map,
                     const std::vector<CoverDartId>& dart_map);

struct LevelDensity {
  std::size_t level = 0;  // 1-based
  std::size_t order = 0;
  std::size_t image_size = 0;
  bool surjective = false;
};

struct DenseLeafReport {
  std::vector<LevelDensity> levels;
  bool passed = false;
  /// 1-based level of the first failure, 0 if none.
  std::size_t first_failure = 0;
};

/// Level i passes iff phi_i is onto G_i.
DenseLeafReport dense_leaf_check(const TowerSpec& tower);

/// pi_1 / ker(phi) realized from the right action of the generators on
/// image(phi), independently of the group table of G.
struct KernelQuotient {
  /// Element i is the class acting on image points by the permutation
  /// perms[i]; perms[i] sends point 0 (the identity) to point i.
  FiniteGroup group;
  std::vector<Permutation> perms;
  /// points[i] is the element of G labelling point i.
  std::vector<Element> points;
  std::vector<Element> generator_images;
  /// The class -> G map i -> points[i] is an injective homomorphism.
  bool embeds = false;
};

KernelQuotient kernel_quotient(const FiniteGroup& g, const std::vector<Element>& gen_images);

struct KernelLevel {
  std::size_t level = 0;  // 1-based
  /// [pi_1 : ker theta_i].
  std::size_t index = 0;
  std::size_t order = 0;
  /// pi_1/ker theta_i -> G_i verified to be a group isomorphism.
  bool isomorphism = false;
};

/// Finite-depth stand-in for pi_1-profiniteness: the chain of finite-index
/// kernels of theta_i with pi_1/ker theta_i isomorphic to G_i.
std::vector<KernelLevel> kernel_chain(const TowerSpec& tower);

}  // namespace liftspace
