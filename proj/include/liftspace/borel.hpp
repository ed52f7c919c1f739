#pragma once

// The Borel construction at a pair of tower levels i <= j: the product of the
// level-i fibre group with the vertices of E_j, modulo the G_j-action
// gamma.(u, y) = (u q_ij(gamma), gamma^-1 y). The deeper cover E_j stands in
// for the dense leaf.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liftspace/covers.hpp"
#include "liftspace/report.hpp"
#include "liftspace/tower.hpp"

namespace liftspace {

/// u acting on the vertex y = (v, g) of E_j: returns (v, u q_ij(g)) in E_i.
/// Levels are 0-based.
CoverVertexId phi_map(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                      std::size_t j, Element u, CoverVertexId y);

struct LiftedPhi {
  /// End of the lift of alpha through E_j from its base point.
  CoverVertexId leaf_point = 0;
  /// End of the lift of alpha through E_i from (base, u).
  CoverVertexId image = 0;
};

/// The same map computed by path lifting: alpha is a path from the base
/// vertex, lifted once in E_j to locate y and once in E_i starting at u.
LiftedPhi phi_map_by_lifting(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                             std::size_t j, Element u, const EdgePath& alpha);

struct BorelQuotient {
  std::size_t i = 0;
  std::size_t j = 0;
  /// Pairs (u, y) are indexed u * |V(E_j)| + y.
  std::size_t pair_count = 0;
  std::vector<std::uint32_t> class_of;
  std::size_t class_count = 0;
  /// Canonical map: class -> vertex of E_i.
  std::vector<CoverVertexId> class_image;
  /// phi_map is constant on every class.
  bool well_defined = false;
  /// The induced map classes -> V(E_i) is a bijection.
  bool bijective = false;
};

BorelQuotient borel_quotient(const TowerSpec& tower, const TowerCover& covers, std::size_t i,
                             std::size_t j);

/// What the reconstruction starts from: the base, the finite quotients of
/// the fibre, and theta on the generators.
struct FibreData {
  BaseGraph base = circle_graph();
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<Element>> theta_generators;
};

FibreData fibre_data(const TowerSpec& tower);

/// Above this fibre size, cover isomorphism is certified only by the
/// basepoint-preserving map instead of trying every basepoint image.
inline constexpr std::size_t kExhaustiveIsomorphismLimit = 64;

struct LevelIsomorphism {
  std::size_t level = 0;  // 1-based
  bool isomorphic = false;
  bool exhaustive = false;
  std::size_t isomorphisms_found = 0;
  /// Reconstructed E_i -> original E_i, for the first isomorphism found.
  std::vector<CoverVertexId> vertex_map;
};

struct Reconstruction {
  TowerSpec tower;
  std::vector<LevelIsomorphism> levels;

  bool all_isomorphic() const;
};

/// Builds covers from pi_1/ker theta_i acting on itself and compares them,
/// level by level, with `original`.
Reconstruction reconstruct_tower(const FibreData& data, const TowerCover& original,
                                 std::size_t exhaustive_limit = kExhaustiveIsomorphismLimit);
Reconstruction reconstruct_tower(const TowerSpec& original,
                                 std::size_t exhaustive_limit = kExhaustiveIsomorphismLimit);

struct SuiteOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t max_word_length = 8;
  std::size_t exhaustive_limit = kExhaustiveIsomorphismLimit;
  /// Group axioms are scanned over all triples up to this order, sampled above.
  std::size_t full_axiom_scan_limit = 512;
};

Report theorem_suite(const TowerSpec& tower, const SuiteOptions& options = {});

}  // namespace liftspace
