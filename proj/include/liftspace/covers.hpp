#pragma once

// Finite covers of a base graph built from a homomorphism phi from the free
// group on the chords to a finite group G and a subgroup K of G.
//
// The fibre over the base vertex is the set of right cosets K\G. Monodromy
// (the right action of a loop) multiplies on the right: Kx -> Kx phi(w). Deck
// transformations multiply on the left: Kx -> Knx for n normalizing K.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "liftspace/complex.hpp"
#include "liftspace/groups.hpp"
#include "liftspace/word.hpp"

namespace liftspace {

/// A right coset of K in G, by coset id.
struct FibrePoint {
  std::uint32_t coset = 0;
  friend auto operator<=>(const FibrePoint&, const FibrePoint&) = default;
};

class CoverSpec {
 public:
  static CoverSpec make(Pi1Basis basis, FiniteGroup group, std::vector<Element> gen_images,
                        Subgroup k);
  /// K trivial.
  static CoverSpec make(Pi1Basis basis, FiniteGroup group, std::vector<Element> gen_images);

  const BaseGraph& base() const noexcept { return basis_.graph(); }
  const Pi1Basis& basis() const noexcept { return basis_; }
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Element>& gen_images() const noexcept { return images_; }
  const Subgroup& subgroup() const noexcept { return k_; }

  /// Number of sheets, [G:K].
  std::size_t coset_count() const noexcept { return reps_.size(); }
  FibrePoint coset_of(Element x) const { return FibrePoint{coset_of_.at(x)}; }
  /// Minimal element of the coset.
  Element representative(FibrePoint x) const { return reps_.at(x.coset); }
  /// The coset K itself.
  FibrePoint base_point() const { return coset_of(group_.identity()); }
  std::vector<FibrePoint> fibre() const;

  Element phi(const Word& w) const { return evaluate_word(group_, images_, w); }
  /// Group element carried by a base dart: identity on tree darts,
  /// phi(a) on the positive chord of a, phi(a)^-1 on its reverse.
  Element voltage(DartId d) const;
  /// Kx -> K(x g).
  FibrePoint right_multiply(FibrePoint x, Element g) const;

  bool phi_surjective() const noexcept { return phi_surjective_; }
  bool subgroup_normal() const noexcept { return k_normal_; }

 private:
  CoverSpec(Pi1Basis basis, FiniteGroup group, std::vector<Element> images, Subgroup k);

  Pi1Basis basis_;
  FiniteGroup group_;
  std::vector<Element> images_;
  Subgroup k_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Element> reps_;
  bool phi_surjective_ = false;
  bool k_normal_ = false;
};

using CoverVertexId = std::uint32_t;
using CoverDartId = std::uint32_t;

struct CoverVertex {
  VertexId base = 0;
  FibrePoint fibre;
  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

struct LiftedDart {
  CoverDartId id = 0;
  CoverVertexId source = 0;
  CoverVertexId target = 0;
  CoverDartId reverse = 0;
  DartId base_dart = 0;
};

/// Vertex (v, c) has id v*sheets + c; the lift of base dart d starting on
/// sheet c has id d*sheets + c.
class CoverGraph {
 public:
  const BaseGraph& base() const noexcept { return base_; }
  std::size_t sheets() const noexcept { return sheets_; }
  std::size_t vertex_count() const noexcept { return base_.vertex_count() * sheets_; }
  std::size_t dart_count() const noexcept { return darts_.size(); }
  const std::vector<LiftedDart>& darts() const noexcept { return darts_; }
  const LiftedDart& dart(CoverDartId d) const { return darts_.at(d); }

  CoverVertex vertex(CoverVertexId v) const {
    return {static_cast<VertexId>(v / sheets_), FibrePoint{static_cast<std::uint32_t>(v % sheets_)}};
  }
  CoverVertexId vertex_id(VertexId base, FibrePoint x) const {
    return static_cast<CoverVertexId>(base * sheets_ + x.coset);
  }
  CoverVertexId base_point() const { return vertex_id(base_.base_vertex(), base_point_); }

  /// The lift of `base_dart` that starts at `at`.
  const LiftedDart& lift_dart(CoverVertexId at, DartId base_dart) const;

 private:
  BaseGraph base_;
  std::size_t sheets_ = 1;
  FibrePoint base_point_;
  std::vector<LiftedDart> darts_;

  explicit CoverGraph(BaseGraph base) : base_(std::move(base)) {}
  friend CoverGraph build_cover(const CoverSpec& spec);
};

CoverGraph build_cover(const CoverSpec& spec);

/// Star bijection at every vertex, reverse involution respected, and darts
/// project onto darts with matching endpoints.
bool is_covering(const CoverGraph& cover);

/// True iff monodromy acts transitively on K\G.
bool is_connected_cover(const CoverSpec& spec);
/// Connectivity of the built graph, by graph search.
bool is_connected_graph(const CoverGraph& cover);

/// Right action: Kx -> Kx phi(w).
FibrePoint monodromy(const CoverSpec& spec, FibrePoint x, const Word& w);

/// End vertex of the lift of `path` starting at cover vertex `start`, found
/// dart by dart. `start` must lie over path.start.
CoverVertexId lift_path(const CoverGraph& cover, CoverVertexId start, const EdgePath& path);

/// Monodromy computed by lifting the canonical loop of `w` through the cover.
FibrePoint monodromy_by_lifting(const CoverSpec& spec, const CoverGraph& cover, FibrePoint x,
                                const Word& w);

/// Extends from_vertex -> to_vertex along lifted darts to a map commuting with
/// projection and dart lifts. Returns the vertex map if it is a well-defined
/// bijection on all of `from`; both covers must sit over the same base graph.
std::optional<std::vector<CoverVertexId>> extend_cover_map(const CoverGraph& from,
                                                           const CoverGraph& to,
                                                           CoverVertexId from_vertex,
                                                           CoverVertexId to_vertex);

/// Fibre points reachable from the base point by cover automorphisms, found
/// by trying to extend every basepoint assignment.
std::vector<FibrePoint> deck_orbit_by_search(const CoverGraph& cover);

/// Regular means the deck group is transitive on the fibre. Computed both by
/// normality of K and by automorphism search; disagreement is a logic_error.
bool is_regular(const CoverSpec& spec);

struct DeckGroup {
  /// N_G(K)/K; element i is the class of representatives[i].
  FiniteGroup carrier;
  std::vector<Element> representatives;
  /// action[d][x] is the image of fibre point x under deck element d.
  std::vector<std::vector<FibrePoint>> action;

  FibrePoint apply(Element d, FibrePoint x) const { return action.at(d).at(x.coset); }
  bool acts_freely() const;
  bool acts_transitively() const;
};

DeckGroup deck_group(const CoverSpec& spec);

struct FibreGroup {
  /// Element i is fibre point i; K is the identity.
  FiniteGroup group;
  /// Theta: deck carrier element -> image of the base point.
  std::vector<FibrePoint> theta;
};

/// Group structure transported to the fibre of a regular cover.
FibreGroup fibre_group(const CoverSpec& spec);

/// Left action through the deck transformation sending K to K phi(w):
/// Kx -> K phi(w) x.
FibrePoint left_action(const CoverSpec& spec, const Word& w, FibrePoint x);

/// Fibre points where the left and right actions of w agree.
std::vector<FibrePoint> equalizer_set(const CoverSpec& spec, const Word& w);

}  // namespace liftspace
