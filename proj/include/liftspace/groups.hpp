#pragma once

// Finite groups stored as full multiplication tables, together with
// homomorphisms, subgroups and quotients between them.
//
// Element indices run over 0..order-1. Permutations compose left to right:
// in the product p*q, p is applied first and q second.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace liftspace {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  std::size_t order() const noexcept { return data_->order; }
  Element identity() const noexcept { return data_->identity; }
  Element mul(Element a, Element b) const noexcept {
    return data_->mult[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inv(Element a) const noexcept { return data_->inv[a]; }
  const std::string& name() const noexcept { return data_->name; }
  bool contains(Element a) const noexcept { return a < data_->order; }

  /// a^k for any integer k.
  Element pow(Element a, long long k) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  /// Row `a` of the multiplication table.
  std::span<const Element> row(Element a) const {
    return {data_->mult.data() + static_cast<std::size_t>(a) * data_->order, data_->order};
  }

  FiniteGroup renamed(std::string name) const;

  /// Table equality (names are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> mult{0};
    std::vector<Element> inv{0};
    Element identity = 0;
    std::string name;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend FiniteGroup validate_group(const std::vector<std::vector<Element>>& table,
                                    std::string name);
  friend FiniteGroup make_group_unchecked(std::size_t order, std::vector<Element> mult,
                                          std::string name);
};

/// Checks closure, associativity, identity and inverses of `table` and
/// returns the group. Errors name the witnessing elements.
FiniteGroup validate_group(const std::vector<std::vector<Element>>& table,
                           std::string name = {});

/// Builds a group from a row-major table the caller guarantees to be a group.
/// Only identity and inverses are derived; nothing is re-verified.
FiniteGroup make_group_unchecked(std::size_t order, std::vector<Element> mult,
                                 std::string name = {});

FiniteGroup cyclic_group(std::size_t n);

/// Element (g, h) has index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct PermutationGroup {
  FiniteGroup group;
  /// elements[i] is the permutation with index i; lexicographically sorted.
  std::vector<Permutation> elements;

  /// Index of `p`, or order() if `p` is not a member.
  Element index_of(const Permutation& p) const;
};

/// Left-to-right composition: (p*q)(i) = q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
bool is_permutation(const Permutation& p);

/// The group generated by `generators`, which must all act on the same
/// number of points.
PermutationGroup permutation_group(std::span<const Permutation> generators,
                                   std::string name = {});
PermutationGroup symmetric_group(std::size_t degree);

class Subgroup {
 public:
  /// Verifies that `elements` is closed under multiplication and inverses;
  /// never completes it. Duplicates and order do not matter.
  static Subgroup make(const FiniteGroup& parent, std::vector<Element> elements);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Sorted and duplicate free.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element a) const noexcept { return a < member_.size() && member_[a]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<bool> member_;
};

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);

bool is_normal(const FiniteGroup& g, const Subgroup& k);
Subgroup centralizer(const FiniteGroup& g, Element a);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& k);

/// A small generating set, picked greedily by ascending element index.
std::vector<Element> generating_set(const FiniteGroup& g);

class GroupHom {
 public:
  /// Verifies the homomorphism law on every pair of source elements.
  static GroupHom make(FiniteGroup source, FiniteGroup target, std::vector<Element> image);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Element>& table() const noexcept { return image_; }
  Element operator()(Element a) const noexcept { return image_[a]; }

  GroupHom then(const GroupHom& next) const;

 private:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Element> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> image_;
};

Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);
bool is_surjective(const GroupHom& h);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// Minimal element index of each coset, ascending; representatives[i] maps to i.
  std::vector<Element> representatives;
};

/// G/N for normal N. Cosets are numbered by ascending minimal representative.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

}  // namespace liftspace
