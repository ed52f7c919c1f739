#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "liftspace/groups.hpp"

namespace liftspace {

struct Letter {
  std::uint32_t generator = 0;
  int sign = +1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group on generators 0, 1, 2, ...
class Word {
 public:
  Word() = default;

  static Word generator(std::uint32_t g, int sign = +1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(long long k) const;

  /// Reduced concatenation.
  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;

  friend Word reduce_word(std::span<const Letter> letters);
};

/// Cancels adjacent inverse pairs until none remain (single stack pass).
Word reduce_word(std::span<const Letter> letters);

/// Product of the generator images (or their inverses) in reading order.
/// The empty word maps to the identity.
Element evaluate_word(const FiniteGroup& g, std::span<const Element> images, const Word& w);

/// Uniform length in [0, max_length], then uniform non-cancelling letters.
Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length);

/// Space-separated letters, inverses with a trailing apostrophe ("a b'");
/// the empty word renders as "1".
std::string format_word(const Word& w, std::span<const std::string> names);

/// Every reduced word of length <= max_length, shortest first.
std::vector<Word> all_reduced_words(std::size_t rank, std::size_t max_length);

}  // namespace liftspace
