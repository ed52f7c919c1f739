#include "liftspace/word.hpp"

#include "liftspace/error.hpp"

namespace liftspace {

Word Word::generator(std::uint32_t g, int sign) {
  const Letter l{g, sign};
  return reduce_word(std::span<const Letter>(&l, 1));
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word Word::pow(long long k) const {
  const Word base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Word out;
  for (long long i = 0; i < k; ++i) out = out * base;
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined;
  joined.reserve(a.length() + b.length());
  joined.insert(joined.end(), a.letters_.begin(), a.letters_.end());
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return reduce_word(joined);
}

Word reduce_word(std::span<const Letter> letters) {
  Word out;
  for (const auto& l : letters) {
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorCode::InvalidArgument, "letter sign must be +1 or -1");
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

Element evaluate_word(const FiniteGroup& g, std::span<const Element> images, const Word& w) {
  Element acc = g.identity();
  for (const auto& l : w.letters()) {
    if (l.generator >= images.size())
      throw Error(ErrorCode::UnknownGenerator,
                  "generator " + std::to_string(l.generator) + " has no image");
    const Element x = images[l.generator];
    if (!g.contains(x))
      throw Error(ErrorCode::InvalidArgument, "generator image outside the group");
    acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
  }
  return acc;
}

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  if (rank == 0) return {};
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  // 2*rank letters; after the first, one choice is excluded to stay reduced.
  std::uniform_int_distribution<std::size_t> first(0, 2 * rank - 1);
  std::uniform_int_distribution<std::size_t> next(0, 2 * rank - 2);
  const std::size_t length = length_dist(rng);
  std::vector<Letter> letters;
  auto decode = [](std::size_t code) {
    return Letter{static_cast<std::uint32_t>(code / 2), code % 2 == 0 ? +1 : -1};
  };
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(decode(first(rng)));
      continue;
    }
    const Letter banned = letters.back().inverse();
    const std::size_t banned_code = banned.generator * 2 + (banned.sign > 0 ? 0 : 1);
    std::size_t code = next(rng);
    if (code >= banned_code) ++code;
    letters.push_back(decode(code));
  }
  return reduce_word(letters);
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator < names.size() ? names[l.generator] : "g" + std::to_string(l.generator);
    if (l.sign < 0) out += '\'';
  }
  return out;
}

std::vector<Word> all_reduced_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length && rank > 0; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (int sign : {+1, -1}) {
          const Letter l{g, sign};
          if (!out[i].empty() && out[i].letters().back() == l.inverse()) continue;
          out.push_back(out[i] * Word::generator(g, sign));
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace liftspace
