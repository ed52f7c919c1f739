#include "liftspace/cli/grammar.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "liftspace/error.hpp"

namespace liftspace::cli {

Word parse_word(std::string_view text, std::span<const std::string> names) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word out;
  while (in >> token) {
    if (token == "1") continue;
    const auto stop = token.find_first_of("'^");
    const std::string name = token.substr(0, stop);
    if (name.empty()) throw Error(ErrorCode::SyntaxError, "token '" + token + "' has no generator");
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw Error(ErrorCode::UnknownGenerator,
                  "unknown generator '" + name + "' (the base has " + std::to_string(names.size()) +
                      " generators)");
    long long power = 1;
    std::size_t pos = name.size();
    if (pos < token.size() && token[pos] == '\'') {
      power = -1;
      ++pos;
    }
    if (pos < token.size() && token[pos] == '^') {
      long long k = 0;
      const char* first = token.data() + pos + 1;
      const char* last = token.data() + token.size();
      const auto [p, ec] = std::from_chars(first, last, k);
      if (ec != std::errc{} || p != last || first == last)
        throw Error(ErrorCode::SyntaxError, "bad exponent in '" + token + "'");
      power *= k;
      pos = token.size();
    }
    if (pos != token.size()) throw Error(ErrorCode::SyntaxError, "cannot read token '" + token + "'");
    out = out * Word::generator(static_cast<std::uint32_t>(it - names.begin())).pow(power);
  }
  return out;
}

}  // namespace liftspace::cli
