#pragma once

#include <span>
#include <string>
#include <string_view>

#include "liftspace/word.hpp"

namespace liftspace::cli {

/// Whitespace-separated tokens `x`, `x'`, `x^k`, `x'^k` (k may be negative)
/// over the generator names; `1` and blank text are the identity.
/// Throws SyntaxError or UnknownGenerator.
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace liftspace::cli
