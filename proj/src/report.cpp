#include "liftspace/report.hpp"

#include <algorithm>

namespace liftspace {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

const CheckEntry* Report::find(std::string_view name) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const CheckEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

}  // namespace liftspace
