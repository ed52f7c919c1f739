#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace liftspace {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

/// Ordered verification results. Failures are entries, never exceptions.
struct Report {
  static constexpr int kSchemaVersion = 1;

  std::vector<CheckEntry> entries;

  void add(std::string name, CheckStatus status, std::string witness = {}) {
    entries.push_back({std::move(name), status, std::move(witness)});
  }
  void pass(std::string name, std::string witness = {}) {
    add(std::move(name), CheckStatus::Pass, std::move(witness));
  }
  void fail(std::string name, std::string witness) {
    add(std::move(name), CheckStatus::Fail, std::move(witness));
  }
  void skip(std::string name, std::string witness) {
    add(std::move(name), CheckStatus::Skip, std::move(witness));
  }
  void check(std::string name, bool ok, std::string witness) {
    add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness));
  }

  std::size_t count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
  const CheckEntry* find(std::string_view name) const;
};

}  // namespace liftspace
