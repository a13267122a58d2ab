#pragma once

#include <string>
#include <vector>

namespace duplicial {

// One named axiom or identity with its outcome. `witness` is filled on failure.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  // First failing entry, for terse messages.
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
    return {};
  }
};

}  // namespace duplicial
