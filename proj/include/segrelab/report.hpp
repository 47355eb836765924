#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>

namespace segrelab {

// Canonical key/value tree for command output.  Keys are sorted at every
// level, so two runs with the same configuration serialize byte-identically —
// except the reserved top-level "timings" section, which is quarantined at
// the very end so consumers can diff everything above it.
class report {
 public:
  report& set(const std::string& key, std::string value) {
    scalars_[key] = std::move(value);
    return *this;
  }
  report& set(const std::string& key, const char* value) {
    return set(key, std::string(value));
  }
  report& set(const std::string& key, bool value) {
    return set(key, std::string(value ? "true" : "false"));
  }
  template <class Int,
            class = std::enable_if_t<std::is_integral_v<Int> && !std::is_same_v<Int, bool>>>
  report& set(const std::string& key, Int value) {
    return set(key, std::to_string(value));
  }

  report& section(const std::string& name) {
    auto& slot = children_[name];
    if (!slot) slot = std::make_unique<report>();
    return *slot;
  }

  bool empty() const { return scalars_.empty() && children_.empty(); }

  std::string scalar(const std::string& key) const {
    auto it = scalars_.find(key);
    return it == scalars_.end() ? std::string() : it->second;
  }

  // Structured form: "key: value" lines, subsections indented two spaces,
  // sorted keys, timings last.
  std::string to_structured() const {
    std::ostringstream os;
    print(os, 0, true);
    return os.str();
  }

  // The structured form with the timings section removed; what byte-level
  // reproducibility is promised on.
  std::string deterministic_view() const {
    std::ostringstream os;
    print(os, 0, false);
    return os.str();
  }

 private:
  void print(std::ostringstream& os, int depth, bool with_timings) const {
    std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    for (const auto& [k, v] : scalars_) os << pad << k << ": " << v << '\n';
    for (const auto& [k, child] : children_) {
      if (depth == 0 && k == "timings") continue;
      os << pad << k << ":\n";
      child->print(os, depth + 1, with_timings);
    }
    if (depth == 0 && with_timings) {
      auto it = children_.find("timings");
      if (it != children_.end()) {
        os << "timings:\n";
        it->second->print(os, 1, true);
      }
    }
  }

  std::map<std::string, std::string> scalars_;
  std::map<std::string, std::unique_ptr<report>> children_;
};

}  // namespace segrelab
