#pragma once

#include <string>
#include <vector>

namespace kgr {

struct CheckLine {
  std::string identity;
  std::string instance;
  bool ok = false;
  std::string witness;  // set when ok is false
};

struct Report {
  std::vector<CheckLine> lines;

  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
  void add(std::string identity, std::string instance, bool pass, std::string witness = "") {
    lines.push_back({std::move(identity), std::move(instance), pass, std::move(witness)});
  }
  void append(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& l : lines)
      if (!l.ok) ++n;
    return n;
  }
};

// IDENTITY <name> <instance> OK|FAIL(witness)
std::string render_line(const CheckLine& line);
std::string render_text(const Report& report);
// line-delimited JSON records
std::string render_records(const Report& report);

}  // namespace kgr
