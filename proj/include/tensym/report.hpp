#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tensym {

/// One named condition with the first failing witness, if any. Witnesses are
/// element indices in canonical order, so reruns produce identical reports.
struct Check {
  std::string name;
  bool pass = true;
  std::vector<int> witness;
  std::string note;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), true, {}, {}});
    return checks.back();
  }

  void fail(std::string name, std::vector<int> witness, std::string note = {}) {
    checks.push_back(Check{std::move(name), false, std::move(witness), std::move(note)});
  }

  std::string to_text() const {
    std::string out = subject.empty() ? std::string() : subject + "\n";
    for (const auto& c : checks) {
      out += c.name;
      out += c.pass ? ": pass" : ": FAIL";
      if (!c.pass && !c.witness.empty()) {
        out += " witness (";
        for (std::size_t i = 0; i < c.witness.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(c.witness[i]);
        }
        out += ")";
      }
      if (!c.note.empty()) {
        out += " [";
        out += c.note;
        out += "]";
      }
      out += "\n";
    }
    out += pass() ? "result: PASS\n" : "result: FAIL\n";
    return out;
  }
};

}  // namespace tensym
