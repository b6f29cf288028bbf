// Structured pass/fail reports for validators.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alexpoly {

struct Condition {
  std::string id;
  bool pass = false;
  bool advisory = false;  // reported but never fails the aggregate
  std::string note;
};

struct Report {
  std::vector<Condition> conditions;

  void add(const std::string& id, bool pass, const std::string& note = "") {
    conditions.push_back({id, pass, false, note});
  }
  void add_advisory(const std::string& id, bool pass,
                    const std::string& note = "") {
    conditions.push_back({id, pass, true, note});
  }
  bool all_pass() const {
    for (const auto& c : conditions) {
      if (!c.advisory && !c.pass) return false;
    }
    return true;
  }
  void render(std::ostream& os) const;
};

}  // namespace alexpoly
