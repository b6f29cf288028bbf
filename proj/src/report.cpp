#include "alexpoly/report.hpp"

namespace alexpoly {

void Report::render(std::ostream& os) const {
  for (const auto& c : conditions) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
    if (c.advisory) os << " (sufficiency-only)";
    if (!c.note.empty()) os << ": " << c.note;
    os << "\n";
  }
  os << "result: " << (all_pass() ? "pass" : "fail") << "\n";
}

}  // namespace alexpoly
