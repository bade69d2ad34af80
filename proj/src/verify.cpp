#include "enbc/verify.hpp"

#include <iomanip>
#include <sstream>

namespace enbc {

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : r.checks) {
        const char* tag = c.status == CheckResult::Status::Pass   ? "PASS"
                          : c.status == CheckResult::Status::Fail ? "FAIL"
                                                                  : "SKIP";
        (c.status == CheckResult::Status::Pass   ? pass
         : c.status == CheckResult::Status::Fail ? fail
                                                 : skip)++;
        os << '[' << tag << "] " << c.name << " (" << std::fixed << std::setprecision(3)
           << c.seconds << "s)\n";
        if (c.status == CheckResult::Status::Fail) {
            if (!c.expected.empty()) os << "       expected: " << c.expected << '\n';
            if (!c.actual.empty()) os << "       actual:   " << c.actual << '\n';
            if (!c.note.empty()) os << "       note:     " << c.note << '\n';
        } else if (c.status == CheckResult::Status::Skip && !c.note.empty()) {
            os << "       reason: " << c.note << '\n';
        }
    }
    os << r.arrangement << ": " << pass << '/' << r.checks.size() << " checks passed";
    if (skip) os << " (" << skip << " skipped)";
    os << '\n';
    return os.str();
}

} // namespace enbc
