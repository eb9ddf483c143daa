#include "aqg/report.hpp"

#include <sstream>

namespace aqg {

std::string Report::summary() const {
    size_t pass = 0, fail = 0, skip = 0;
    for (const auto& c : checks) {
        if (c.status == CheckResult::Status::Pass) ++pass;
        if (c.status == CheckResult::Status::Fail) ++fail;
        if (c.status == CheckResult::Status::Skip) ++skip;
    }
    std::ostringstream os;
    os << pass << " passed, " << fail << " failed";
    if (skip) os << ", " << skip << " skipped";
    if (fail) os << " (first: " << first_failure() << ")";
    return os.str();
}

}  // namespace aqg
