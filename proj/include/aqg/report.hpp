#pragma once

#include <optional>
#include <string>
#include <vector>

namespace aqg {

/// Outcome of one named verification check. `skip` marks checks that do not
/// apply to the instance (e.g. *-checks on a pair without involutions); a
/// skipped check never fails a report.
struct CheckResult {
    enum class Status { Pass, Fail, Skip };

    std::string id;
    Status status = Status::Pass;
    /// "exhaustive" or "sampled(n=...,seed=...)".
    std::string mode = "exhaustive";
    /// Concrete witness on failure, or a short note.
    std::string detail;

    bool passed() const { return status != Status::Fail; }
};

struct Report {
    std::vector<CheckResult> checks;

    void pass(const std::string& id, const std::string& mode = "exhaustive",
              const std::string& detail = "") {
        checks.push_back({id, CheckResult::Status::Pass, mode, detail});
    }
    void fail(const std::string& id, const std::string& witness,
              const std::string& mode = "exhaustive") {
        checks.push_back({id, CheckResult::Status::Fail, mode, witness});
    }
    void skip(const std::string& id, const std::string& why) {
        checks.push_back({id, CheckResult::Status::Skip, "exhaustive", why});
    }
    void record(const std::string& id, bool ok, const std::string& witness,
                const std::string& mode = "exhaustive") {
        if (ok)
            pass(id, mode);
        else
            fail(id, witness, mode);
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks) {
            c.id = prefix + c.id;
            checks.push_back(std::move(c));
        }
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.passed()) return c.id + ": " + c.detail;
        return "";
    }
    std::string summary() const;
};

}  // namespace aqg
