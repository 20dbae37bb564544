#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace polycoh {

// Outcome of one structural check. `witness` carries the offending basis
// element / degree when a check fails.
struct CheckResult {
    enum class Status { Pass, Fail, Skip };

    std::string id;
    Status status = Status::Pass;
    std::string witness;
    double seconds = 0.0;

    bool passed() const { return status != Status::Fail; }

    static CheckResult pass(std::string id) { return {std::move(id), Status::Pass, "", 0.0}; }
    static CheckResult fail(std::string id, std::string witness)
    {
        return {std::move(id), Status::Fail, std::move(witness), 0.0};
    }
    static CheckResult skip(std::string id, std::string why)
    {
        return {std::move(id), Status::Skip, std::move(why), 0.0};
    }

    std::string status_name() const
    {
        switch (status) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            default: return "skipped";
        }
    }

    nlohmann::ordered_json to_json(bool with_timing = false) const
    {
        nlohmann::ordered_json j;
        j["check"] = id;
        j["status"] = status_name();
        if (!witness.empty()) j["witness"] = witness;
        if (with_timing) j["seconds"] = seconds;
        return j;
    }
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }

    void merge(Report other)
    {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }

    // Reports are merged deterministically by check id.
    void sort_by_id()
    {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    }

    bool all_passed() const
    {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed(); });
    }

    long failures() const
    {
        return std::count_if(checks.begin(), checks.end(),
                             [](const CheckResult& c) { return !c.passed(); });
    }

    nlohmann::ordered_json to_json(bool with_timing = false) const
    {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) arr.push_back(c.to_json(with_timing));
        return arr;
    }
};

}  // namespace polycoh
