#pragma once

// Shared verdict vocabulary for every checker: pass / fail with witnesses /
// inconclusive (a degree-truncated reduction could not decide).

#include <string>
#include <utility>
#include <vector>

namespace hopfeq {

enum class Status { pass, fail, inconclusive };

struct Witness {
    std::string location;
    std::string expected;
    std::string actual;
};

struct Verdict {
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::string detail;

    static Verdict pass(std::string detail = "") { return Verdict{Status::pass, {}, std::move(detail)}; }

    static Verdict fail(Witness w, std::string detail = "") {
        return Verdict{Status::fail, {std::move(w)}, std::move(detail)};
    }

    static Verdict inconclusive(std::string detail, std::vector<Witness> ws = {}) {
        return Verdict{Status::inconclusive, std::move(ws), std::move(detail)};
    }

    bool ok() const { return status == Status::pass; }

    // fail dominates inconclusive dominates pass; witnesses accumulate
    void merge(const Verdict& o) {
        if (o.status == Status::fail)
            status = Status::fail;
        else if (o.status == Status::inconclusive && status != Status::fail)
            status = Status::inconclusive;
        witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
        if (!o.detail.empty()) {
            if (!detail.empty()) detail += "; ";
            detail += o.detail;
        }
    }

    std::string status_str() const {
        switch (status) {
            case Status::pass: return "pass";
            case Status::fail: return "fail";
            default: return "inconclusive";
        }
    }

    std::string summary() const {
        std::string s = status_str();
        if (!detail.empty()) s += " (" + detail + ")";
        for (const auto& w : witnesses)
            s += "\n  at " + w.location + ": expected " + w.expected + ", got " + w.actual;
        return s;
    }
};

}  // namespace hopfeq
