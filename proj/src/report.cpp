#include "hqg/report.hpp"

#include <chrono>
#include <sstream>

namespace hqg {

namespace {

nlohmann::ordered_json sv_json(const SparseVec& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [i, c] : v) arr.push_back(nlohmann::ordered_json::array({i, c.str()}));
    return arr;
}

} // namespace

nlohmann::ordered_json Witness::to_json() const {
    nlohmann::ordered_json j;
    j["basis"] = basis;
    j["lhs"] = sv_json(lhs);
    j["rhs"] = sv_json(rhs);
    return j;
}

std::string Witness::str() const {
    std::ostringstream os;
    os << "at basis e" << basis << ": lhs = " << sv_str(lhs) << ", rhs = " << sv_str(rhs);
    return os.str();
}

bool Report::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

const CheckResult* Report::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

void Report::add(std::string name, bool pass, std::optional<Witness> witness, double millis) {
    results.push_back(CheckResult{std::move(name), pass, std::move(witness), millis});
}

namespace {

CheckResult compare_chains(std::string name, const Chain& lhs, const Chain& rhs) {
    const auto t0 = std::chrono::steady_clock::now();
    auto diff = chains_differ(lhs, rhs);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (diff)
        return CheckResult{std::move(name), false,
                           Witness{diff->basis, std::move(diff->lhs), std::move(diff->rhs)}, ms};
    return CheckResult{std::move(name), true, std::nullopt, ms};
}

} // namespace

void Report::add_equal(std::string name, const Chain& lhs, const Chain& rhs) {
    results.push_back(compare_chains(std::move(name), lhs, rhs));
}

void Report::add_equal_info(std::string name, const Chain& lhs, const Chain& rhs) {
    informational.push_back(compare_chains(std::move(name), lhs, rhs));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& r : other.results)
        results.push_back(CheckResult{prefix.empty() ? r.name : prefix + r.name, r.pass, r.witness, r.millis});
    for (const auto& r : other.informational)
        informational.push_back(
            CheckResult{prefix.empty() ? r.name : prefix + r.name, r.pass, r.witness, r.millis});
    for (const auto& s : other.skipped) skipped.push_back(prefix.empty() ? s : prefix + s);
}

nlohmann::ordered_json Report::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = all_pass();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        if (r.witness) e["witness"] = r.witness->to_json();
        if (with_timings) e["millis"] = r.millis;
        arr.push_back(std::move(e));
    }
    j["results"] = std::move(arr);
    if (!informational.empty()) {
        auto inf = nlohmann::ordered_json::array();
        for (const auto& r : informational) {
            nlohmann::ordered_json e;
            e["name"] = r.name;
            e["holds"] = r.pass;
            if (r.witness) e["witness"] = r.witness->to_json();
            if (with_timings) e["millis"] = r.millis;
            inf.push_back(std::move(e));
        }
        j["informational"] = std::move(inf);
    }
    if (!skipped.empty()) j["skipped"] = skipped;
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    for (const auto& r : results) {
        os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.name;
        if (!r.pass && r.witness) os << "  (" << r.witness->str() << ")";
        os << "\n";
    }
    for (const auto& r : informational) {
        os << "  [info:" << (r.pass ? "holds" : "fails") << "] " << r.name;
        if (!r.pass && r.witness) os << "  (" << r.witness->str() << ")";
        os << "\n";
    }
    for (const auto& s : skipped) os << "  [skip] " << s << "\n";
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

} // namespace hqg
