#pragma once

#include "hqg/chain.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hqg {

/// Counterexample data attached to a failed identity: the offending
/// domain basis vector and both evaluated sides.
struct Witness {
    Index basis = -1;
    SparseVec lhs;
    SparseVec rhs;

    nlohmann::ordered_json to_json() const;
    std::string str() const;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::optional<Witness> witness;
    double millis = 0.0; ///< wall time; excluded from canonical JSON
};

/// Outcome of a verification suite: a named list of identities with
/// pass/fail status. Serialization is deterministic: entries keep
/// insertion order and timings are never part of the canonical form.
///
/// `informational` entries record identities that are evaluated and
/// reported (with witnesses) but are not part of the pass/fail contract
/// of the suite; all_pass() ignores them.
struct Report {
    std::string suite;
    std::vector<CheckResult> results;
    std::vector<CheckResult> informational;
    std::vector<std::string> skipped;

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;

    void add(std::string name, bool pass, std::optional<Witness> witness = std::nullopt,
             double millis = 0.0);
    /// Records the outcome of a chain comparison under `name`.
    void add_equal(std::string name, const Chain& lhs, const Chain& rhs);
    void add_equal_info(std::string name, const Chain& lhs, const Chain& rhs);
    void merge(const Report& other, const std::string& prefix = "");

    nlohmann::ordered_json to_json(bool with_timings = false) const;
    std::string text() const; ///< human-readable, one line per identity
};

} // namespace hqg
