#pragma once

#include <string>
#include <vector>

namespace hqg {

/// Finite quasigroup with two-sided identity, given by its Cayley table.
/// table[s][t] is the product s*t. Validated instances satisfy the Latin
/// square property (each row and column is a permutation) and the
/// identity laws.
struct Loop {
    int size = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;

    int mul(int s, int t) const { return table[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
};

struct LoopFlags {
    bool has_inverse_property = false;
    bool is_moufang = false;
    bool is_flexible = false;
    bool is_associative = false;
};

/// Validates the table and identity; throws ValidationError naming the
/// offending row/column or identity witness.
Loop validate_loop(const std::vector<std::vector<int>>& table, int identity);

/// Exhaustive classification: inverse property over all pairs, the
/// Moufang law s(t(sr)) == ((st)s)r and flexibility s(ts) == (st)s over
/// all triples/pairs, associativity over all triples.
LoopFlags classify(const Loop& loop);

/// Two-sided inverses s -> s^{-1}; requires the inverse property.
std::vector<int> inverse_map(const Loop& loop);

/// Builtin loops: "cyclic(n)", "s3", "octonion16".
///
/// octonion16 is the loop {+-1, +-e1..+-e7} generated by Cayley-Dickson
/// doubling from the reals, so the unit products e1*e2 = e3, e1*e4 = e5,
/// e2*e4 = e6, e3*e4 = e7 and all sign rules are derived rather than
/// tabulated. Element encoding: index i in 0..7 is +b_i (b_0 the
/// identity), index 8+i is -b_i.
Loop builtin_loop(const std::string& name);

} // namespace hqg
