#include "hqg/loop.hpp"

#include "hqg/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace hqg {

Loop validate_loop(const std::vector<std::vector<int>>& table, int identity) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw ValidationError("empty Cayley table");
    for (int r = 0; r < n; ++r)
        if (static_cast<int>(table[static_cast<std::size_t>(r)].size()) != n)
            throw ValidationError("Cayley table is not square at row " + std::to_string(r));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= n)
                throw ValidationError("table entry out of range at (" + std::to_string(r) + "," +
                                      std::to_string(c) + ")");
        }
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (int c = 0; c < n; ++c) {
            const int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(v)])
                throw ValidationError("not a Latin square: repeated entry in row " + std::to_string(r));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (int r = 0; r < n; ++r) {
            const int v = table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(v)])
                throw ValidationError("not a Latin square: repeated entry in column " + std::to_string(c));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    if (identity < 0 || identity >= n) throw ValidationError("identity index out of range");
    for (int x = 0; x < n; ++x) {
        if (table[static_cast<std::size_t>(identity)][static_cast<std::size_t>(x)] != x ||
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(identity)] != x)
            throw ValidationError("identity fails at element " + std::to_string(x));
    }
    return Loop{n, table, identity};
}

LoopFlags classify(const Loop& loop) {
    const int n = loop.size;
    LoopFlags f;

    // Inverse property: each s needs a single two-sided inverse with
    // s^{-1}(st) == t and (ts)s^{-1} == t for every t.
    f.has_inverse_property = true;
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n && f.has_inverse_property; ++s) {
        int candidate = -1;
        for (int x = 0; x < n; ++x) {
            if (loop.mul(x, s) == loop.identity && loop.mul(s, x) == loop.identity) {
                candidate = x;
                break;
            }
        }
        if (candidate < 0) {
            f.has_inverse_property = false;
            break;
        }
        for (int t = 0; t < n; ++t) {
            if (loop.mul(candidate, loop.mul(s, t)) != t || loop.mul(loop.mul(t, s), candidate) != t) {
                f.has_inverse_property = false;
                break;
            }
        }
        inv[static_cast<std::size_t>(s)] = candidate;
    }

    f.is_flexible = true;
    for (int s = 0; s < n && f.is_flexible; ++s)
        for (int t = 0; t < n; ++t)
            if (loop.mul(s, loop.mul(t, s)) != loop.mul(loop.mul(s, t), s)) {
                f.is_flexible = false;
                break;
            }

    f.is_moufang = true;
    for (int s = 0; s < n && f.is_moufang; ++s)
        for (int t = 0; t < n && f.is_moufang; ++t)
            for (int r = 0; r < n; ++r)
                if (loop.mul(s, loop.mul(t, loop.mul(s, r))) !=
                    loop.mul(loop.mul(loop.mul(s, t), s), r)) {
                    f.is_moufang = false;
                    break;
                }

    f.is_associative = true;
    for (int s = 0; s < n && f.is_associative; ++s)
        for (int t = 0; t < n && f.is_associative; ++t)
            for (int r = 0; r < n; ++r)
                if (loop.mul(s, loop.mul(t, r)) != loop.mul(loop.mul(s, t), r)) {
                    f.is_associative = false;
                    break;
                }

    return f;
}

std::vector<int> inverse_map(const Loop& loop) {
    if (!classify(loop).has_inverse_property) throw PreconditionError("no inverse property");
    const int n = loop.size;
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < n; ++x)
            if (loop.mul(x, s) == loop.identity && loop.mul(s, x) == loop.identity) {
                inv[static_cast<std::size_t>(s)] = x;
                break;
            }
    return inv;
}

namespace {

Loop cyclic_loop(int n) {
    if (n <= 0) throw ValidationError("cyclic(n) needs n >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return validate_loop(t, 0);
}

// Elements of S3 as the permutations of {0,1,2} in lexicographic order of
// their one-line notation; the identity permutation comes first. The
// product s*t is the composition "apply t, then s".
Loop s3_loop() {
    std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[static_cast<std::size_t>(i)] == p) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x)
                comp[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(comp);
        }
    return validate_loop(t, 0);
}

// Signed basis element of a Cayley-Dickson algebra: sign * b_idx.
struct Signed {
    int sign;
    int idx;
};

// Multiplication and conjugation on signed basis elements of the
// dimension-2^k Cayley-Dickson algebra, defined recursively via
//   (a, b) * (c, d) = (a c - conj(d) b, d a + b conj(c))
// with conjugation (a, b)* = (conj(a), -b). Basis index i at level k
// splits as (hi = i >> (k-1), lo = i & mask): hi selects the doubling
// component. All products of basis elements are again signed basis
// elements, so the 2^k-element sign table is exact.
Signed cd_conj(int k, Signed x) {
    if (k == 0) return x;
    if (x.idx == 0) return x;
    return Signed{-x.sign, x.idx};
}

Signed cd_mul(int k, Signed x, Signed y) {
    if (k == 0) return Signed{x.sign * y.sign, 0};
    const int half = 1 << (k - 1);
    const int xh = x.idx / half;
    const int yh = y.idx / half;
    const Signed xlow{x.sign, x.idx % half};
    const Signed ylow{y.sign, y.idx % half};
    if (xh == 0 && yh == 0) {
        return cd_mul(k - 1, xlow, ylow); // a*c stays in the lower half
    }
    if (xh == 0 && yh == 1) {
        // (a,0)*(0,d) = (0, d a)
        Signed r = cd_mul(k - 1, ylow, xlow);
        return Signed{r.sign, r.idx + half};
    }
    if (xh == 1 && yh == 0) {
        // (0,b)*(c,0) = (0, b conj(c))
        Signed r = cd_mul(k - 1, xlow, cd_conj(k - 1, ylow));
        return Signed{r.sign, r.idx + half};
    }
    // (0,b)*(0,d) = (-conj(d) b, 0)
    Signed r = cd_mul(k - 1, cd_conj(k - 1, ylow), xlow);
    return Signed{-r.sign, r.idx};
}

// The 16-element octonion basis loop. Index encoding: 0..7 = +b_i,
// 8..15 = -b_i, with b_0 = 1.
Loop octonion16_loop() {
    auto encode = [](Signed s) { return (s.sign > 0 ? 0 : 8) + s.idx; };
    auto decode = [](int e) { return Signed{e < 8 ? 1 : -1, e % 8}; };
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                encode(cd_mul(3, decode(i), decode(j)));
    return validate_loop(t, 0);
}

} // namespace

Loop builtin_loop(const std::string& name) {
    if (name == "s3") return s3_loop();
    if (name == "octonion16") return octonion16_loop();
    if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(7, name.size() - 8);
        try {
            return cyclic_loop(std::stoi(arg));
        } catch (const std::invalid_argument&) {
            throw ValidationError("bad cyclic(n) argument: '" + arg + "'");
        } catch (const std::out_of_range&) {
            throw ValidationError("bad cyclic(n) argument: '" + arg + "'");
        }
    }
    throw ValidationError("unknown builtin loop '" + name + "' (try cyclic(n), s3, octonion16)");
}

} // namespace hqg
