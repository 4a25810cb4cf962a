#include "hqg/linear_map.hpp"

#include "hqg/errors.hpp"

#include <numeric>
#include <sstream>

namespace hqg {

LinearMap::LinearMap(Index cod_dim, Index dom_dim) : dom_(dom_dim), cod_(cod_dim) {
    if (dom_ < 0 || cod_ < 0) throw DimensionError("negative dimension");
    entries_.assign(static_cast<std::size_t>(dom_ * cod_), Rational());
}

LinearMap LinearMap::identity(Index n) {
    LinearMap m(n, n);
    for (Index i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LinearMap LinearMap::zero(Index cod_dim, Index dom_dim) { return LinearMap(cod_dim, dom_dim); }

LinearMap LinearMap::scalar(const Rational& c) {
    LinearMap m(1, 1);
    m.at(0, 0) = c;
    return m;
}

LinearMap LinearMap::column(const std::vector<Rational>& v) {
    LinearMap m(static_cast<Index>(v.size()), 1);
    for (Index i = 0; i < m.cod_dim(); ++i) m.at(i, 0) = v[static_cast<std::size_t>(i)];
    return m;
}

LinearMap LinearMap::row(const std::vector<Rational>& v) {
    LinearMap m(1, static_cast<Index>(v.size()));
    for (Index j = 0; j < m.dom_dim(); ++j) m.at(0, j) = v[static_cast<std::size_t>(j)];
    return m;
}

bool LinearMap::is_identity() const {
    if (dom_ != cod_) return false;
    for (Index r = 0; r < cod_; ++r)
        for (Index c = 0; c < dom_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

LinearMap LinearMap::transpose() const {
    LinearMap t(dom_, cod_);
    for (Index r = 0; r < cod_; ++r)
        for (Index c = 0; c < dom_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::string LinearMap::shape_str() const {
    std::ostringstream os;
    os << cod_ << "x" << dom_;
    return os.str();
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.dom_dim() != g.cod_dim())
        throw DimensionError("compose: shape mismatch " + f.shape_str() + " . " + g.shape_str());
    LinearMap out(f.cod_dim(), g.dom_dim());
    // Skip zero entries of f; structure-constant matrices are mostly zeros.
    for (Index r = 0; r < f.cod_dim(); ++r)
        for (Index k = 0; k < f.dom_dim(); ++k) {
            const Rational& frk = f.at(r, k);
            if (frk.is_zero()) continue;
            for (Index c = 0; c < g.dom_dim(); ++c) {
                const Rational& gkc = g.at(k, c);
                if (gkc.is_zero()) continue;
                out.at(r, c) += frk * gkc;
            }
        }
    return out;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) {
    LinearMap out(f.cod_dim() * g.cod_dim(), f.dom_dim() * g.dom_dim());
    for (Index rf = 0; rf < f.cod_dim(); ++rf)
        for (Index cf = 0; cf < f.dom_dim(); ++cf) {
            const Rational& a = f.at(rf, cf);
            if (a.is_zero()) continue;
            for (Index rg = 0; rg < g.cod_dim(); ++rg)
                for (Index cg = 0; cg < g.dom_dim(); ++cg) {
                    const Rational& b = g.at(rg, cg);
                    if (b.is_zero()) continue;
                    out.at(rf * g.cod_dim() + rg, cf * g.dom_dim() + cg) = a * b;
                }
        }
    return out;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g, const LinearMap& h) {
    return tensor_map(tensor_map(f, g), h);
}

LinearMap swap(Index m, Index n) {
    if (m < 0 || n < 0) throw DimensionError("swap: negative dimension");
    LinearMap out(m * n, m * n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) out.at(j * m + i, i * n + j) = 1;
    return out;
}

LinearMap permute_legs(const std::vector<Index>& dims, const std::vector<int>& perm) {
    const auto k = dims.size();
    if (perm.size() != k) throw DimensionError("permute_legs: perm/dims length mismatch");
    std::vector<bool> seen(k, false);
    Index total = 1;
    for (auto d : dims) {
        if (d < 0) throw DimensionError("permute_legs: negative dimension");
        total *= d;
    }
    std::vector<Index> out_dims(k);
    for (std::size_t p = 0; p < k; ++p) {
        const int src = perm[p];
        if (src < 0 || static_cast<std::size_t>(src) >= k || seen[static_cast<std::size_t>(src)])
            throw DimensionError("permute_legs: not a permutation");
        seen[static_cast<std::size_t>(src)] = true;
        out_dims[p] = dims[static_cast<std::size_t>(src)];
    }

    LinearMap out(total, total);
    std::vector<Index> x(k, 0);
    for (Index in = 0; in < total; ++in) {
        // Decompose `in` into leg indices (row-major, last leg fastest).
        Index rem = in;
        for (std::size_t l = k; l-- > 0;) {
            x[l] = dims[l] == 0 ? 0 : rem % dims[l];
            rem = dims[l] == 0 ? rem : rem / dims[l];
        }
        Index o = 0;
        for (std::size_t p = 0; p < k; ++p) o = o * out_dims[p] + x[static_cast<std::size_t>(perm[p])];
        out.at(o, in) = 1;
    }
    return out;
}

std::vector<Rational> apply(const LinearMap& f, const std::vector<Rational>& v) {
    if (static_cast<Index>(v.size()) != f.dom_dim())
        throw DimensionError("apply: vector length " + std::to_string(v.size()) + " vs map " + f.shape_str());
    std::vector<Rational> out(static_cast<std::size_t>(f.cod_dim()));
    for (Index r = 0; r < f.cod_dim(); ++r) {
        Rational acc;
        for (Index c = 0; c < f.dom_dim(); ++c) {
            const Rational& e = f.at(r, c);
            if (!e.is_zero()) acc += e * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

LinearMap invert(const LinearMap& f) {
    if (f.dom_dim() != f.cod_dim())
        throw DimensionError("invert: non-square map " + f.shape_str());
    const Index n = f.dom_dim();
    LinearMap a = f;
    LinearMap inv = LinearMap::identity(n);
    for (Index col = 0; col < n; ++col) {
        Index pivot = -1;
        for (Index r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrixError("not invertible");
        if (pivot != col) {
            for (Index c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        const Rational p = a.at(col, col).inverse();
        for (Index c = 0; c < n; ++c) {
            a.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (Index r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const Rational factor = a.at(r, col);
            for (Index c = 0; c < n; ++c) {
                a.at(r, c) -= factor * a.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

} // namespace hqg
