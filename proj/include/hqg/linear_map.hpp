#pragma once

#include "hqg/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hqg {

using Index = std::int64_t;

/// Dense matrix of exact rationals, viewed as a linear map between
/// basis-indexed spaces. Entries are stored row-major: rows index the
/// codomain, columns the domain. Tensor-product spaces are flattened
/// row-major as well: e_i (x) e_j in V (x) W with dim W = n sits at
/// flattened index i*n + j. Every module of the library uses this one
/// convention, which is what makes the tensor calculus strictly
/// associative at the matrix level.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Index cod_dim, Index dom_dim);

    static LinearMap identity(Index n);
    static LinearMap zero(Index cod_dim, Index dom_dim);
    /// 1x1 map given by a single scalar.
    static LinearMap scalar(const Rational& c);
    /// n x 1 map picking out a vector (used for units / grouplike columns).
    static LinearMap column(const std::vector<Rational>& v);
    /// 1 x n map given by a covector (used for counits).
    static LinearMap row(const std::vector<Rational>& v);

    Index dom_dim() const { return dom_; }
    Index cod_dim() const { return cod_; }

    const Rational& at(Index r, Index c) const { return entries_[static_cast<std::size_t>(r * dom_ + c)]; }
    Rational& at(Index r, Index c) { return entries_[static_cast<std::size_t>(r * dom_ + c)]; }

    bool is_identity() const;

    LinearMap transpose() const;

    std::string shape_str() const;

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    Index dom_ = 0;
    Index cod_ = 0;
    std::vector<Rational> entries_;
};

/// Exact matrix product f . g; requires f.dom_dim == g.cod_dim.
LinearMap compose(const LinearMap& f, const LinearMap& g);

/// Kronecker product f (x) g under the row-major flattening convention.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
LinearMap tensor_map(const LinearMap& f, const LinearMap& g, const LinearMap& h);

/// The flip V (x) W -> W (x) V on spaces of dimension m and n: the
/// permutation matrix sending flattened index i*n + j to j*m + i.
LinearMap swap(Index m, Index n);

/// Permutation matrix reordering tensor legs. `dims` are the input leg
/// dimensions; output leg p is input leg `perm[p]`. swap(m, n) equals
/// permute_legs({m, n}, {1, 0}).
LinearMap permute_legs(const std::vector<Index>& dims, const std::vector<int>& perm);

/// Exact matrix-vector product; requires v.size() == f.dom_dim.
std::vector<Rational> apply(const LinearMap& f, const std::vector<Rational>& v);

/// Exact inverse by rational Gauss-Jordan elimination; requires a square
/// map. Throws SingularMatrixError("not invertible") on a singular input.
LinearMap invert(const LinearMap& f);

} // namespace hqg
