#pragma once

#include "hqg/linear_map.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace hqg {

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<Index, Rational>>;

SparseVec sv_basis(Index i);
SparseVec sv_from_dense(const std::vector<Rational>& v);
std::vector<Rational> sv_to_dense(const SparseVec& v, Index dim);
/// Sorts, merges duplicate indices, drops zeros.
void sv_normalize(SparseVec& v);
std::string sv_str(const SparseVec& v);

/// One tensor factor of a Kronecker stage: either a concrete map or an
/// identity of the given dimension.
struct Factor {
    std::shared_ptr<const LinearMap> map; // null means identity
    Index ident = 0;

    Index dom() const { return map ? map->dom_dim() : ident; }
    Index cod() const { return map ? map->cod_dim() : ident; }
};

Factor fac(std::shared_ptr<const LinearMap> m);
Factor fac(const LinearMap& m); // copies
Factor id_fac(Index n);

/// A composite linear map kept in factored form: a sequence of stages,
/// each either a Kronecker product of small maps or a permutation of
/// tensor legs. Stages apply in order (first stage acts first). Applying
/// a chain to a sparse vector never materializes the product matrix, so
/// identities on triple tensor products stay cheap even when the ambient
/// flattened space has thousands of dimensions.
class Chain {
public:
    explicit Chain(Index dim) : dom_(dim), cod_(dim) {}

    static Chain from_map(const LinearMap& m);
    static Chain from_map(std::shared_ptr<const LinearMap> m);

    Index dom() const { return dom_; }
    Index cod() const { return cod_; }

    Chain& then_kron(std::vector<Factor> factors);
    Chain& then_map(const LinearMap& m) { return then_kron({fac(m)}); }
    Chain& then_map(std::shared_ptr<const LinearMap> m) { return then_kron({fac(std::move(m))}); }
    /// Reorders tensor legs; `dims` are the current leg dimensions and
    /// output leg p is input leg perm[p].
    Chain& then_perm(std::vector<Index> dims, std::vector<int> perm);
    Chain& then_chain(const Chain& other);

    /// id_left (x) this (x) id_right. Either flank may be 1 (skipped).
    Chain flanked(Index left, Index right) const;

    SparseVec apply(const SparseVec& v) const;
    SparseVec apply_basis(Index i) const { return apply(sv_basis(i)); }

    /// Materializes the chain as a dense matrix (column by column).
    LinearMap to_matrix() const;

private:
    struct KronStage {
        std::vector<Factor> factors;
        Index dom = 1, cod = 1;
    };
    struct PermStage {
        std::vector<Index> dims;
        std::vector<int> perm;
        Index total = 1;
    };
    using Stage = std::variant<KronStage, PermStage>;

    static SparseVec apply_stage(const Stage& s, const SparseVec& v);

    Index dom_ = 0;
    Index cod_ = 0;
    std::vector<Stage> stages_;
};

/// First basis vector on which two chains disagree, with both images.
struct ChainDiff {
    Index basis = -1;
    SparseVec lhs;
    SparseVec rhs;
};

/// Compares two chains pointwise on every domain basis vector; returns
/// the first difference or nullopt when the chains are equal as maps.
std::optional<ChainDiff> chains_differ(const Chain& a, const Chain& b);

} // namespace hqg
