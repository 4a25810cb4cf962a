#pragma once

#include "hqg/chain.hpp"
#include "hqg/linear_map.hpp"
#include "hqg/loop.hpp"
#include "hqg/report.hpp"

#include <memory>
#include <vector>

namespace hqg {

/// Finite-dimensional Hopf quasigroup given by structure constants:
/// a unital (possibly nonassociative) algebra with a coassociative
/// comultiplication and counit that are algebra maps, and an antipode S
/// satisfying the four cancellation laws
///     S(h1)(h2 g) = eps(h) g = h1(S(h2) g),
///     (g S(h1)) h2 = g eps(h) = (g h1) S(h2).
/// The antipode must be bijective; its inverse is computed once at
/// construction and cached.
///
/// Shapes (dim n): mult n x n^2, comult n^2 x n, unit n x 1,
/// counit 1 x n, antipode n x n. Cheap to copy (structure is shared).
class HopfQuasigroup {
public:
    /// Validates shapes and the full axiom suite; throws ValidationError
    /// naming the first failed identity.
    static HopfQuasigroup validated(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                    LinearMap counit, LinearMap antipode);
    /// Validates shapes only. Exists so test suites can build broken
    /// structures on purpose. Still requires an invertible antipode.
    static HopfQuasigroup unchecked(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                    LinearMap counit, LinearMap antipode);

    Index dim() const { return dim_; }

    const LinearMap& mult() const { return *mult_; }
    const LinearMap& comult() const { return *comult_; }
    const LinearMap& unit() const { return *unit_; }       ///< n x 1
    const LinearMap& counit() const { return *counit_; }   ///< 1 x n
    const LinearMap& antipode() const { return *antipode_; }
    const LinearMap& antipode_inv() const { return *antipode_inv_; }

    std::shared_ptr<const LinearMap> mult_ptr() const { return mult_; }
    std::shared_ptr<const LinearMap> comult_ptr() const { return comult_; }
    std::shared_ptr<const LinearMap> unit_ptr() const { return unit_; }
    std::shared_ptr<const LinearMap> counit_ptr() const { return counit_; }
    std::shared_ptr<const LinearMap> antipode_ptr() const { return antipode_; }
    std::shared_ptr<const LinearMap> antipode_inv_ptr() const { return antipode_inv_; }

    friend bool operator==(const HopfQuasigroup& a, const HopfQuasigroup& b);
    friend bool operator!=(const HopfQuasigroup& a, const HopfQuasigroup& b) { return !(a == b); }

private:
    HopfQuasigroup() = default;

    Index dim_ = 0;
    std::shared_ptr<const LinearMap> mult_, comult_, unit_, counit_, antipode_, antipode_inv_;
};

/// Dual structure: associative unital algebra, counital (possibly
/// non-coassociative) coalgebra, with the dual antipode laws.
class HopfCoquasigroup {
public:
    static HopfCoquasigroup validated(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                      LinearMap counit, LinearMap antipode);
    static HopfCoquasigroup unchecked(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                      LinearMap counit, LinearMap antipode);

    Index dim() const { return dim_; }
    const LinearMap& mult() const { return *mult_; }
    const LinearMap& comult() const { return *comult_; }
    const LinearMap& unit() const { return *unit_; }
    const LinearMap& counit() const { return *counit_; }
    const LinearMap& antipode() const { return *antipode_; }

    friend bool operator==(const HopfCoquasigroup& a, const HopfCoquasigroup& b);

private:
    HopfCoquasigroup() = default;

    Index dim_ = 0;
    std::shared_ptr<const LinearMap> mult_, comult_, unit_, counit_, antipode_;
};

/// Hopf quasigroup automorphism: an invertible linear map that is an
/// algebra map, a coalgebra map, and commutes with the antipode. The
/// inverse matrix is cached.
class HopfAutomorphism {
public:
    HopfAutomorphism() = default;
    /// Wraps a matrix, computing and caching its inverse. Does not check
    /// the morphism laws; see check_automorphism.
    explicit HopfAutomorphism(LinearMap matrix);
    HopfAutomorphism(std::shared_ptr<const LinearMap> matrix, std::shared_ptr<const LinearMap> inverse);

    static HopfAutomorphism identity(Index n);

    const LinearMap& matrix() const { return *mat_; }
    const LinearMap& inverse_matrix() const { return *inv_; }
    std::shared_ptr<const LinearMap> matrix_ptr() const { return mat_; }
    std::shared_ptr<const LinearMap> inverse_ptr() const { return inv_; }

    HopfAutomorphism inverse() const { return HopfAutomorphism(inv_, mat_); }
    bool is_identity() const { return mat_->is_identity(); }

    friend bool operator==(const HopfAutomorphism& a, const HopfAutomorphism& b) {
        return *a.mat_ == *b.mat_;
    }
    friend bool operator!=(const HopfAutomorphism& a, const HopfAutomorphism& b) { return !(a == b); }

private:
    std::shared_ptr<const LinearMap> mat_, inv_;
};

/// Composition a . b (apply b first), reusing the cached inverses.
HopfAutomorphism compose(const HopfAutomorphism& a, const HopfAutomorphism& b);

/// Linearisation of an inverse-property loop: basis indexed by loop
/// elements, grouplike comultiplication, antipode from loop inverses.
/// Throws PreconditionError("no inverse property") otherwise.
HopfQuasigroup loop_algebra(const Loop& loop);

/// The full axiom suite as exact identities; failures carry witnesses.
Report check_hopf_quasigroup(const HopfQuasigroup& h);

/// Antimultiplicativity S(hg) = S(g)S(h) and anticomultiplicativity
/// Delta(S(h)) = S(h2) (x) S(h1) as exact map equalities.
Report antipode_properties(const HopfQuasigroup& h);

struct HopfFlags {
    bool moufang = false;  ///< h1(g(h2 f)) == ((h1 g) h2) f
    bool flexible = false; ///< h1(g h2) == (h1 g) h2
};
HopfFlags hopf_predicates(const HopfQuasigroup& h);

/// The twisted flexibility law alpha(h1)(g beta(h2)) == (alpha(h1) g) beta(h2).
bool ab_flexible(const HopfQuasigroup& h, const HopfAutomorphism& alpha, const HopfAutomorphism& beta);

/// Transposes all five structure maps onto the dual basis.
HopfCoquasigroup dualize(const HopfQuasigroup& h);
/// Same transposition without running the axiom suite, so reports can be
/// produced for deliberately broken structures.
HopfCoquasigroup dualize_unchecked(const HopfQuasigroup& h);
/// Transposing back: the double dual returns the original structure
/// entrywise.
HopfQuasigroup dualize(const HopfCoquasigroup& h);

struct CoquasigroupReport {
    Report axioms;          ///< algebra/coalgebra laws + four antipode identities
    bool co_flexible = false;
    bool co_moufang = false;
};
CoquasigroupReport check_coquasigroup(const HopfCoquasigroup& h);

/// Linear extension of a Cayley-table automorphism of `loop` to its loop
/// algebra. Throws ValidationError("not a loop automorphism ...") with a
/// witness pair if the permutation does not preserve the table.
HopfAutomorphism automorphism_from_loop_perm(const Loop& loop, const std::vector<int>& perm);

/// Named checks: invertibility, algebra map, unit/counit preservation,
/// coalgebra map, and commutation with the antipode.
Report check_automorphism(const HopfQuasigroup& h, const LinearMap& candidate);

} // namespace hqg
