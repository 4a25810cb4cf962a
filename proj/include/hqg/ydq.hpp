#pragma once

#include "hqg/chain.hpp"
#include "hqg/hopf.hpp"
#include "hqg/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hqg {

/// Element of the group G = Aut(H) x Aut(H) with the twisted product
///     (alpha,beta) * (gamma,delta) = (alpha gamma, delta gamma^-1 beta gamma).
/// The unit is (id,id); inverses are (alpha^-1, alpha beta^-1 alpha^-1).
struct AutPair {
    HopfAutomorphism alpha;
    HopfAutomorphism beta;

    static AutPair identity(Index n) {
        return AutPair{HopfAutomorphism::identity(n), HopfAutomorphism::identity(n)};
    }
    bool is_identity() const { return alpha.is_identity() && beta.is_identity(); }

    friend bool operator==(const AutPair& a, const AutPair& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator!=(const AutPair& a, const AutPair& b) { return !(a == b); }
};

AutPair g_mul(const AutPair& x, const AutPair& y);
AutPair g_inv(const AutPair& x);

/// Left quasimodule + right comodule over a Hopf quasigroup, labeled by a
/// component (alpha,beta) of G, satisfying the twisted compatibility law
///     rho(h.m) = h21 . m0 (x) (beta(h22) m1) alpha(S^-1(h1)).
///
/// Structure maps are kept in factored chain form so that modules built
/// by tensoring stay cheap to evaluate; dense matrices are materialized
/// lazily and only below a size threshold.
class YdqModule {
public:
    /// Builds a module from dense structure maps:
    /// action m x (n*m), coaction (m*n) x m.
    static YdqModule from_matrices(HopfQuasigroup ambient, AutPair component, LinearMap action,
                                   LinearMap coaction);
    /// Internal-style constructor from factored maps.
    static YdqModule from_chains(HopfQuasigroup ambient, AutPair component, Index mdim, Chain action,
                                 Chain coaction);

    const HopfQuasigroup& ambient() const { return ambient_; }
    Index mdim() const { return mdim_; }
    const AutPair& component() const { return comp_; }

    const Chain& action_chain() const { return action_; }
    const Chain& coaction_chain() const { return coaction_; }

    /// Dense structure maps; materialized on first use. Throws
    /// PreconditionError when the matrix would exceed the size budget.
    const LinearMap& action_matrix() const;
    const LinearMap& coaction_matrix() const;
    bool matrices_available() const;

private:
    YdqModule(HopfQuasigroup ambient, Index mdim, AutPair comp, Chain action, Chain coaction)
        : ambient_(std::move(ambient)), mdim_(mdim), comp_(std::move(comp)),
          action_(std::move(action)), coaction_(std::move(coaction)) {}

    HopfQuasigroup ambient_;
    Index mdim_ = 0;
    AutPair comp_;
    Chain action_{0};
    Chain coaction_{0};
    mutable std::shared_ptr<const LinearMap> action_mat_, coaction_mat_;
};

/// Entrywise equality of component labels and structure maps (evaluated
/// on basis vectors when matrices are not materialized).
bool ydq_equal(const YdqModule& a, const YdqModule& b);

/// Quasimodule laws: 1.m = m and h1.(S(h2).m) = eps(h) m = S(h1).(h2.m).
Report check_quasimodule(const YdqModule& m);
/// Comodule laws: coassociativity and counit.
Report check_comodule(const YdqModule& m);

struct CompatReport {
    /// rho(h.m) = h21.m0 (x) (beta(h22) m1) alpha(S^-1(h1))
    bool antipode_form = false;
    /// h1.m0 (x) beta(h2) m1 = (h2.m)0 (x) (h2.m)1 alpha(h1)
    bool shifted_form = false;
    std::optional<Witness> antipode_witness;
    std::optional<Witness> shifted_witness;

    Report to_report() const;
};
/// Both equivalent forms of the Yetter-Drinfeld compatibility law.
CompatReport check_compat(const YdqModule& m);

/// Everything: quasimodule + comodule + both compatibility forms.
Report check_module(const YdqModule& m);

/// The two quasi-comodule conditions (statements about the coaction
/// alone, meaningful in any component):
///     m0 (x) m1(hg) = m0 (x) (m1 h)g  and  m0 (x) h(m1 g) = m0 (x) (h m1)g.
/// Over an associative ambient algebra they hold automatically; over a
/// nonassociative one they can fail (e.g. for the regular coaction of a
/// nonassociative loop algebra), and the hexagon laws are only
/// guaranteed where they hold.
Report check_quasi_comodule(const YdqModule& m);

/// Untwisted Yetter-Drinfeld quasimodule laws, for component (id,id):
/// the plain compatibility plus the two quasi-comodule conditions.
Report check_plain_ydq(const YdqModule& m);

/// The canonical module: H itself with regular coaction rho = Delta and
/// twisted action h.h' = (beta(h2) h') alpha(S^-1(h1)). Requires the
/// twisted flexibility law; throws PreconditionError otherwise.
YdqModule make_canonical(const HopfQuasigroup& h, const HopfAutomorphism& alpha,
                         const HopfAutomorphism& beta);

/// The monoidal unit: the base field with trivial action eps and
/// coaction 1 -> 1 (x) 1_H, in component (id,id).
YdqModule unit_module(const HopfQuasigroup& h);

/// Tensor product with component (alpha,beta)*(gamma,delta), action
/// h.(m (x) n) = gamma(h1).m (x) gamma^-1 beta gamma(h2).n and coaction
/// m (x) n -> (m0 (x) n0) (x) n1 m1.
YdqModule tensor_ydq(const YdqModule& m, const YdqModule& n);

/// Conjugation functor: same space, action h |> n = gamma^-1 beta gamma
/// alpha^-1(h).n, coaction n -> n0 (x) alpha beta^-1(n1), component
/// x * comp(N) * x^-1.
YdqModule conjugate(const YdqModule& n, const AutPair& x);

/// The braiding c_{M,N}: M (x) N -> ^M N (x) M,
///     m (x) n -> n0 (x) beta^-1(n1).m,
/// and its inverse n (x) m -> beta^-1(S(n1)).m (x) n0.
Chain braiding_chain(const YdqModule& m, const YdqModule& n);
Chain braiding_inverse_chain(const YdqModule& m, const YdqModule& n);
LinearMap braiding(const YdqModule& m, const YdqModule& n);
LinearMap braiding_inverse(const YdqModule& m, const YdqModule& n);

/// c is a morphism in the category: H-linear and H-colinear for the
/// tensor structures on M (x) N and ^M N (x) M.
Report verify_braiding_morphism(const YdqModule& m, const YdqModule& n);

/// Both hexagon laws:
///     c_{M(x)N,P} = (c_{M,^NP} (x) id_N) . (id_M (x) c_{N,P})
///     c_{M,N(x)P} = (id_{^MN} (x) c_{M,P}) . (c_{M,N} (x) id_P)
Report verify_hexagons(const YdqModule& m, const YdqModule& n, const YdqModule& p);

/// Morphism of the category: an H-linear, H-colinear map between modules
/// in the same component.
struct YdqMorphism {
    const YdqModule* src = nullptr;
    const YdqModule* dst = nullptr;
    LinearMap map;
};

/// Is the map H-linear and H-colinear (and the components equal)?
bool is_ydq_morphism(const YdqMorphism& f);

/// Basis of the space of module morphisms src -> dst, found by solving
/// the exact linear system {H-linear, H-colinear}.
std::vector<LinearMap> solve_morphism_space(const YdqModule& src, const YdqModule& dst);

/// Naturality square of the braiding: ((g) (x) f) . c_{M,N} == c_{M',N'} . (f (x) g).
bool verify_naturality(const YdqMorphism& f, const YdqMorphism& g);

/// Conjugation-compatibility of the braiding: the braiding of the pair
/// conjugated by x equals the original braiding on the same underlying
/// spaces.
bool verify_phi_braiding(const YdqModule& m, const YdqModule& n, const AutPair& x);

struct TCategoryOptions {
    Index max_dim = 16;          ///< refuse base modules larger than this
    std::uint64_t seed = 1;      ///< RNG seed for morphism sampling
    int naturality_samples = 5;  ///< nontrivial morphisms to sample
    bool include_unit = true;    ///< append the unit module to the corpus
    /// Hexagon identities count toward pass/fail only for triples of
    /// modules that satisfy the quasi-comodule conditions; on other
    /// triples the outcome is reported informationally, witnesses
    /// included. Setting this promotes every hexagon to a hard check.
    bool strict_hexagons = false;
    std::vector<std::string> suites; ///< empty = all
};

/// Master suite: group laws of G on the supplied elements, tensor
/// grading, conjugation functoriality, compatibility closure, braiding
/// bijectivity and morphism properties, hexagons within budget,
/// naturality on solved morphisms, and conjugation compatibility.
Report verify_t_category(const HopfQuasigroup& h, const std::vector<YdqModule>& modules,
                         const std::vector<AutPair>& gens, const TCategoryOptions& opts = {});

} // namespace hqg
