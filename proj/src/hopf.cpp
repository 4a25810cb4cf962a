#include "hqg/hopf.hpp"

#include "hqg/errors.hpp"

#include <utility>

namespace hqg {

namespace {

void require_shapes(Index n, const LinearMap& mult, const std::vector<Rational>& unit,
                    const LinearMap& comult, const LinearMap& counit, const LinearMap& antipode) {
    if (mult.cod_dim() != n || mult.dom_dim() != n * n)
        throw DimensionError("mult must be n x n^2, got " + mult.shape_str());
    if (static_cast<Index>(unit.size()) != n) throw DimensionError("unit must have length n");
    if (comult.cod_dim() != n * n || comult.dom_dim() != n)
        throw DimensionError("comult must be n^2 x n, got " + comult.shape_str());
    if (counit.cod_dim() != 1 || counit.dom_dim() != n)
        throw DimensionError("counit must be 1 x n, got " + counit.shape_str());
    if (antipode.cod_dim() != n || antipode.dom_dim() != n)
        throw DimensionError("antipode must be n x n, got " + antipode.shape_str());
}

} // namespace

HopfQuasigroup HopfQuasigroup::unchecked(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                         LinearMap counit, LinearMap antipode) {
    const Index n = mult.cod_dim();
    require_shapes(n, mult, unit, comult, counit, antipode);
    HopfQuasigroup h;
    h.dim_ = n;
    h.mult_ = std::make_shared<LinearMap>(std::move(mult));
    h.comult_ = std::make_shared<LinearMap>(std::move(comult));
    h.unit_ = std::make_shared<LinearMap>(LinearMap::column(unit));
    h.counit_ = std::make_shared<LinearMap>(std::move(counit));
    auto s = std::make_shared<LinearMap>(std::move(antipode));
    h.antipode_inv_ = std::make_shared<LinearMap>(invert(*s)); // throws "not invertible"
    h.antipode_ = std::move(s);
    return h;
}

HopfQuasigroup HopfQuasigroup::validated(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                         LinearMap counit, LinearMap antipode) {
    HopfQuasigroup h = unchecked(std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                                 std::move(antipode));
    Report rep = check_hopf_quasigroup(h);
    for (const auto& r : rep.results)
        if (!r.pass)
            throw ValidationError("Hopf quasigroup axiom failed: " + r.name +
                                  (r.witness ? " (" + r.witness->str() + ")" : ""));
    return h;
}

bool operator==(const HopfQuasigroup& a, const HopfQuasigroup& b) {
    if (a.dim_ != b.dim_) return false;
    return *a.mult_ == *b.mult_ && *a.comult_ == *b.comult_ && *a.unit_ == *b.unit_ &&
           *a.counit_ == *b.counit_ && *a.antipode_ == *b.antipode_;
}

HopfCoquasigroup HopfCoquasigroup::unchecked(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                             LinearMap counit, LinearMap antipode) {
    const Index n = mult.cod_dim();
    require_shapes(n, mult, unit, comult, counit, antipode);
    HopfCoquasigroup h;
    h.dim_ = n;
    h.mult_ = std::make_shared<LinearMap>(std::move(mult));
    h.comult_ = std::make_shared<LinearMap>(std::move(comult));
    h.unit_ = std::make_shared<LinearMap>(LinearMap::column(unit));
    h.counit_ = std::make_shared<LinearMap>(std::move(counit));
    h.antipode_ = std::make_shared<LinearMap>(std::move(antipode));
    return h;
}

HopfCoquasigroup HopfCoquasigroup::validated(LinearMap mult, std::vector<Rational> unit, LinearMap comult,
                                             LinearMap counit, LinearMap antipode) {
    HopfCoquasigroup h = unchecked(std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                                   std::move(antipode));
    const auto rep = check_coquasigroup(h);
    for (const auto& r : rep.axioms.results)
        if (!r.pass)
            throw ValidationError("Hopf coquasigroup axiom failed: " + r.name +
                                  (r.witness ? " (" + r.witness->str() + ")" : ""));
    return h;
}

bool operator==(const HopfCoquasigroup& a, const HopfCoquasigroup& b) {
    if (a.dim_ != b.dim_) return false;
    return *a.mult_ == *b.mult_ && *a.comult_ == *b.comult_ && *a.unit_ == *b.unit_ &&
           *a.counit_ == *b.counit_ && *a.antipode_ == *b.antipode_;
}

HopfAutomorphism::HopfAutomorphism(LinearMap matrix) {
    auto m = std::make_shared<LinearMap>(std::move(matrix));
    inv_ = std::make_shared<LinearMap>(invert(*m));
    mat_ = std::move(m);
}

HopfAutomorphism::HopfAutomorphism(std::shared_ptr<const LinearMap> matrix,
                                   std::shared_ptr<const LinearMap> inverse)
    : mat_(std::move(matrix)), inv_(std::move(inverse)) {}

HopfAutomorphism HopfAutomorphism::identity(Index n) {
    auto id = std::make_shared<LinearMap>(LinearMap::identity(n));
    return HopfAutomorphism(id, id);
}

HopfAutomorphism compose(const HopfAutomorphism& a, const HopfAutomorphism& b) {
    return HopfAutomorphism(std::make_shared<LinearMap>(compose(a.matrix(), b.matrix())),
                            std::make_shared<LinearMap>(compose(b.inverse_matrix(), a.inverse_matrix())));
}

HopfQuasigroup loop_algebra(const Loop& loop) {
    if (!classify(loop).has_inverse_property) throw PreconditionError("no inverse property");
    const Index n = loop.size;
    const auto inv = inverse_map(loop);

    LinearMap mult(n, n * n);
    for (Index s = 0; s < n; ++s)
        for (Index t = 0; t < n; ++t)
            mult.at(loop.mul(static_cast<int>(s), static_cast<int>(t)), s * n + t) = 1;

    LinearMap comult(n * n, n);
    for (Index s = 0; s < n; ++s) comult.at(s * n + s, s) = 1;

    std::vector<Rational> unit(static_cast<std::size_t>(n));
    unit[static_cast<std::size_t>(loop.identity)] = 1;

    LinearMap counit(1, n);
    for (Index s = 0; s < n; ++s) counit.at(0, s) = 1;

    LinearMap antipode(n, n);
    for (Index s = 0; s < n; ++s) antipode.at(inv[static_cast<std::size_t>(s)], s) = 1;

    return HopfQuasigroup::validated(std::move(mult), std::move(unit), std::move(comult),
                                     std::move(counit), std::move(antipode));
}

namespace {

// Chain helpers shared by the axiom suites. All of them compile a
// Sweedler expression into tensor stages over the flattened bases.

Chain eps_times_id(const HopfQuasigroup& h) {
    // h (x) g -> eps(h) g
    Chain c(h.dim() * h.dim());
    c.then_kron({fac(h.counit_ptr()), id_fac(h.dim())});
    return c;
}

} // namespace

Report check_hopf_quasigroup(const HopfQuasigroup& h) {
    const Index n = h.dim();
    Report rep;
    rep.suite = "hopf-quasigroup";

    // Coassociativity and counit laws.
    {
        Chain lhs(n), rhs(n);
        lhs.then_map(h.comult_ptr()).then_kron({fac(h.comult_ptr()), id_fac(n)});
        rhs.then_map(h.comult_ptr()).then_kron({id_fac(n), fac(h.comult_ptr())});
        rep.add_equal("coassoc", lhs, rhs);
    }
    {
        Chain lhs(n);
        lhs.then_map(h.comult_ptr()).then_kron({fac(h.counit_ptr()), id_fac(n)});
        rep.add_equal("counit-left", lhs, Chain(n));
    }
    {
        Chain lhs(n);
        lhs.then_map(h.comult_ptr()).then_kron({id_fac(n), fac(h.counit_ptr())});
        rep.add_equal("counit-right", lhs, Chain(n));
    }

    // Unit laws.
    {
        Chain lhs(n);
        lhs.then_kron({fac(h.unit_ptr()), id_fac(n)}).then_map(h.mult_ptr());
        rep.add_equal("unit-left", lhs, Chain(n));
    }
    {
        Chain lhs(n);
        lhs.then_kron({id_fac(n), fac(h.unit_ptr())}).then_map(h.mult_ptr());
        rep.add_equal("unit-right", lhs, Chain(n));
    }

    // Comultiplication and counit are algebra maps.
    {
        Chain lhs(n * n), rhs(n * n);
        lhs.then_map(h.mult_ptr()).then_map(h.comult_ptr());
        rhs.then_kron({fac(h.comult_ptr()), fac(h.comult_ptr())})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({fac(h.mult_ptr()), fac(h.mult_ptr())});
        rep.add_equal("comult-mult", lhs, rhs);
    }
    {
        Chain lhs(1), rhs(1);
        lhs.then_map(h.unit_ptr()).then_map(h.comult_ptr());
        rhs.then_kron({fac(h.unit_ptr()), fac(h.unit_ptr())});
        rep.add_equal("comult-unit", lhs, rhs);
    }
    {
        Chain lhs(n * n), rhs(n * n);
        lhs.then_map(h.mult_ptr()).then_map(h.counit_ptr());
        rhs.then_kron({fac(h.counit_ptr()), fac(h.counit_ptr())});
        rep.add_equal("counit-mult", lhs, rhs);
    }
    {
        Chain lhs(1);
        lhs.then_map(h.unit_ptr()).then_map(h.counit_ptr());
        rep.add_equal("counit-unit", lhs, Chain(1));
    }

    // The four antipode cancellation laws, per basis pair (h, g).
    const Chain target = eps_times_id(h);
    {
        Chain lhs(n * n); // S(h1)(h2 g)
        lhs.then_kron({fac(h.comult_ptr()), id_fac(n)})
            .then_kron({fac(h.antipode_ptr()), id_fac(n), id_fac(n)})
            .then_kron({id_fac(n), fac(h.mult_ptr())})
            .then_map(h.mult_ptr());
        rep.add_equal("antipode-left-1", lhs, target);
    }
    {
        Chain lhs(n * n); // h1(S(h2) g)
        lhs.then_kron({fac(h.comult_ptr()), id_fac(n)})
            .then_kron({id_fac(n), fac(h.antipode_ptr()), id_fac(n)})
            .then_kron({id_fac(n), fac(h.mult_ptr())})
            .then_map(h.mult_ptr());
        rep.add_equal("antipode-left-2", lhs, target);
    }
    {
        Chain lhs(n * n); // (g S(h1)) h2
        lhs.then_kron({fac(h.comult_ptr()), id_fac(n)})
            .then_kron({fac(h.antipode_ptr()), id_fac(n), id_fac(n)})
            .then_perm({n, n, n}, {2, 0, 1})
            .then_kron({fac(h.mult_ptr()), id_fac(n)})
            .then_map(h.mult_ptr());
        rep.add_equal("antipode-right-1", lhs, target);
    }
    {
        Chain lhs(n * n); // (g h1) S(h2)
        lhs.then_kron({fac(h.comult_ptr()), id_fac(n)})
            .then_kron({id_fac(n), fac(h.antipode_ptr()), id_fac(n)})
            .then_perm({n, n, n}, {2, 0, 1})
            .then_kron({fac(h.mult_ptr()), id_fac(n)})
            .then_map(h.mult_ptr());
        rep.add_equal("antipode-right-2", lhs, target);
    }

    return rep;
}

Report antipode_properties(const HopfQuasigroup& h) {
    const Index n = h.dim();
    Report rep;
    rep.suite = "antipode-properties";
    {
        Chain lhs(n * n), rhs(n * n); // S(hg) == S(g)S(h)
        lhs.then_map(h.mult_ptr()).then_map(h.antipode_ptr());
        rhs.then_perm({n, n}, {1, 0})
            .then_kron({fac(h.antipode_ptr()), fac(h.antipode_ptr())})
            .then_map(h.mult_ptr());
        rep.add_equal("antimultiplicative", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // Delta(S(h)) == S(h2) (x) S(h1)
        lhs.then_map(h.antipode_ptr()).then_map(h.comult_ptr());
        rhs.then_map(h.comult_ptr())
            .then_kron({fac(h.antipode_ptr()), fac(h.antipode_ptr())})
            .then_perm({n, n}, {1, 0});
        rep.add_equal("anticomultiplicative", lhs, rhs);
    }
    return rep;
}

namespace {

// alpha(h1)(g beta(h2)) vs (alpha(h1) g) beta(h2), shared by the plain
// and twisted flexibility predicates.
bool twisted_flexible(const HopfQuasigroup& h, const LinearMap& alpha, const LinearMap& beta) {
    const Index n = h.dim();
    auto twisted = std::make_shared<LinearMap>(compose(tensor_map(alpha, beta), h.comult()));
    Chain lhs(n * n), rhs(n * n);
    lhs.then_kron({fac(twisted), id_fac(n)})
        .then_perm({n, n, n}, {0, 2, 1})
        .then_kron({id_fac(n), fac(h.mult_ptr())})
        .then_map(h.mult_ptr());
    rhs.then_kron({fac(twisted), id_fac(n)})
        .then_perm({n, n, n}, {0, 2, 1})
        .then_kron({fac(h.mult_ptr()), id_fac(n)})
        .then_map(h.mult_ptr());
    return !chains_differ(lhs, rhs).has_value();
}

} // namespace

HopfFlags hopf_predicates(const HopfQuasigroup& h) {
    const Index n = h.dim();
    HopfFlags flags;

    {
        Chain lhs(n * n * n), rhs(n * n * n); // h1(g(h2 f)) vs ((h1 g) h2) f
        lhs.then_kron({fac(h.comult_ptr()), id_fac(n), id_fac(n)})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({id_fac(n), id_fac(n), fac(h.mult_ptr())})
            .then_kron({id_fac(n), fac(h.mult_ptr())})
            .then_map(h.mult_ptr());
        rhs.then_kron({fac(h.comult_ptr()), id_fac(n), id_fac(n)})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({fac(h.mult_ptr()), id_fac(n), id_fac(n)})
            .then_kron({fac(h.mult_ptr()), id_fac(n)})
            .then_map(h.mult_ptr());
        flags.moufang = !chains_differ(lhs, rhs).has_value();
    }

    flags.flexible = twisted_flexible(h, LinearMap::identity(n), LinearMap::identity(n));
    return flags;
}

bool ab_flexible(const HopfQuasigroup& h, const HopfAutomorphism& alpha, const HopfAutomorphism& beta) {
    return twisted_flexible(h, alpha.matrix(), beta.matrix());
}

namespace {

HopfCoquasigroup dualize_impl(const HopfQuasigroup& h, bool validate) {
    const Index n = h.dim();
    LinearMap mult = h.comult().transpose();   // n x n^2
    LinearMap comult = h.mult().transpose();   // n^2 x n
    LinearMap unit_col = h.counit().transpose(); // n x 1
    std::vector<Rational> unit(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) unit[static_cast<std::size_t>(i)] = unit_col.at(i, 0);
    LinearMap counit = h.unit().transpose();   // 1 x n
    LinearMap antipode = h.antipode().transpose();
    return validate ? HopfCoquasigroup::validated(std::move(mult), std::move(unit), std::move(comult),
                                                  std::move(counit), std::move(antipode))
                    : HopfCoquasigroup::unchecked(std::move(mult), std::move(unit), std::move(comult),
                                                  std::move(counit), std::move(antipode));
}

} // namespace

HopfCoquasigroup dualize(const HopfQuasigroup& h) { return dualize_impl(h, true); }

HopfCoquasigroup dualize_unchecked(const HopfQuasigroup& h) { return dualize_impl(h, false); }

HopfQuasigroup dualize(const HopfCoquasigroup& h) {
    const Index n = h.dim();
    LinearMap mult = h.comult().transpose();
    LinearMap comult = h.mult().transpose();
    LinearMap unit_col = h.counit().transpose();
    std::vector<Rational> unit(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) unit[static_cast<std::size_t>(i)] = unit_col.at(i, 0);
    LinearMap counit = h.unit().transpose();
    LinearMap antipode = h.antipode().transpose();
    return HopfQuasigroup::validated(std::move(mult), std::move(unit), std::move(comult),
                                     std::move(counit), std::move(antipode));
}

CoquasigroupReport check_coquasigroup(const HopfCoquasigroup& h) {
    const Index n = h.dim();
    CoquasigroupReport out;
    Report& rep = out.axioms;
    rep.suite = "hopf-coquasigroup";

    auto mult = std::make_shared<LinearMap>(h.mult());
    auto comult = std::make_shared<LinearMap>(h.comult());
    auto unit = std::make_shared<LinearMap>(h.unit());
    auto counit = std::make_shared<LinearMap>(h.counit());
    auto antipode = std::make_shared<LinearMap>(h.antipode());

    {
        Chain lhs(n * n * n), rhs(n * n * n);
        lhs.then_kron({fac(mult), id_fac(n)}).then_map(mult);
        rhs.then_kron({id_fac(n), fac(mult)}).then_map(mult);
        rep.add_equal("mult-assoc", lhs, rhs);
    }
    {
        Chain lhs(n);
        lhs.then_kron({fac(unit), id_fac(n)}).then_map(mult);
        rep.add_equal("unit-left", lhs, Chain(n));
    }
    {
        Chain lhs(n);
        lhs.then_kron({id_fac(n), fac(unit)}).then_map(mult);
        rep.add_equal("unit-right", lhs, Chain(n));
    }
    {
        Chain lhs(n);
        lhs.then_map(comult).then_kron({fac(counit), id_fac(n)});
        rep.add_equal("counit-left", lhs, Chain(n));
    }
    {
        Chain lhs(n);
        lhs.then_map(comult).then_kron({id_fac(n), fac(counit)});
        rep.add_equal("counit-right", lhs, Chain(n));
    }
    {
        Chain lhs(n * n), rhs(n * n);
        lhs.then_map(mult).then_map(comult);
        rhs.then_kron({fac(comult), fac(comult)})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({fac(mult), fac(mult)});
        rep.add_equal("comult-mult", lhs, rhs);
    }
    {
        Chain lhs(n * n), rhs(n * n);
        lhs.then_map(mult).then_map(counit);
        rhs.then_kron({fac(counit), fac(counit)});
        rep.add_equal("counit-mult", lhs, rhs);
    }

    // The four dual antipode laws, per basis element.
    {
        Chain lhs(n), rhs(n); // S(h1) h21 (x) h22 == 1 (x) h
        lhs.then_map(comult)
            .then_kron({id_fac(n), fac(comult)})
            .then_kron({fac(antipode), id_fac(n), id_fac(n)})
            .then_kron({fac(mult), id_fac(n)});
        rhs.then_kron({fac(unit), id_fac(n)});
        rep.add_equal("coq-left-1", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // h1 S(h21) (x) h22 == 1 (x) h
        lhs.then_map(comult)
            .then_kron({id_fac(n), fac(comult)})
            .then_kron({id_fac(n), fac(antipode), id_fac(n)})
            .then_kron({fac(mult), id_fac(n)});
        rhs.then_kron({fac(unit), id_fac(n)});
        rep.add_equal("coq-left-2", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // h11 (x) S(h12) h2 == h (x) 1
        lhs.then_map(comult)
            .then_kron({fac(comult), id_fac(n)})
            .then_kron({id_fac(n), fac(antipode), id_fac(n)})
            .then_kron({id_fac(n), fac(mult)});
        rhs.then_kron({id_fac(n), fac(unit)});
        rep.add_equal("coq-right-1", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // h11 (x) h12 S(h2) == h (x) 1
        lhs.then_map(comult)
            .then_kron({fac(comult), id_fac(n)})
            .then_kron({id_fac(n), id_fac(n), fac(antipode)})
            .then_kron({id_fac(n), fac(mult)});
        rhs.then_kron({id_fac(n), fac(unit)});
        rep.add_equal("coq-right-2", lhs, rhs);
    }

    {
        Chain lhs(n), rhs(n); // h1 h22 (x) h21 == h11 h2 (x) h12
        lhs.then_map(comult)
            .then_kron({id_fac(n), fac(comult)})
            .then_perm({n, n, n}, {0, 2, 1})
            .then_kron({fac(mult), id_fac(n)});
        rhs.then_map(comult)
            .then_kron({fac(comult), id_fac(n)})
            .then_perm({n, n, n}, {0, 2, 1})
            .then_kron({fac(mult), id_fac(n)});
        out.co_flexible = !chains_differ(lhs, rhs).has_value();
    }
    {
        Chain lhs(n), rhs(n); // h1 h221 (x) h21 (x) h222 == h111 h12 (x) h112 (x) h2
        lhs.then_map(comult)
            .then_kron({id_fac(n), fac(comult)})
            .then_kron({id_fac(n), id_fac(n), fac(comult)})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({fac(mult), id_fac(n), id_fac(n)});
        rhs.then_map(comult)
            .then_kron({fac(comult), id_fac(n)})
            .then_kron({fac(comult), id_fac(n), id_fac(n)})
            .then_perm({n, n, n, n}, {0, 2, 1, 3})
            .then_kron({fac(mult), id_fac(n), id_fac(n)});
        out.co_moufang = !chains_differ(lhs, rhs).has_value();
    }

    return out;
}

HopfAutomorphism automorphism_from_loop_perm(const Loop& loop, const std::vector<int>& perm) {
    const int n = loop.size;
    if (static_cast<int>(perm.size()) != n) throw ValidationError("permutation length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw ValidationError("not a permutation of loop elements");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (perm[static_cast<std::size_t>(loop.identity)] != loop.identity)
        throw ValidationError("not a loop automorphism: identity not fixed");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (perm[static_cast<std::size_t>(loop.mul(s, t))] !=
                loop.mul(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(t)]))
                throw ValidationError("not a loop automorphism: fails at pair (" + std::to_string(s) +
                                      "," + std::to_string(t) + ")");
        }
    LinearMap m(n, n);
    for (Index s = 0; s < n; ++s) m.at(perm[static_cast<std::size_t>(s)], s) = 1;
    return HopfAutomorphism(std::move(m));
}

Report check_automorphism(const HopfQuasigroup& h, const LinearMap& candidate) {
    const Index n = h.dim();
    Report rep;
    rep.suite = "hopf-automorphism";
    if (candidate.dom_dim() != n || candidate.cod_dim() != n)
        throw DimensionError("automorphism candidate must be " + std::to_string(n) + "x" +
                             std::to_string(n) + ", got " + candidate.shape_str());

    bool invertible = true;
    try {
        (void)invert(candidate);
    } catch (const SingularMatrixError&) {
        invertible = false;
    }
    rep.add("invertible", invertible);

    auto a = std::make_shared<LinearMap>(candidate);
    {
        Chain lhs(n * n), rhs(n * n); // alpha(h g) == alpha(h) alpha(g)
        lhs.then_map(h.mult_ptr()).then_map(a);
        rhs.then_kron({fac(a), fac(a)}).then_map(h.mult_ptr());
        rep.add_equal("algebra-map", lhs, rhs);
    }
    {
        Chain lhs(1), rhs(1); // alpha(1) == 1
        lhs.then_map(h.unit_ptr()).then_map(a);
        rhs.then_map(h.unit_ptr());
        rep.add_equal("unit-preserved", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // Delta(alpha(h)) == (alpha (x) alpha) Delta(h)
        lhs.then_map(a).then_map(h.comult_ptr());
        rhs.then_map(h.comult_ptr()).then_kron({fac(a), fac(a)});
        rep.add_equal("coalgebra-map", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // eps(alpha(h)) == eps(h)
        lhs.then_map(a).then_map(h.counit_ptr());
        rhs.then_map(h.counit_ptr());
        rep.add_equal("counit-preserved", lhs, rhs);
    }
    {
        Chain lhs(n), rhs(n); // S . alpha == alpha . S
        lhs.then_map(a).then_map(h.antipode_ptr());
        rhs.then_map(h.antipode_ptr()).then_map(a);
        rep.add_equal("antipode-commutes", lhs, rhs);
    }
    return rep;
}

} // namespace hqg
