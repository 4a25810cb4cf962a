// Acceptance suite: runs every contract criterion end to end and prints
// one PASS/FAIL line per criterion. Exit code 0 iff all pass. All checks
// are exact; the only numeric thresholds are wall-clock budgets.

#include "hqg/errors.hpp"
#include "hqg/hopf.hpp"
#include "hqg/json_io.hpp"
#include "hqg/loop.hpp"
#include "hqg/ydq.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hqg;

namespace {

const std::string kCli = HQG_CLI_PATH;
const std::string kConfigs = HQG_CONFIG_DIR;

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> body;
    double budget_seconds; // 0 = no budget
};

HopfAutomorphism s3_conj(const Loop& s3, const std::vector<int>& inv, int g) {
    std::vector<int> p(6);
    for (int x = 0; x < 6; ++x)
        p[static_cast<std::size_t>(x)] = s3.mul(s3.mul(g, x), inv[static_cast<std::size_t>(g)]);
    return automorphism_from_loop_perm(s3, p);
}

YdqModule twist_coaction(const YdqModule& m, const HopfAutomorphism& a) {
    const LinearMap coaction =
        compose(tensor_map(LinearMap::identity(m.mdim()), a.matrix()), m.coaction_matrix());
    return YdqModule::from_matrices(m.ambient(), m.component(), m.action_matrix(), coaction);
}

YdqModule twist_action(const YdqModule& m, const HopfAutomorphism& a) {
    const LinearMap action =
        compose(m.action_matrix(), tensor_map(a.matrix(), LinearMap::identity(m.mdim())));
    return YdqModule::from_matrices(m.ambient(), m.component(), action, m.coaction_matrix());
}

int run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

bool compat_true(const YdqModule& m, std::string& why, const std::string& label) {
    const auto c = check_compat(m);
    if (!(c.antipode_form && c.shifted_form)) {
        why += label + ": compatibility failed; ";
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    // 1. Linearising the octonion loop: full axiom suite, antipode
    //    properties, Moufang predicate, nonassociativity. Budget 10 s.
    criteria.push_back({"octonion16 loop algebra: axioms + Moufang, nonassociative",
                        [](std::string& why) {
                            const Loop o = builtin_loop("octonion16");
                            if (classify(o).is_associative) {
                                why = "unexpectedly associative";
                                return false;
                            }
                            const HopfQuasigroup h = loop_algebra(o);
                            if (!check_hopf_quasigroup(h).all_pass()) {
                                why = "axiom suite failed";
                                return false;
                            }
                            if (!antipode_properties(h).all_pass()) {
                                why = "antipode properties failed";
                                return false;
                            }
                            const auto f = hopf_predicates(h);
                            if (!f.moufang || !f.flexible) {
                                why = "predicates wrong";
                                return false;
                            }
                            return true;
                        },
                        10.0});

    // 2. Canonical modules: both compatibility forms true on the corpus,
    //    both false on >= 10 mutated instances.
    criteria.push_back({"canonical modules: compatibility on corpus, mutations fail both forms",
                        [](std::string& why) {
                            const HopfQuasigroup c2 = loop_algebra(builtin_loop("cyclic(2)"));
                            const HopfQuasigroup c3 = loop_algebra(builtin_loop("cyclic(3)"));
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            const auto c3sq = automorphism_from_loop_perm(builtin_loop("cyclic(3)"), {0, 2, 1});

                            std::vector<YdqModule> corpus;
                            corpus.push_back(make_canonical(c2, HopfAutomorphism::identity(2),
                                                            HopfAutomorphism::identity(2)));
                            corpus.push_back(make_canonical(c3, HopfAutomorphism::identity(3), c3sq));
                            corpus.push_back(make_canonical(c3, c3sq, c3sq));
                            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {0, 4}})
                                corpus.push_back(
                                    make_canonical(s3, s3_conj(s3l, s3inv, a), s3_conj(s3l, s3inv, b)));
                            corpus.push_back(make_canonical(loop_algebra(builtin_loop("octonion16")),
                                                            HopfAutomorphism::identity(16),
                                                            HopfAutomorphism::identity(16)));
                            for (std::size_t i = 0; i < corpus.size(); ++i)
                                if (!compat_true(corpus[i], why, "corpus[" + std::to_string(i) + "]"))
                                    return false;

                            std::vector<YdqModule> mutated;
                            mutated.push_back(twist_coaction(corpus[1], c3sq));
                            mutated.push_back(twist_action(corpus[1], c3sq));
                            for (int g = 1; g <= 5; ++g) {
                                mutated.push_back(twist_coaction(corpus[3], s3_conj(s3l, s3inv, g)));
                                mutated.push_back(twist_action(corpus[4], s3_conj(s3l, s3inv, g)));
                            }
                            if (mutated.size() < 10) {
                                why = "too few mutations";
                                return false;
                            }
                            for (std::size_t i = 0; i < mutated.size(); ++i) {
                                const auto c = check_compat(mutated[i]);
                                if (c.antipode_form || c.shifted_form) {
                                    why = "mutation " + std::to_string(i) + " not detected by both forms";
                                    return false;
                                }
                            }
                            return true;
                        },
                        0.0});

    // 3. Untwisted reduction over the associative kS3: the antipode-form
    //    check agrees with the plain compatibility check, and the
    //    quasi-comodule laws hold automatically.
    criteria.push_back({"untwisted reduction agrees with the plain compatibility law on kS3",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto id6 = HopfAutomorphism::identity(6);
                            const YdqModule m = make_canonical(s3, id6, id6);
                            std::vector<YdqModule> instances;
                            instances.push_back(m);
                            instances.push_back(tensor_ydq(m, m));
                            instances.push_back(conjugate(m, AutPair::identity(6)));
                            instances.push_back(unit_module(s3));
                            for (std::size_t i = 0; i < instances.size(); ++i) {
                                const auto& inst = instances[i];
                                const auto c = check_compat(inst);
                                const Report plain = check_plain_ydq(inst);
                                const bool plain_compat = plain.find("yd-compat")->pass;
                                if (c.antipode_form != plain_compat || c.shifted_form != plain_compat) {
                                    why = "forms disagree on instance " + std::to_string(i);
                                    return false;
                                }
                                if (!plain.find("quasi-comodule-right")->pass ||
                                    !plain.find("quasi-comodule-middle")->pass) {
                                    why = "quasi-comodule laws failed on instance " + std::to_string(i);
                                    return false;
                                }
                            }
                            return true;
                        },
                        0.0});

    // 4. Group laws of G on the inner automorphisms of S3: unit and the
    //    inverse formula on all 36 pairs, associativity on 216 triples.
    criteria.push_back({"group law on automorphism pairs (36 pairs, 216 triples)",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const auto s3inv = inverse_map(s3l);
                            std::vector<HopfAutomorphism> inner;
                            for (int g = 0; g < 6; ++g) inner.push_back(s3_conj(s3l, s3inv, g));
                            const AutPair e = AutPair::identity(6);

                            std::vector<AutPair> pairs;
                            for (const auto& a : inner)
                                for (const auto& b : inner) pairs.push_back(AutPair{a, b});
                            for (const auto& x : pairs) {
                                if (!(g_mul(e, x) == x) || !(g_mul(x, e) == x)) {
                                    why = "unit law failed";
                                    return false;
                                }
                                const AutPair xi = g_inv(x);
                                const AutPair formula{
                                    x.alpha.inverse(),
                                    compose(x.alpha, compose(x.beta.inverse(), x.alpha.inverse()))};
                                if (!(xi == formula) || !(g_mul(x, xi) == e) || !(g_mul(xi, x) == e)) {
                                    why = "inverse law failed";
                                    return false;
                                }
                            }
                            std::vector<AutPair> diag;
                            for (const auto& a : inner) diag.push_back(AutPair{a, a});
                            int triples = 0;
                            for (const auto& x : diag)
                                for (const auto& y : diag)
                                    for (const auto& z : diag) {
                                        ++triples;
                                        if (!(g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z)))) {
                                            why = "associativity failed";
                                            return false;
                                        }
                                    }
                            if (triples != 216) {
                                why = "triple count " + std::to_string(triples);
                                return false;
                            }
                            return true;
                        },
                        0.0});

    // 5. Tensor structure: compatibility of tensor products, component
    //    grading, strict associativity on all 27 triples. Budget 60 s.
    criteria.push_back({"tensor products: closure, grading, strict associativity (27 triples)",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            std::vector<YdqModule> mods;
                            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {0, 4}})
                                mods.push_back(
                                    make_canonical(s3, s3_conj(s3l, s3inv, a), s3_conj(s3l, s3inv, b)));
                            for (const auto& m : mods)
                                for (const auto& n : mods) {
                                    const YdqModule t = tensor_ydq(m, n);
                                    if (!(t.component() == g_mul(m.component(), n.component()))) {
                                        why = "grading label wrong";
                                        return false;
                                    }
                                    const auto c = check_compat(t);
                                    if (!c.antipode_form || !c.shifted_form) {
                                        why = "tensor compatibility failed";
                                        return false;
                                    }
                                }
                            for (const auto& m : mods)
                                for (const auto& n : mods)
                                    for (const auto& p : mods)
                                        if (!ydq_equal(tensor_ydq(tensor_ydq(m, n), p),
                                                       tensor_ydq(m, tensor_ydq(n, p)))) {
                                            why = "strict associativity failed";
                                            return false;
                                        }
                            return true;
                        },
                        60.0});

    // 6. Conjugation functor: compatibility closure, composition law,
    //    distribution over tensor products, on the kS3 corpus.
    criteria.push_back({"conjugation functor: closure, composition, tensor distribution",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            std::vector<YdqModule> mods;
                            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {0, 4}})
                                mods.push_back(
                                    make_canonical(s3, s3_conj(s3l, s3inv, a), s3_conj(s3l, s3inv, b)));
                            std::vector<AutPair> gens;
                            for (int g = 0; g < 6; ++g)
                                gens.push_back(AutPair{s3_conj(s3l, s3inv, g), s3_conj(s3l, s3inv, g)});
                            gens.push_back(AutPair{s3_conj(s3l, s3inv, 1), s3_conj(s3l, s3inv, 4)});
                            gens.push_back(AutPair{s3_conj(s3l, s3inv, 5), s3_conj(s3l, s3inv, 2)});

                            for (const auto& x : gens)
                                for (const auto& n : mods) {
                                    const auto c = check_compat(conjugate(n, x));
                                    if (!c.antipode_form || !c.shifted_form) {
                                        why = "conjugate compatibility failed";
                                        return false;
                                    }
                                }
                            for (const auto& x : gens)
                                for (const auto& y : gens)
                                    for (const auto& n : mods)
                                        if (!ydq_equal(conjugate(n, g_mul(x, y)),
                                                       conjugate(conjugate(n, y), x))) {
                                            why = "conjugation composition failed";
                                            return false;
                                        }
                            for (const auto& x : gens)
                                for (const auto& m : mods)
                                    for (const auto& n : mods)
                                        if (!ydq_equal(conjugate(tensor_ydq(m, n), x),
                                                       tensor_ydq(conjugate(m, x), conjugate(n, x)))) {
                                            why = "tensor distribution failed";
                                            return false;
                                        }
                            return true;
                        },
                        0.0});

    // 7. Braiding: module/comodule map, hexagons, and two-sided
    //    invertibility on the kS3 corpus; pairwise on the octonion
    //    canonical module. Budget 120 s.
    criteria.push_back({"braiding: morphism laws, hexagons, bijectivity",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            std::vector<YdqModule> mods;
                            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 5}, {0, 4}})
                                mods.push_back(
                                    make_canonical(s3, s3_conj(s3l, s3inv, a), s3_conj(s3l, s3inv, b)));
                            for (const auto& m : mods)
                                for (const auto& n : mods) {
                                    const LinearMap c = braiding(m, n);
                                    const LinearMap ci = braiding_inverse(m, n);
                                    if (!(compose(c, ci) == LinearMap::identity(36)) ||
                                        !(compose(ci, c) == LinearMap::identity(36))) {
                                        why = "bijectivity failed on kS3";
                                        return false;
                                    }
                                    if (!verify_braiding_morphism(m, n).all_pass()) {
                                        why = "morphism law failed on kS3";
                                        return false;
                                    }
                                }
                            for (const auto& m : mods)
                                for (const auto& n : mods)
                                    for (const auto& p : mods)
                                        if (!verify_hexagons(m, n, p).all_pass()) {
                                            why = "hexagon failed on kS3";
                                            return false;
                                        }

                            const HopfQuasigroup ho = loop_algebra(builtin_loop("octonion16"));
                            const auto id16 = HopfAutomorphism::identity(16);
                            const YdqModule mo = make_canonical(ho, id16, id16);
                            const LinearMap c = braiding(mo, mo);
                            const LinearMap ci = braiding_inverse(mo, mo);
                            if (!(compose(c, ci) == LinearMap::identity(256)) ||
                                !(compose(ci, c) == LinearMap::identity(256))) {
                                why = "bijectivity failed on octonion16";
                                return false;
                            }
                            if (!verify_braiding_morphism(mo, mo).all_pass()) {
                                why = "morphism law failed on octonion16";
                                return false;
                            }
                            return true;
                        },
                        120.0});

    // 8. Naturality on solved morphisms and conjugation compatibility
    //    for every automorphism pair of the corpus.
    criteria.push_back({"naturality (>= 5 solved morphisms) and conjugation compatibility (36 pairs)",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            const auto id6 = HopfAutomorphism::identity(6);
                            std::vector<YdqModule> mods;
                            mods.push_back(make_canonical(s3, id6, id6));
                            for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {3, 5}})
                                mods.push_back(
                                    make_canonical(s3, s3_conj(s3l, s3inv, a), s3_conj(s3l, s3inv, b)));

                            int nontrivial = 0;
                            for (const auto& m : mods) {
                                for (const auto& f : solve_morphism_space(m, m)) {
                                    bool scalar = true;
                                    const Rational lambda = f.at(0, 0);
                                    for (Index r = 0; r < f.cod_dim() && scalar; ++r)
                                        for (Index c2 = 0; c2 < f.dom_dim(); ++c2)
                                            if (r == c2 ? f.at(r, c2) != lambda
                                                        : !f.at(r, c2).is_zero()) {
                                                scalar = false;
                                                break;
                                            }
                                    if (scalar) continue;
                                    YdqMorphism fm{&m, &m, f};
                                    if (!is_ydq_morphism(fm)) {
                                        why = "solved map is not a morphism";
                                        return false;
                                    }
                                    for (const auto& n : mods) {
                                        YdqMorphism gn{&n, &n, LinearMap::identity(n.mdim())};
                                        if (!verify_naturality(fm, gn) || !verify_naturality(gn, fm)) {
                                            why = "naturality square failed";
                                            return false;
                                        }
                                    }
                                    ++nontrivial;
                                }
                            }
                            if (nontrivial < 5) {
                                why = "only " + std::to_string(nontrivial) + " nontrivial morphisms";
                                return false;
                            }

                            std::vector<HopfAutomorphism> inner;
                            for (int g = 0; g < 6; ++g) inner.push_back(s3_conj(s3l, s3inv, g));
                            for (const auto& a : inner)
                                for (const auto& b : inner)
                                    if (!verify_phi_braiding(mods[1], mods[2], AutPair{a, b})) {
                                        why = "conjugation compatibility failed";
                                        return false;
                                    }
                            return true;
                        },
                        0.0});

    // 9. Command-line master runs on the shipped configs: exit 0 and
    //    byte-identical reports on repeated runs.
    criteria.push_back({"CLI master suite: shipped configs, deterministic reports",
                        [](std::string& why) {
                            const auto tmp = std::filesystem::temp_directory_path();
                            for (const std::string cfg : {"kS3-inner.json", "octonion16-id.json"}) {
                                const std::string a = (tmp / ("acc_a_" + cfg)).string();
                                const std::string b = (tmp / ("acc_b_" + cfg)).string();
                                const std::string base = "verify-tcategory " + kConfigs + "/" + cfg;
                                if (run_cli(base + " --json " + a) != 0) {
                                    why = cfg + ": nonzero exit";
                                    return false;
                                }
                                if (run_cli(base + " --json " + b) != 0) {
                                    why = cfg + ": nonzero exit on rerun";
                                    return false;
                                }
                                if (read_text_file(a) != read_text_file(b)) {
                                    why = cfg + ": report not byte-deterministic";
                                    return false;
                                }
                            }
                            return true;
                        },
                        0.0});

    // 10. Braiding against the group-theoretic conjugation oracle on all
    //     36 grouplike basis pairs of kS3.
    criteria.push_back({"braiding equals the conjugation oracle on kS3 grouplikes",
                        [](std::string& why) {
                            const Loop s3l = builtin_loop("s3");
                            const HopfQuasigroup s3 = loop_algebra(s3l);
                            const auto s3inv = inverse_map(s3l);
                            const auto id6 = HopfAutomorphism::identity(6);
                            const YdqModule m = make_canonical(s3, id6, id6);
                            const LinearMap c = braiding(m, m);
                            LinearMap expected(36, 36);
                            for (int g = 0; g < 6; ++g)
                                for (int h = 0; h < 6; ++h) {
                                    const int conj = s3l.mul(s3l.mul(h, g),
                                                             s3inv[static_cast<std::size_t>(h)]);
                                    expected.at(h * 6 + conj, g * 6 + h) = 1;
                                }
                            if (!(c == expected)) {
                                why = "oracle mismatch";
                                return false;
                            }
                            return true;
                        },
                        0.0});

    int failures = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto& crit = criteria[static_cast<std::size_t>(i)];
        std::string why;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = crit.body(why);
        } catch (const Error& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        if (ok && crit.budget_seconds > 0 && secs > crit.budget_seconds) {
            ok = false;
            why = "over time budget (" + std::to_string(secs) + " s > " +
                  std::to_string(crit.budget_seconds) + " s)";
        }
        std::printf("%s  criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    crit.name.c_str(), secs, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed (%.2f s total)\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 ? 0 : 1;
}
