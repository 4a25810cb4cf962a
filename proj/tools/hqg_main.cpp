// hqg: exact verification of Hopf quasigroup structures, their
// Yetter-Drinfeld quasimodules, and the braided category identities over
// concrete finite-dimensional instances.
//
// Exit codes: 0 all checks pass, 1 identity failure, 2 input/parse
// error, 3 precondition violation.

#include "hqg/errors.hpp"
#include "hqg/hopf.hpp"
#include "hqg/json_io.hpp"
#include "hqg/loop.hpp"
#include "hqg/ydq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

namespace {

using hqg::Index;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

struct AmbientSource {
    hqg::HopfQuasigroup hopf;
    std::optional<hqg::Loop> loop; // set when loop-backed
    std::string file_ref;          // original path when file-backed
};

AmbientSource load_ambient(const std::string& path, const std::string& builtin) {
    if (!builtin.empty()) {
        hqg::Loop loop = hqg::builtin_loop(builtin);
        return AmbientSource{hqg::loop_algebra(loop), std::move(loop), ""};
    }
    if (path.empty()) throw hqg::ParseError("need an input file or --builtin NAME");
    const auto j = nlohmann::json::parse(hqg::read_text_file(path), nullptr, true);
    if (j.is_object() && j.contains("table")) {
        hqg::Loop loop = hqg::loop_from_json(j);
        return AmbientSource{hqg::loop_algebra(loop), std::move(loop), path};
    }
    return AmbientSource{hqg::hopf_from_json(j, /*validate=*/false), std::nullopt, path};
}

// Automorphism spec grammar: "id", "inner:g", "perm:0,2,1,...",
// "matrix:path.json".
nlohmann::json parse_aut_spec(const std::string& text) {
    if (text == "id" || text.empty()) return nlohmann::json("id");
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw hqg::ParseError("bad automorphism spec '" + text + "' (want id, inner:g, perm:..., matrix:file)");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    nlohmann::json spec;
    if (kind == "inner") {
        spec["inner"] = std::stoi(arg);
    } else if (kind == "perm") {
        std::vector<int> perm;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            const auto comma = arg.find(',', pos);
            const std::string tok = arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) perm.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        spec["perm"] = perm;
    } else if (kind == "matrix") {
        spec["matrix"] = nlohmann::json::parse(hqg::read_text_file(arg));
    } else {
        throw hqg::ParseError("bad automorphism spec kind '" + kind + "'");
    }
    return spec;
}

void emit(const nlohmann::ordered_json& j, const std::string& json_out, const std::string& text) {
    std::cout << text;
    if (!json_out.empty()) hqg::write_text_file(json_out, j.dump(2) + "\n");
}

// Distinct inner automorphisms of a loop-backed ambient (deduplicated as
// permutation matrices), in element order.
std::vector<hqg::HopfAutomorphism> inner_automorphisms(const hqg::Loop& loop) {
    std::vector<hqg::HopfAutomorphism> out;
    std::set<std::vector<int>> seen;
    const auto inv = hqg::inverse_map(loop);
    for (int g = 0; g < loop.size; ++g) {
        std::vector<int> perm(static_cast<std::size_t>(loop.size));
        for (int x = 0; x < loop.size; ++x)
            perm[static_cast<std::size_t>(x)] = loop.mul(loop.mul(g, x), inv[static_cast<std::size_t>(g)]);
        bool is_aut = true;
        for (int s = 0; s < loop.size && is_aut; ++s)
            for (int t = 0; t < loop.size; ++t)
                if (perm[static_cast<std::size_t>(loop.mul(s, t))] !=
                    loop.mul(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(t)])) {
                    is_aut = false;
                    break;
                }
        if (!is_aut || !seen.insert(perm).second) continue;
        out.push_back(hqg::automorphism_from_loop_perm(loop, perm));
    }
    return out;
}

int cmd_check_loop(const std::string& path, const std::string& builtin, const std::string& json_out) {
    hqg::Loop loop = builtin.empty() ? hqg::load_loop_file(path) : hqg::builtin_loop(builtin);
    const auto flags = hqg::classify(loop);
    hqg::Report rep;
    rep.suite = "loop";
    rep.add("latin-square", true);
    rep.add("identity", true);
    auto j = rep.to_json();
    nlohmann::ordered_json fl;
    fl["inverse_property"] = flags.has_inverse_property;
    fl["moufang"] = flags.is_moufang;
    fl["flexible"] = flags.is_flexible;
    fl["associative"] = flags.is_associative;
    j["flags"] = fl;
    std::ostringstream text;
    text << rep.text();
    text << "flags: IP=" << flags.has_inverse_property << " moufang=" << flags.is_moufang
         << " flexible=" << flags.is_flexible << " associative=" << flags.is_associative << "\n";
    emit(j, json_out, text.str());
    return rep.all_pass() ? kExitPass : kExitIdentityFailure;
}

int cmd_check_hopf(const std::string& path, const std::string& builtin, bool dual,
                   const std::string& json_out) {
    AmbientSource src = load_ambient(path, builtin);
    hqg::Report rep = hqg::check_hopf_quasigroup(src.hopf);
    rep.merge(hqg::antipode_properties(src.hopf));
    const auto flags = hqg::hopf_predicates(src.hopf);

    nlohmann::ordered_json j = rep.to_json();
    nlohmann::ordered_json fl;
    fl["moufang"] = flags.moufang;
    fl["flexible"] = flags.flexible;
    std::ostringstream text;
    text << rep.text();
    text << "flags: moufang=" << flags.moufang << " flexible=" << flags.flexible << "\n";

    if (dual) {
        const hqg::HopfCoquasigroup hdual = hqg::dualize_unchecked(src.hopf);
        const auto corep = hqg::check_coquasigroup(hdual);
        j["dual"] = corep.axioms.to_json();
        j["dual"]["flags"] = {{"co_flexible", corep.co_flexible}, {"co_moufang", corep.co_moufang}};
        text << corep.axioms.text();
        text << "dual flags: co_flexible=" << corep.co_flexible << " co_moufang=" << corep.co_moufang
             << "\n";
        for (const auto& r : corep.axioms.results) rep.results.push_back(r);
    }
    j["flags"] = fl;
    emit(j, json_out, text.str());
    return rep.all_pass() ? kExitPass : kExitIdentityFailure;
}

int cmd_check_aut(const std::string& path, const std::string& builtin, const std::string& spec_text,
                  const std::string& json_out) {
    AmbientSource src = load_ambient(path, builtin);
    const auto spec = parse_aut_spec(spec_text);
    const hqg::HopfAutomorphism aut =
        hqg::automorphism_from_spec(spec, src.hopf, src.loop ? &*src.loop : nullptr);
    hqg::Report rep = hqg::check_automorphism(src.hopf, aut.matrix());
    emit(rep.to_json(), json_out, rep.text());
    return rep.all_pass() ? kExitPass : kExitIdentityFailure;
}

int cmd_build_ydq(const std::string& path, const std::string& builtin, const std::string& alpha_text,
                  const std::string& beta_text, const std::string& out_path,
                  const std::string& json_out) {
    AmbientSource src = load_ambient(path, builtin);
    const hqg::HopfAutomorphism alpha =
        hqg::automorphism_from_spec(parse_aut_spec(alpha_text), src.hopf, src.loop ? &*src.loop : nullptr);
    const hqg::HopfAutomorphism beta =
        hqg::automorphism_from_spec(parse_aut_spec(beta_text), src.hopf, src.loop ? &*src.loop : nullptr);
    const hqg::YdqModule mod = hqg::make_canonical(src.hopf, alpha, beta);
    hqg::Report rep = hqg::check_module(mod);

    if (!out_path.empty()) {
        std::string ambient_ref = src.file_ref;
        if (ambient_ref.empty()) {
            const std::string hopf_path = out_path + ".ambient.json";
            hqg::write_text_file(hopf_path, hqg::hopf_to_json(src.hopf).dump(2) + "\n");
            ambient_ref = std::filesystem::path(hopf_path).filename().string();
        } else {
            // Reference relative to the module file's directory.
            const auto out_dir = std::filesystem::absolute(out_path).parent_path();
            ambient_ref = std::filesystem::relative(std::filesystem::absolute(ambient_ref), out_dir).string();
        }
        hqg::write_text_file(out_path, hqg::module_to_json(mod, ambient_ref).dump(2) + "\n");
    }
    emit(rep.to_json(), json_out, rep.text());
    return rep.all_pass() ? kExitPass : kExitIdentityFailure;
}

int cmd_verify_tcategory(const std::string& config_path, const std::string& json_out, Index max_dim_cli,
                         long seed_cli, bool strict_hexagons) {
    const auto cfg = nlohmann::json::parse(hqg::read_text_file(config_path));
    const auto base = std::filesystem::path(config_path).parent_path();

    if (!cfg.is_object() || !cfg.contains("ambient"))
        throw hqg::ParseError(config_path + ": config needs an 'ambient' entry");

    const auto& amb = cfg.at("ambient");
    AmbientSource src = [&]() {
        if (amb.is_object() && amb.contains("builtin"))
            return load_ambient("", amb.at("builtin").get<std::string>());
        if (amb.is_object() && amb.contains("file"))
            return load_ambient((base / amb.at("file").get<std::string>()).string(), "");
        throw hqg::ParseError("config 'ambient' needs 'builtin' or 'file'");
    }();

    const hqg::Loop* loop = src.loop ? &*src.loop : nullptr;

    std::vector<hqg::AutPair> gens;
    if (cfg.contains("gens")) {
        const auto& gj = cfg.at("gens");
        if (gj.is_string() && gj.get<std::string>() == "inner-pairs") {
            if (!loop) throw hqg::ParseError("'inner-pairs' needs a loop-backed ambient");
            const auto inner = inner_automorphisms(*loop);
            for (const auto& a : inner)
                for (const auto& b : inner) gens.push_back(hqg::AutPair{a, b});
        } else if (gj.is_array()) {
            for (const auto& e : gj)
                gens.push_back(hqg::AutPair{
                    hqg::automorphism_from_spec(e.contains("alpha") ? e.at("alpha") : "id", src.hopf, loop),
                    hqg::automorphism_from_spec(e.contains("beta") ? e.at("beta") : "id", src.hopf, loop)});
        } else {
            throw hqg::ParseError("config 'gens' must be \"inner-pairs\" or an array");
        }
    }
    if (gens.empty()) gens.push_back(hqg::AutPair::identity(src.hopf.dim()));

    std::vector<hqg::YdqModule> modules;
    if (cfg.contains("modules")) {
        for (const auto& e : cfg.at("modules")) {
            if (e.is_object() && e.contains("canonical")) {
                const auto& c = e.at("canonical");
                modules.push_back(hqg::make_canonical(
                    src.hopf,
                    hqg::automorphism_from_spec(c.contains("alpha") ? c.at("alpha") : "id", src.hopf, loop),
                    hqg::automorphism_from_spec(c.contains("beta") ? c.at("beta") : "id", src.hopf, loop)));
            } else if (e.is_object() && e.contains("file")) {
                modules.push_back(
                    hqg::load_module_file((base / e.at("file").get<std::string>()).string(), &src.hopf));
            } else {
                throw hqg::ParseError("config 'modules' entries need 'canonical' or 'file'");
            }
        }
    }

    hqg::TCategoryOptions opts;
    if (cfg.contains("max_dim")) opts.max_dim = cfg.at("max_dim").get<Index>();
    if (cfg.contains("seed")) opts.seed = cfg.at("seed").get<std::uint64_t>();
    if (cfg.contains("include_unit")) opts.include_unit = cfg.at("include_unit").get<bool>();
    if (cfg.contains("naturality_samples")) opts.naturality_samples = cfg.at("naturality_samples").get<int>();
    if (cfg.contains("strict_hexagons")) opts.strict_hexagons = cfg.at("strict_hexagons").get<bool>();
    if (cfg.contains("suites")) opts.suites = cfg.at("suites").get<std::vector<std::string>>();
    if (max_dim_cli > 0) opts.max_dim = max_dim_cli;
    if (seed_cli >= 0) opts.seed = static_cast<std::uint64_t>(seed_cli);
    if (strict_hexagons) opts.strict_hexagons = true;

    const hqg::Report rep = hqg::verify_t_category(src.hopf, modules, gens, opts);
    emit(rep.to_json(), json_out, rep.text());
    return rep.all_pass() ? kExitPass : kExitIdentityFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Hopf quasigroups, Yetter-Drinfeld quasimodules and their braided "
                 "category structure"};
    app.require_subcommand(1);

    std::string path, builtin, json_out, aut_spec, alpha_spec = "id", beta_spec = "id", out_path;
    Index max_dim = -1;
    long seed = -1;

    auto* check_loop = app.add_subcommand("check-loop", "validate and classify a loop");
    check_loop->add_option("path", path, "loop JSON file");
    check_loop->add_option("--builtin", builtin, "builtin loop name (cyclic(n), s3, octonion16)");
    check_loop->add_option("--json", json_out, "write the JSON report to this file");

    auto* check_hopf = app.add_subcommand("check-hopf", "run the Hopf quasigroup axiom suite");
    check_hopf->add_option("path", path, "loop or structure-constant JSON file");
    check_hopf->add_option("--builtin", builtin, "builtin loop name");
    bool dual = false;
    check_hopf->add_flag("--dual", dual, "also check the dual Hopf coquasigroup");
    check_hopf->add_option("--json", json_out, "write the JSON report to this file");

    auto* check_aut = app.add_subcommand("check-aut", "check a Hopf quasigroup automorphism candidate");
    check_aut->add_option("path", path, "loop or structure-constant JSON file");
    check_aut->add_option("--builtin", builtin, "builtin loop name");
    check_aut->add_option("--aut", aut_spec, "candidate: id | inner:g | perm:0,2,1,... | matrix:file")
        ->required();
    check_aut->add_option("--json", json_out, "write the JSON report to this file");

    auto* build_ydq = app.add_subcommand("build-ydq", "build and check a canonical twisted module");
    build_ydq->add_option("path", path, "loop or structure-constant JSON file");
    build_ydq->add_option("--builtin", builtin, "builtin loop name");
    build_ydq->add_option("--alpha", alpha_spec, "first automorphism spec (default id)");
    build_ydq->add_option("--beta", beta_spec, "second automorphism spec (default id)");
    build_ydq->add_option("--out", out_path, "write the module JSON here");
    build_ydq->add_option("--json", json_out, "write the JSON report to this file");

    auto* verify = app.add_subcommand("verify-tcategory", "run the braided T-category master suite");
    std::string config_path;
    verify->add_option("config", config_path, "JSON config file")->required();
    verify->add_option("--json", json_out, "write the JSON report to this file");
    verify->add_option("--max-dim", max_dim, "resource guard on module dimensions (default 16)");
    verify->add_option("--seed", seed, "seed for sampled morphism tests");
    bool strict_hexagons = false;
    verify->add_flag("--strict-hexagons", strict_hexagons,
                     "count hexagon identities as failures even on modules that do not satisfy "
                     "the quasi-comodule conditions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_loop->parsed()) return cmd_check_loop(path, builtin, json_out);
        if (check_hopf->parsed()) return cmd_check_hopf(path, builtin, dual, json_out);
        if (check_aut->parsed()) return cmd_check_aut(path, builtin, aut_spec, json_out);
        if (build_ydq->parsed())
            return cmd_build_ydq(path, builtin, alpha_spec, beta_spec, out_path, json_out);
        if (verify->parsed())
            return cmd_verify_tcategory(config_path, json_out, max_dim, seed, strict_hexagons);
    } catch (const hqg::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hqg::SingularMatrixError& e) {
        std::cerr << "identity failure: antipode " << e.what() << "\n";
        return kExitIdentityFailure;
    } catch (const hqg::PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const hqg::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hqg::DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const hqg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
