#include "hqg/json_io.hpp"

#include "hqg/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hqg {

namespace {

nlohmann::json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

const nlohmann::json& require_key(const nlohmann::json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError("missing key '" + key + "'");
    return j.at(key);
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

nlohmann::ordered_json loop_to_json(const Loop& loop) {
    nlohmann::ordered_json j;
    j["size"] = loop.size;
    j["identity"] = loop.identity;
    j["table"] = loop.table;
    return j;
}

Loop loop_from_json(const nlohmann::json& j) {
    const auto& tj = require_key(j, "table");
    if (!tj.is_array()) throw ParseError("'table' must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
        if (!row.is_array()) throw ParseError("'table' rows must be arrays");
        table.push_back(row.get<std::vector<int>>());
    }
    const int identity = require_key(j, "identity").get<int>();
    if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(table.size()))
        throw ParseError("'size' does not match table dimensions");
    return validate_loop(table, identity);
}

Loop load_loop_file(const std::string& path) {
    return loop_from_json(parse_json_text(read_text_file(path), path));
}

nlohmann::ordered_json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("expected integer or \"p/q\" string, got: " + j.dump());
}

nlohmann::ordered_json matrix_json(const LinearMap& m) {
    auto rows = nlohmann::ordered_json::array();
    for (Index r = 0; r < m.cod_dim(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (Index c = 0; c < m.dom_dim(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

LinearMap matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j.at(0).is_array())
        throw ParseError("matrix must be a non-empty array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.at(0).size());
    LinearMap m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto& row = j.at(static_cast<std::size_t>(r));
        if (static_cast<Index>(row.size()) != cols) throw ParseError("ragged matrix rows");
        for (Index c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(row.at(static_cast<std::size_t>(c)));
    }
    return m;
}

nlohmann::ordered_json hopf_to_json(const HopfQuasigroup& h) {
    const Index n = h.dim();
    nlohmann::ordered_json j;
    j["dim"] = n;
    {
        auto mi = nlohmann::ordered_json::array();
        for (Index i = 0; i < n; ++i) {
            auto mj = nlohmann::ordered_json::array();
            for (Index jj = 0; jj < n; ++jj) {
                auto mk = nlohmann::ordered_json::array();
                for (Index k = 0; k < n; ++k) mk.push_back(h.mult().at(k, i * n + jj).str());
                mj.push_back(std::move(mk));
            }
            mi.push_back(std::move(mj));
        }
        j["mult"] = std::move(mi);
    }
    {
        auto ci = nlohmann::ordered_json::array();
        for (Index i = 0; i < n; ++i) {
            auto cj = nlohmann::ordered_json::array();
            for (Index jj = 0; jj < n; ++jj) {
                auto ck = nlohmann::ordered_json::array();
                for (Index k = 0; k < n; ++k) ck.push_back(h.comult().at(jj * n + k, i).str());
                cj.push_back(std::move(ck));
            }
            ci.push_back(std::move(cj));
        }
        j["comult"] = std::move(ci);
    }
    {
        auto u = nlohmann::ordered_json::array();
        for (Index i = 0; i < n; ++i) u.push_back(h.unit().at(i, 0).str());
        j["unit"] = std::move(u);
    }
    {
        auto e = nlohmann::ordered_json::array();
        for (Index i = 0; i < n; ++i) e.push_back(h.counit().at(0, i).str());
        j["counit"] = std::move(e);
    }
    j["antipode"] = matrix_json(h.antipode());
    return j;
}

HopfQuasigroup hopf_from_json(const nlohmann::json& j, bool validate) {
    const Index n = require_key(j, "dim").get<Index>();
    if (n <= 0) throw ParseError("'dim' must be positive");

    const auto& mj = require_key(j, "mult");
    LinearMap mult(n, n * n);
    if (static_cast<Index>(mj.size()) != n) throw ParseError("'mult' must have dim entries");
    for (Index i = 0; i < n; ++i) {
        const auto& row = mj.at(static_cast<std::size_t>(i));
        if (static_cast<Index>(row.size()) != n) throw ParseError("'mult' rows must have dim entries");
        for (Index jj = 0; jj < n; ++jj) {
            const auto& cell = row.at(static_cast<std::size_t>(jj));
            if (static_cast<Index>(cell.size()) != n) throw ParseError("'mult' cells must have dim entries");
            for (Index k = 0; k < n; ++k)
                mult.at(k, i * n + jj) = rational_from_json(cell.at(static_cast<std::size_t>(k)));
        }
    }

    const auto& cj = require_key(j, "comult");
    LinearMap comult(n * n, n);
    if (static_cast<Index>(cj.size()) != n) throw ParseError("'comult' must have dim entries");
    for (Index i = 0; i < n; ++i) {
        const auto& row = cj.at(static_cast<std::size_t>(i));
        if (static_cast<Index>(row.size()) != n) throw ParseError("'comult' rows must have dim entries");
        for (Index jj = 0; jj < n; ++jj) {
            const auto& cell = row.at(static_cast<std::size_t>(jj));
            if (static_cast<Index>(cell.size()) != n)
                throw ParseError("'comult' cells must have dim entries");
            for (Index k = 0; k < n; ++k)
                comult.at(jj * n + k, i) = rational_from_json(cell.at(static_cast<std::size_t>(k)));
        }
    }

    const auto& uj = require_key(j, "unit");
    if (static_cast<Index>(uj.size()) != n) throw ParseError("'unit' must have dim entries");
    std::vector<Rational> unit;
    for (const auto& x : uj) unit.push_back(rational_from_json(x));

    const auto& ej = require_key(j, "counit");
    if (static_cast<Index>(ej.size()) != n) throw ParseError("'counit' must have dim entries");
    LinearMap counit(1, n);
    for (Index i = 0; i < n; ++i) counit.at(0, i) = rational_from_json(ej.at(static_cast<std::size_t>(i)));

    LinearMap antipode = matrix_from_json(require_key(j, "antipode"));
    if (antipode.dom_dim() != n || antipode.cod_dim() != n)
        throw ParseError("'antipode' must be dim x dim");

    return validate ? HopfQuasigroup::validated(std::move(mult), std::move(unit), std::move(comult),
                                                std::move(counit), std::move(antipode))
                    : HopfQuasigroup::unchecked(std::move(mult), std::move(unit), std::move(comult),
                                                std::move(counit), std::move(antipode));
}

HopfQuasigroup load_hopf_file(const std::string& path, bool validate) {
    return hopf_from_json(parse_json_text(read_text_file(path), path), validate);
}

HopfQuasigroup load_ambient_file(const std::string& path, bool validate) {
    const auto j = parse_json_text(read_text_file(path), path);
    if (j.is_object() && j.contains("table")) return loop_algebra(loop_from_json(j));
    return hopf_from_json(j, validate);
}

nlohmann::ordered_json module_to_json(const YdqModule& m, const std::string& ambient_ref) {
    nlohmann::ordered_json j;
    j["ambient"] = ambient_ref;
    nlohmann::ordered_json comp;
    comp["alpha"] = matrix_json(m.component().alpha.matrix());
    comp["beta"] = matrix_json(m.component().beta.matrix());
    j["component"] = std::move(comp);
    j["mdim"] = m.mdim();
    j["action"] = matrix_json(m.action_matrix());
    j["coaction"] = matrix_json(m.coaction_matrix());
    return j;
}

YdqModule module_from_json(const nlohmann::json& j, const HopfQuasigroup& ambient) {
    const auto& comp = require_key(j, "component");
    HopfAutomorphism alpha(matrix_from_json(require_key(comp, "alpha")));
    HopfAutomorphism beta(matrix_from_json(require_key(comp, "beta")));
    LinearMap action = matrix_from_json(require_key(j, "action"));
    LinearMap coaction = matrix_from_json(require_key(j, "coaction"));
    if (j.contains("mdim") && j.at("mdim").get<Index>() != action.cod_dim())
        throw ParseError("'mdim' does not match action shape");
    return YdqModule::from_matrices(ambient, AutPair{std::move(alpha), std::move(beta)},
                                    std::move(action), std::move(coaction));
}

YdqModule load_module_file(const std::string& path, const HopfQuasigroup* ambient_override) {
    const auto j = parse_json_text(read_text_file(path), path);
    if (ambient_override) return module_from_json(j, *ambient_override);
    const std::string ref = require_key(j, "ambient").get<std::string>();
    const auto base = std::filesystem::path(path).parent_path();
    const HopfQuasigroup ambient = load_ambient_file((base / ref).string());
    return module_from_json(j, ambient);
}

HopfAutomorphism automorphism_from_spec(const nlohmann::json& spec, const HopfQuasigroup& h,
                                        const Loop* loop) {
    if (spec.is_string()) {
        const auto s = spec.get<std::string>();
        if (s == "id") return HopfAutomorphism::identity(h.dim());
        throw ParseError("unknown automorphism spec string: '" + s + "'");
    }
    if (!spec.is_object()) throw ParseError("automorphism spec must be \"id\" or an object");
    if (spec.contains("perm")) {
        if (!loop) throw ParseError("'perm' automorphism spec needs a loop-backed ambient");
        return automorphism_from_loop_perm(*loop, spec.at("perm").get<std::vector<int>>());
    }
    if (spec.contains("inner")) {
        if (!loop) throw ParseError("'inner' automorphism spec needs a loop-backed ambient");
        const int g = spec.at("inner").get<int>();
        if (g < 0 || g >= loop->size) throw ParseError("'inner' element out of range");
        const auto inv = inverse_map(*loop);
        std::vector<int> perm(static_cast<std::size_t>(loop->size));
        for (int x = 0; x < loop->size; ++x)
            perm[static_cast<std::size_t>(x)] = loop->mul(loop->mul(g, x), inv[static_cast<std::size_t>(g)]);
        return automorphism_from_loop_perm(*loop, perm);
    }
    if (spec.contains("matrix")) return HopfAutomorphism(matrix_from_json(spec.at("matrix")));
    throw ParseError("automorphism spec needs 'perm', 'inner' or 'matrix'");
}

} // namespace hqg
