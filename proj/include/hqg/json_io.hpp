#pragma once

#include "hqg/hopf.hpp"
#include "hqg/loop.hpp"
#include "hqg/ydq.hpp"

#include <json.hpp>

#include <string>

namespace hqg {

// JSON is the single serialization for inputs and reports. Rationals are
// written as strings ("p" or "p/q"); integers are accepted on input.

nlohmann::ordered_json loop_to_json(const Loop& loop);
Loop loop_from_json(const nlohmann::json& j);
Loop load_loop_file(const std::string& path);

nlohmann::ordered_json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::ordered_json matrix_json(const LinearMap& m);
/// Reads a matrix of the given shape from a nested JSON array.
LinearMap matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json hopf_to_json(const HopfQuasigroup& h);
/// Structure-constant format: mult[i][j][k] is the e_k coefficient of
/// e_i * e_j; comult[i][j][k] the e_j (x) e_k coefficient of Delta(e_i).
HopfQuasigroup hopf_from_json(const nlohmann::json& j, bool validate = true);
HopfQuasigroup load_hopf_file(const std::string& path, bool validate = true);

/// Loads either a loop file (key "table"; converted via loop_algebra) or
/// a structure-constant file (key "mult").
HopfQuasigroup load_ambient_file(const std::string& path, bool validate = true);

nlohmann::ordered_json module_to_json(const YdqModule& m, const std::string& ambient_ref);
YdqModule module_from_json(const nlohmann::json& j, const HopfQuasigroup& ambient);
/// Loads a module file; resolves its "ambient" path relative to the
/// module file's directory unless `ambient_override` is non-null.
YdqModule load_module_file(const std::string& path, const HopfQuasigroup* ambient_override = nullptr);

/// Automorphism spec: "id", {"perm": [...]}, {"inner": g} (conjugation
/// by loop element g; needs `loop`), or {"matrix": [[...]]}.
HopfAutomorphism automorphism_from_spec(const nlohmann::json& spec, const HopfQuasigroup& h,
                                        const Loop* loop);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace hqg
