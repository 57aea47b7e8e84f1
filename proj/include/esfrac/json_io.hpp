#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "esfrac/egyptian.hpp"

namespace esfrac::json_io {

/// DecompRecord <-> JSON in the stable shape
/// {"k":int,"n":int,"terms":[{"sign":1,"den":"<decimal>"}...],
///  "family":"F##|oracle","params":{...},"verified":true}.
/// Denominators are decimal strings (arbitrary precision); k and n are JSON
/// numbers while they fit, decimal strings beyond that.
nlohmann::ordered_json to_json(const DecompRecord& rec);
DecompRecord record_from_json(const nlohmann::ordered_json& j);

std::string to_string(const DecompRecord& rec);
DecompRecord record_from_string(const std::string& text);

}  // namespace esfrac::json_io
