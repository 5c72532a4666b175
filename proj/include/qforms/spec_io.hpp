#pragma once

#include <string>

#include "json.hpp"
#include "qforms/artin.hpp"

namespace qforms {

nlohmann::json class_field_spec_to_json(const ClassFieldSpec& spec);

ClassFieldSpec class_field_spec_from_json(const nlohmann::json& j);

/// Resolves a class field reference: a built-in preset name ("f3-example"),
/// inline JSON (first non-space character '{'), or a path to a JSON file.
ClassFieldSpec load_class_field_spec(const std::string& ref);

}  // namespace qforms
