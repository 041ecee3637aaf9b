#pragma once

#include <string>

#include "krein/core.hpp"

namespace krein {

/// Instance JSON schema:
/// { "n0": int, "n1": int,
///   "a0": [[[re, im], ...], ...], "a1": ..., "b": ..., "c": optional,
///   "mode": "j_self_adjoint" | "general" }
/// Matrices are row-major nested arrays; every complex entry is a 2-element
/// [re, im] array. "c" must be absent in j_self_adjoint mode.
BlockInstance instance_from_json_text(const std::string& text);
BlockInstance load_instance(const std::string& path);

std::string instance_to_json_text(const BlockInstance& inst);
void save_instance(const BlockInstance& inst, const std::string& path);

} // namespace krein
