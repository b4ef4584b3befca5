#pragma once

#include <string>

#include <json.hpp>

#include "homtest/linalg.hpp"

namespace homtest {

using json = nlohmann::json;

// Complex numbers are stored as [re, im] pairs; matrices as row-major nested
// arrays of such pairs.
json complex_to_json(cplx z);
cplx complex_from_json(const json& j);
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

/// Content hash (SHA-256, first 16 hex digits) of the canonical dump of j.
/// nlohmann::json keeps object keys sorted, so dump() is canonical.
std::string digest(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
void write_json_file(const std::string& path, const json& j);

}  // namespace homtest
