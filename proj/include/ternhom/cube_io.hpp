#pragma once

// Cube files. JSON: {"order": n, "table": [n^3 entries, 1-based, a-major],
// "name": optional}. Text: one n×n slice per first argument, laid out like
// the printed slices (row = second argument, column = third):
//
//   order 6
//   name O(triangle(2,2,3))
//   slice 1
//   1 2 3 4 5 6
//   ...

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ternhom/cube.hpp"

namespace ternhom {

nlohmann::json cube_to_json(const TernaryCube& cube);
TernaryCube cube_from_json(const nlohmann::json& j);

std::string cube_to_text(const TernaryCube& cube);
TernaryCube cube_from_text(const std::string& text);

// Sniffs the format: JSON when the first non-blank character is '{'.
TernaryCube parse_cube(const std::string& text);
TernaryCube read_cube_file(const std::filesystem::path& path);
void write_cube_file(const std::filesystem::path& path, const TernaryCube& cube);

}  // namespace ternhom
