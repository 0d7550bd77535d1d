#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ternhom/cube.hpp"

namespace fixtures {

std::filesystem::path data_path(const std::string& name);

// The six slices for triangle(2,2,3) as printed, elements numbered
// 1) c 2) a 3) b 4) acb 5) bcb 6) abc.
ternhom::TernaryCube printed_cube();

struct NamedCube {
  std::string name;
  ternhom::TernaryCube cube;
};

// Ternary groups used across the suites: cyclic sums and shifted sums,
// heaps a-b+c, odd parts of triangle and symmetric groups. Only cubes of
// order <= max_order are built.
std::vector<NamedCube> test_cubes(std::size_t max_order);

}  // namespace fixtures
