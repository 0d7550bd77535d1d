#include "fixtures.hpp"

#include "ternhom/cube_io.hpp"
#include "ternhom/presentation.hpp"

namespace fixtures {

std::filesystem::path data_path(const std::string& name) { return std::filesystem::path(TERNHOM_TEST_DATA) / name; }

ternhom::TernaryCube printed_cube() { return ternhom::read_cube_file(data_path("printed_cube_223.txt")); }

std::vector<NamedCube> test_cubes(std::size_t max_order) {
  using namespace ternhom;
  std::vector<NamedCube> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back({"Z" + std::to_string(n) + " sum", cyclic_sum_cube(n)});
  for (std::size_t n = 2; n <= max_order; ++n)
    out.push_back({"Z" + std::to_string(n) + " sum+1", cyclic_shifted_cube(n, 1)});
  for (std::size_t n = 2; n <= max_order; ++n) out.push_back({"Z" + std::to_string(n) + " heap", heap_cube(n)});

  struct Triangle {
    unsigned l, m, n;
    std::size_t order;
  };
  for (auto t : {Triangle{2, 2, 2, 4}, Triangle{2, 2, 3, 6}, Triangle{2, 2, 4, 8}, Triangle{2, 2, 5, 10},
                 Triangle{2, 2, 6, 12}, Triangle{2, 3, 3, 12}})
    if (t.order <= max_order) {
      auto cube = triangle_cube(t.l, t.m, t.n);
      out.push_back({cube.name(), std::move(cube)});
    }
  for (unsigned k : {3u, 4u}) {
    const std::size_t odd = k == 3 ? 3 : 12;
    if (odd <= max_order)
      out.push_back({"O(S" + std::to_string(k) + ")", odd_even_split(symmetric_group(k)).odd});
  }
  if (max_order >= 6) out.push_back({"printed O(triangle(2,2,3))", printed_cube()});
  return out;
}

}  // namespace fixtures
