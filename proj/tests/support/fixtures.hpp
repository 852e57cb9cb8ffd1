#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "ferrers/triangle.hpp"

namespace ferrers {

inline CoefficientRow row_of(std::initializer_list<long> values) {
  CoefficientRow row;
  for (const auto v : values) row.emplace_back(v);
  return row;
}

inline CoefficientRow row_of(const std::vector<long>& values) {
  CoefficientRow row;
  for (const auto v : values) row.emplace_back(v);
  return row;
}

namespace fixtures {

// c_lambda(i, j) for lambda = (7,7,7,6,4,4,2).
inline const std::array<std::vector<long>, 7> kTable1{{
    {-1, 1},
    {1, -3, 2},
    {-1, 7, -12, 6},
    {0, -14, 86, -144, 72},
    {0, 28, -1060, 6216, -10944, 5760},
    {0, -56, 3236, -28044, 79584, -89280, 34560},
    {0, 112, -38944, 1048416, -7376304, 19758720, -22101120, 8709120},
}};

// c_sigma(i, j) for the staircase (7,6,5,4,3,2,1).
inline const std::array<std::vector<long>, 7> kTable2{{
    {-1, 1},
    {0, -2, 2},
    {0, 4, -16, 12},
    {0, -8, 104, -240, 144},
    {0, 16, -640, 3504, -5760, 2880},
    {0, -32, 3872, -45888, 157248, -201600, 86400},
    {0, 64, -23296, 573888, -3695616, 9192960, -9676800, 3628800},
}};

}  // namespace fixtures
}  // namespace ferrers
