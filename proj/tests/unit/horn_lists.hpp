#pragma once

// Characteristic lists of the fourteen complete order-two series and seven confluent ones, as
// (first-index, second-index) coefficients, factorials left implicit.

#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct NamedList {
  std::string name;
  std::vector<std::pair<int, int>> num, den;
};

inline std::vector<NamedList> horn_lists() {
  return {
      {"F1", {{1, 1}, {1, 0}, {0, 1}}, {{1, 1}}},
      {"F2", {{1, 1}, {1, 0}, {0, 1}}, {{1, 0}, {0, 1}}},
      {"F3", {{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {{1, 1}}},
      {"F4", {{1, 1}, {1, 1}}, {{1, 0}, {0, 1}}},
      {"G1", {{1, 1}, {-1, 1}, {1, -1}}, {}},
      {"G2", {{1, 0}, {0, 1}, {-1, 1}, {1, -1}}, {}},
      {"G3", {{-1, 2}, {2, -1}}, {}},
      {"H1", {{1, -1}, {1, 1}, {0, 1}}, {{1, 0}}},
      {"H2", {{1, -1}, {1, 0}, {0, 1}, {0, 1}}, {{1, 0}}},
      {"H3", {{2, 1}, {0, 1}}, {{1, 1}}},
      {"H4", {{2, 1}, {0, 1}}, {{1, 0}, {0, 1}}},
      {"H5", {{2, 1}, {-1, 1}}, {{0, 1}}},
      {"H6", {{2, -1}, {-1, 1}, {0, 1}}, {}},
      {"H7", {{2, -1}, {0, 1}, {0, 1}}, {{1, 0}}},
  };
}

inline std::vector<NamedList> confluent_lists() {
  return {
      {"Phi1", {{1, 1}, {1, 0}}, {{1, 1}}},
      {"Phi2", {{1, 0}, {0, 1}}, {{1, 1}}},
      {"Phi3", {{1, 0}}, {{1, 1}}},
      {"Psi1", {{1, 1}, {1, 0}}, {{1, 0}, {0, 1}}},
      {"Psi2", {{1, 1}}, {{1, 0}, {0, 1}}},
      {"Xi1", {{1, 0}, {0, 1}, {1, 0}}, {{1, 1}}},
      {"Xi2", {{1, 0}, {1, 0}}, {{1, 1}}},
  };
}

}  // namespace oracle
