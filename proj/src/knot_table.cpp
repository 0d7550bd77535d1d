#include "ternhom/knot.hpp"

namespace ternhom {

const std::vector<KnotTableEntry>& knot_table() {
  static const std::vector<KnotTableEntry> table = {
      {"3_1", "[1,1,1]", 72, 36},
      {"7_4", "[1,1,2,-1,2,2,3,-2,3]", 72, 36},
      {"7_7", "[1,-2,1,-2,3,-2,3]", 72, 36},
      {"8_5", "[1,1,1,-2,1,1,1,-2]", 72, 36},
      {"8_15", "[1,1,-2,1,3,2,2,2,3]", 72, 36},
      {"8_18", "[1,-2,1,-2,1,-2,1,-2]", 180, 144},
      {"8_19", "[1,1,1,2,1,1,1,2]", 72, 36},
      {"8_21", "[1,1,1,2,-1,-1,2,2]", 72, 36},
      {"9_2", "[1,1,1,2,-1,2,3,-2,3,4,-3,4]", 72, 36},
      {"9_4", "[1,1,1,1,1,2,-1,2,3,-2,3]", 72, 36},
      {"9_10", "[1,1,2,-1,2,2,2,2,3,-2,3]", 72, 36},
      {"9_11", "[1,1,1,1,-2,1,3,-2,3]", 72, 36},
      {"9_15", "[1,1,1,2,-1,-3,2,4,-3,4]", 72, 36},
      {"9_16", "[1,1,1,1,2,2,-1,2,2,2]", 72, 36},
      {"9_17", "[1,-2,1,-2,-2,-2,3,-2,3]", 72, 36},
      {"9_28", "[1,1,-2,1,3,-2,-2,3,3]", 72, 36},
      {"9_29", "[1,-2,-2,3,-2,1,-2,3,-2]", 72, 36},
      {"9_34", "[1,-2,1,-2,3,-2,1,-2,3]", 72, 36},
      {"9_35", "[1,1,2,-1,2,2,3,-2,-2,4,-3,2,4,3]", 180, 108},
      {"9_37", "[1,1,-2,1,3,-2,-1,-4,3,-2,3,-4]", 180, 72},
      {"9_38", "[1,1,2,2,-3,2,-1,2,3,3,2]", 72, 36},
      {"9_40", "[1,-2,1,3,-2,1,3,-2,3]", 72, 36},
      {"9_46", "[1,-2,1,-2,3,2,-1,2,3]", 180, 72},
      {"9_47", "[1,-2,1,-2,-3,-2,1,-2,-3]", 180, 108},
      {"9_48", "[1,1,2,-1,2,1,-3,2,-1,2,-3]", 180, 108},
  };
  return table;
}

}  // namespace ternhom
