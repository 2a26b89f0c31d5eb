#include "regsg/corpus.hpp"

#include "regsg/error.hpp"

namespace regsg::corpus {

  FiniteSemigroup sl2() {
    return from_cayley({{0, 0}, {0, 1}}, "SL2");
  }

  FiniteSemigroup rb22() {
    std::vector<std::vector<Element>> table(4, std::vector<Element>(4));
    std::vector<std::string>          labels;
    for (Element x = 0; x < 4; ++x) {
      labels.push_back("(" + std::to_string(x / 2) + "," + std::to_string(x % 2) + ")");
      for (Element y = 0; y < 4; ++y) {
        table[x][y] = 2 * (x / 2) + y % 2;
      }
    }
    return from_cayley(table, "RB22", labels);
  }

  FiniteSemigroup b2() {
    // Matrix units e_ij of 2 x 2 matrices, plus zero.
    struct Unit {
      int i, j;
    };
    Unit const units[] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}};
    std::vector<std::vector<Element>> table(5, std::vector<Element>(5, 0));
    for (Element x = 1; x < 5; ++x) {
      for (Element y = 1; y < 5; ++y) {
        if (units[x].j != units[y].i) {
          continue;
        }
        for (Element z = 1; z < 5; ++z) {
          if (units[z].i == units[x].i && units[z].j == units[y].j) {
            table[x][y] = z;
          }
        }
      }
    }
    return from_cayley(table, "B2", {"0", "e", "f", "a", "a'"});
  }

  FiniteSemigroup t2() {
    return from_generators(2, {{1, 0}, {0, 0}}, "T2");
  }

  FiniteSemigroup t3() {
    return from_generators(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, "T3");
  }

  FiniteSemigroup i2() {
    // Point 2 is a sink standing for "undefined".
    return from_generators(3, {{1, 0, 2}, {0, 2, 2}}, "I2");
  }

  FiniteSemigroup monogenic_nonregular() {
    return from_cayley({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}},
                       "monogenic",
                       {"a", "a^2", "a^3"});
  }

  std::vector<std::string> names() {
    return {"SL2", "RB22", "B2", "T2", "I2", "T3"};
  }

  FiniteSemigroup by_name(std::string_view name) {
    if (name == "SL2") {
      return sl2();
    } else if (name == "RB22") {
      return rb22();
    } else if (name == "B2") {
      return b2();
    } else if (name == "T2") {
      return t2();
    } else if (name == "I2") {
      return i2();
    } else if (name == "T3") {
      return t3();
    }
    throw Error(ErrorKind::Parse, "unknown corpus member '" + std::string(name) + "'");
  }

}  // namespace regsg::corpus
