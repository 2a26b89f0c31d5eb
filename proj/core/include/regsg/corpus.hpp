#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regsg/semigroup.hpp"

namespace regsg::corpus {

  // Two element semilattice {0, 1}.
  FiniteSemigroup sl2();
  // 2 x 2 rectangular band, (i, j) is element 2i + j.
  FiniteSemigroup rb22();
  // Five element Brandt semigroup: 0, e, f, a, a' with aa' = e, a'a = f.
  FiniteSemigroup b2();
  // Full transformation monoids of degree 2 and 3.
  FiniteSemigroup t2();
  FiniteSemigroup t3();
  // Symmetric inverse monoid on two points.
  FiniteSemigroup i2();

  // {a, a^2, a^3} with a^4 = a^3. Not regular.
  FiniteSemigroup monogenic_nonregular();

  std::vector<std::string> names();

  // Throws Parse for an unknown name.
  FiniteSemigroup by_name(std::string_view name);

}  // namespace regsg::corpus
