#include "pisot/fixtures.hpp"

namespace pisot {

NumerationSystem fixture_phi2() { return NumerationSystem("phi2", {3, -1}, {1, 3}); }

NumerationSystem fixture_zeckendorf() { return NumerationSystem("zeckendorf", {1, 1}, {1, 2}); }

}  // namespace pisot
