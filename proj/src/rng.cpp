#include "qwalk/rng.hpp"

namespace qwalk::rng {

// Reference values of the published SplitMix64 generator (state 1234567).
static_assert(draw(1234567, 0) == 6457827717110365317ULL);
static_assert(draw(1234567, 1) == 3203168211198807973ULL);

}  // namespace qwalk::rng
