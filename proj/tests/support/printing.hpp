#pragma once

#include <ostream>

#include "cerf/surface.hpp"

namespace cerf {

// Readable gtest failure output.
inline void PrintTo(const HomologyClass& c, std::ostream* os) { *os << c.label(); }

} // namespace cerf
