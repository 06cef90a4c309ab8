#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monodromy {

// Exact integers everywhere: twist powers and certificate replay make entries
// grow without bound, so no fixed-width type is safe.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace monodromy
