#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace revpre {

/// Unbounded nonnegative counts (predecessor numbers grow like 2^n).
using BigInt = boost::multiprecision::cpp_int;

}  // namespace revpre
