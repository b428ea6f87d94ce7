#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace starmerge {

/// Exact arbitrary-precision integer; all counting results use this.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace starmerge
