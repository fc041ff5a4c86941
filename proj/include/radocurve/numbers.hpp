#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace radocurve {

// Unbounded natural number. Extension witnesses grow like 2^(max+1), so
// chains of extensions overflow any fixed width.
using Natural = boost::multiprecision::cpp_int;

// Coefficient of 2^x in the binary expansion of y (bit 0 = least significant).
int bit(const Natural& x, const Natural& y);

}  // namespace radocurve
