#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bpc {

// Arbitrary-precision counter.  Sequence values outgrow 64 bits well within
// argument ranges a CLI user can reasonably ask for, so counts are never
// machine integers.
using Count = boost::multiprecision::cpp_int;

}  // namespace bpc
