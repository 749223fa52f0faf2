#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace turan
