#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace plumbstein {

using Integer = boost::multiprecision::cpp_int;

}  // namespace plumbstein
