#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cutpoly {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

}  // namespace cutpoly
