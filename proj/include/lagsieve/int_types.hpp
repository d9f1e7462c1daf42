#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lagsieve {

// All arithmetic in this library is exact. Int/Rat are the only numeric
// carriers; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

inline Int int_pow(const Int& base, std::uint64_t e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

} // namespace lagsieve
