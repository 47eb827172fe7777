#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace cayley {

/// Exact group orders; symmetric groups of moderate degree overflow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Narrows to 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t to_u64(const BigInt& v);

}  // namespace cayley
