#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rmc {

/// Arbitrary-precision natural number. Word lengths, step counts and padding
/// sizes all use it; padding blocks routinely exceed 64 bits.
using Nat = boost::multiprecision::cpp_int;

inline std::string to_string(const Nat& n) { return n.str(); }

/// Narrowing conversion; throws std::overflow_error when `n` does not fit.
std::size_t to_size(const Nat& n);

/// ceil(log2(n)) for n >= 1.
unsigned ceil_log2(std::uint64_t n);

}  // namespace rmc
