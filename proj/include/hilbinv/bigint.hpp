#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Decimal rendering, the wire format for every big integer we emit.
std::string to_decimal(const BigInt& value);
std::string to_decimal(const BigRational& value);

// Throws std::invalid_argument on anything but an optionally signed run of digits.
BigInt parse_decimal(std::string_view text);

// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const BigInt& value);

}  // namespace hilbinv
