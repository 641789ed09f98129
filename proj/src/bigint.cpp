#include "hilbinv/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace hilbinv {

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_decimal(const BigRational& value) {
  return to_decimal(numerator(value)) + "/" + to_decimal(denominator(value));
}

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt out(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-out) : out;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace hilbinv
