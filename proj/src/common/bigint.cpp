#include "polyoracle/common/bigint.hpp"

#include "polyoracle/common/error.hpp"

namespace polyoracle {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from) {
    throw Error(ErrorKind::MalformedInput, "empty integer literal");
  }
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorKind::MalformedInput, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::size_t bit_length(const BigInt& value) {
  if (sgn(value) == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace polyoracle
