#include "edgesum/rational.hpp"

#include "edgesum/errors.hpp"

#include <cctype>
#include <limits>

namespace edgesum {

std::string to_fraction_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_fraction(const std::string& text) {
  const auto bad = [&] {
    throw UsageError("malformed fraction '" + text + "': expected p or p/q with integer p, q and q != 0");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const std::string num_text = text.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  const auto is_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (!is_integer(num_text, true) || !is_integer(den_text, false)) bad();
  // GMP rejects an explicit leading '+'.
  const BigInt num(num_text[0] == '+' ? num_text.substr(1) : num_text);
  const BigInt den(den_text);
  if (den == 0) bad();
  Rat r(num);
  r /= Rat(den);
  return r;
}

BigInt rat_ceil(const Rat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);  // > 0 canonical
  BigInt q = num / den;               // GMP: truncation toward zero
  if (num % den != 0 && num > 0) ++q;
  return q;
}

BigInt rat_floor(const Rat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw UsageError("binomial: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long step = 1; step <= k; ++step) {
    result *= BigInt(n - k + step);
    result /= BigInt(step);  // exact: product of `step` consecutive integers is divisible by step!
  }
  return result;
}

BigInt factorial(long long n) {
  if (n < 0) throw UsageError("factorial: n must be >= 0, got " + std::to_string(n));
  BigInt result = 1;
  for (long long step = 2; step <= n; ++step) result *= BigInt(step);
  return result;
}

BigInt pow10(int exponent) {
  if (exponent < 0) throw UsageError("pow10: exponent must be >= 0");
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

long long to_i64_checked(const BigInt& value, const char* context) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (value < lo || value > hi) {
    throw UsageError(std::string(context) + ": value " + value.str() + " does not fit in a 64-bit integer");
  }
  return value.convert_to<long long>();
}

}  // namespace edgesum
