#include "hmi/rational.hpp"

#include <cctype>
#include <string>

#include "hmi/error.hpp"

namespace hmi {
namespace {

BigInt parse_integer(std::string_view digits, std::size_t base_offset) {
  if (digits.empty()) throw ParseError("expected digits", base_offset);
  BigInt value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("expected digit", base_offset + i);
    value = value * 10 + (digits[i] - '0');
  }
  return value;
}

BigInt pow10(long exponent) {
  BigInt value = 1;
  for (long i = 0; i < exponent; ++i) value *= 10;
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty number", begin);

  bool negative = false;
  std::size_t pos = 0;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    pos = 1;
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(body.substr(pos, slash - pos), begin + pos);
    BigInt den = parse_integer(body.substr(slash + 1), begin + slash + 1);
    if (den == 0) throw ParseError("zero denominator", begin + slash + 1);
    result = Rational(num, den);
  } else {
    std::string_view mantissa = body.substr(pos);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = mantissa.substr(e + 1);
      bool exp_negative = false;
      std::size_t exp_pos = 0;
      if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
        exp_negative = exp_text[0] == '-';
        exp_pos = 1;
      }
      BigInt magnitude = parse_integer(exp_text.substr(exp_pos), begin + pos + e + 1 + exp_pos);
      if (magnitude > 4096) throw ParseError("exponent out of range", begin + pos + e + 1);
      exponent = magnitude.convert_to<long>();
      if (exp_negative) exponent = -exponent;
      mantissa = mantissa.substr(0, e);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
      fraction_digits = static_cast<long>(mantissa.size() - dot - 1);
      if (digits.empty()) throw ParseError("expected digits", begin + pos);
    } else {
      digits = std::string(mantissa);
    }
    BigInt num = parse_integer(digits, begin + pos);
    long scale = exponent - fraction_digits;
    result = scale >= 0 ? Rational(num * pow10(scale)) : Rational(num, pow10(-scale));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt factorial(unsigned n) {
  BigInt value = 1;
  for (unsigned i = 2; i <= n; ++i) value *= i;
  return value;
}

}  // namespace hmi
