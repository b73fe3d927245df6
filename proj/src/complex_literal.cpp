#include "lerchsum/complex_literal.hpp"

#include <charconv>
#include <cmath>

namespace lerchsum {

namespace {

std::string shortest(double x) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, end);
}

std::optional<double> parse_real(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // from_chars rejects a leading '+'; the grammar allows it only as the
  // separator, which the caller has already stripped.
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

std::string format_complex_literal(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0 && !std::signbit(im)) return shortest(re);
  if (re == 0.0 && !std::signbit(re)) return shortest(im) + "i";
  std::string out = shortest(re);
  if (!std::signbit(im)) out += '+';
  return out + shortest(im) + "i";
}

std::optional<Complex> parse_complex_literal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // The separator is the last sign that is not the leading sign and does not
  // follow an exponent marker.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_real(body);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  const auto re = parse_real(body.substr(0, split));
  std::string_view im_text = body.substr(split);
  if (im_text.front() == '+') im_text.remove_prefix(1);
  const auto im = parse_real(im_text);
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

}  // namespace lerchsum
