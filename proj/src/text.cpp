//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "wirtinger/core.hpp"

namespace wirtinger {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw ConfigError("invalid complex literal '" + std::string(text) + "': " + why);
}

// Signed decimal with optional leading '+'; the whole string must be consumed.
double parse_real(std::string_view part, std::string_view whole) {
  if (part.empty()) bad_literal(whole, "missing number");
  bool negative = false;
  if (part.front() == '+' || part.front() == '-') {
    negative = part.front() == '-';
    part.remove_prefix(1);
  }
  // from_chars would accept "inf"/"nan"; require a digit or '.' up front.
  if (part.empty() || !(std::isdigit(static_cast<unsigned char>(part.front())) || part.front() == '.')) {
    bad_literal(whole, "expected a number");
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
  if (ec == std::errc::result_out_of_range) bad_literal(whole, "value out of range");
  if (ec != std::errc() || ptr != part.data() + part.size()) bad_literal(whole, "unexpected characters");
  if (!std::isfinite(value)) bad_literal(whole, "value is not finite");
  return negative ? -value : value;
}

// Coefficient of an imaginary term with its trailing 'i' removed: "", "+",
// "-" stand for +-1.
double parse_imag_coefficient(std::string_view part, std::string_view whole) {
  if (part.empty() || part == "+") return 1.0;
  if (part == "-") return -1.0;
  return parse_real(part, whole);
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) return std::to_string(v);
  return {buf.data(), ptr};
}

Complex parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) bad_literal(text, "empty");

  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body(s.data(), s.size() - 1);
  // The real/imaginary split is the last sign that is not at the front and
  // not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(body, text)};
  return {parse_real(body.substr(0, split), text), parse_imag_coefficient(body.substr(split), text)};
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string out = format_real(z.real());
  const double im = z.imag();
  if (std::signbit(im) && !std::isnan(im)) {
    out += "-" + format_real(-im);
  } else {
    out += "+" + format_real(im);
  }
  return out + "i";
}

Tensor parse_complex_vector(std::string_view text) {
  std::vector<Complex> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    entries.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Tensor::FlatVector v(static_cast<Index>(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) v(static_cast<Index>(k)) = entries[k];
  return Tensor::vector(v);
}

std::string format_tensor(const Tensor& t) {
  if (t.rank() == 0) return format_complex(t.item());
  std::string out = "[";
  for (Index r = 0; r < t.shape().rows(); ++r) {
    if (r > 0) out += t.rank() == 1 ? ", " : "; ";
    for (Index c = 0; c < t.shape().cols(); ++c) {
      if (c > 0) out += ", ";
      out += format_complex(t(r, c));
    }
  }
  return out + "]";
}

}  // namespace wirtinger
