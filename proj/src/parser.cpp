// Copyright 2026 The feq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "feq/compiler.hpp"
#include "feq/constants.hpp"
#include "feq/error.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace feq {

namespace {

struct ParseFailure {
  std::string message;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto &ch : out)
    ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (s.empty())
    return std::nullopt;
  const std::string buf(s);
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v))
    return std::nullopt;
  return v;
}

// "<coef>pi[/<den>]", "<coef>*pi", or plain radians.
double parse_angle(std::string_view text) {
  const std::string s = upper(trim(text));
  const auto pos = s.find("PI");
  if (pos == std::string::npos) {
    if (auto v = parse_real(s))
      return *v;
    throw ParseFailure{"malformed angle '" + std::string(text) + "'"};
  }
  std::string coef = s.substr(0, pos);
  std::string rest = s.substr(pos + 2);
  if (!coef.empty() && coef.back() == '*')
    coef.pop_back();
  double c = 1.0;
  if (coef == "-")
    c = -1.0;
  else if (!coef.empty() && coef != "+") {
    auto v = parse_real(coef);
    if (!v)
      throw ParseFailure{"malformed angle '" + std::string(text) + "'"};
    c = *v;
  }
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/')
      throw ParseFailure{"malformed angle '" + std::string(text) + "'"};
    auto v = parse_real(std::string_view(rest).substr(1));
    if (!v || *v == 0.0)
      throw ParseFailure{"malformed angle '" + std::string(text) + "'"};
    den = *v;
  }
  return c * constants::pi / den;
}

// "re", "im i", "re+im i", "re-im i"; 'j' is accepted for 'i'.
complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s.empty())
    throw ParseFailure{"empty matrix entry"};
  const char last = static_cast<char>(std::tolower(static_cast<unsigned char>(s.back())));
  if (last != 'i' && last != 'j') {
    if (auto v = parse_real(s))
      return {*v, 0.0};
    throw ParseFailure{"malformed matrix entry '" + s + "'"};
  }
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = 0;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_part = s.substr(0, split);
  const std::string im_part = s.substr(split);
  double re = 0.0;
  if (!re_part.empty()) {
    auto v = parse_real(re_part);
    if (!v)
      throw ParseFailure{"malformed matrix entry '" + std::string(text) + "'"};
    re = *v;
  }
  double im = 0.0;
  if (im_part.empty() || im_part == "+")
    im = 1.0;
  else if (im_part == "-")
    im = -1.0;
  else {
    auto v = parse_real(im_part);
    if (!v)
      throw ParseFailure{"malformed matrix entry '" + std::string(text) + "'"};
    im = *v;
  }
  return {re, im};
}

QubitGate parse_matrix(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
    throw ParseFailure{"matrix must be written [[a,b],[c,d]]"};
  const std::string body = s.substr(2, s.size() - 4);
  const auto sep = body.find("],[");
  if (sep == std::string::npos)
    throw ParseFailure{"matrix must be written [[a,b],[c,d]]"};
  const std::string rows[2] = {body.substr(0, sep), body.substr(sep + 3)};
  QubitGate m;
  for (int r = 0; r < 2; ++r) {
    const auto comma = rows[r].find(',');
    if (comma == std::string::npos || rows[r].find(',', comma + 1) != std::string::npos)
      throw ParseFailure{"each matrix row needs exactly two entries"};
    m(r, 0) = parse_complex(std::string_view(rows[r]).substr(0, comma));
    m(r, 1) = parse_complex(std::string_view(rows[r]).substr(comma + 1));
  }
  if (!is_unitary(m, 1e-9))
    throw ParseFailure{"matrix is not unitary"};
  return m;
}

Gate parse_gate(std::string_view line) {
  if (!line.empty() && (line[0] == 'U' || line[0] == 'u') &&
      (line.size() == 1 || line[1] == ' ' || line[1] == '\t' || line[1] == '[')) {
    return Gate::custom(parse_matrix(line.substr(1)));
  }
  const auto paren = line.find('(');
  if (paren != std::string_view::npos) {
    const std::string name = upper(trim(line.substr(0, paren)));
    if (line.back() != ')')
      throw ParseFailure{"missing ')' in '" + std::string(line) + "'"};
    Gate::Kind kind;
    if (name == "RX")
      kind = Gate::Kind::Rx;
    else if (name == "RY")
      kind = Gate::Kind::Ry;
    else if (name == "RZ")
      kind = Gate::Kind::Rz;
    else
      throw ParseFailure{"unknown gate '" + name + "'"};
    const double theta = parse_angle(line.substr(paren + 1, line.size() - paren - 2));
    return Gate::rotation(kind, theta);
  }
  const std::string name = upper(line);
  static const std::pair<const char *, Gate::Kind> named[] = {
      {"H", Gate::Kind::H}, {"X", Gate::Kind::X}, {"Y", Gate::Kind::Y},
      {"Z", Gate::Kind::Z}, {"S", Gate::Kind::S}, {"T", Gate::Kind::T},
      {"NOT", Gate::Kind::Not}};
  for (const auto &[mnemonic, kind] : named)
    if (name == mnemonic)
      return Gate::named(kind);
  throw ParseFailure{"unknown gate '" + std::string(line) + "'"};
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

} // namespace

QubitGate Gate::unitary() const {
  constexpr complex i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  QubitGate m;
  switch (kind) {
  case Kind::H:
    m << r, r, r, -r;
    return m;
  case Kind::X:
  case Kind::Not:
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
  case Kind::Y:
    m << 0.0, -i, i, 0.0;
    return m;
  case Kind::Z:
    return rz_gate(constants::pi);
  case Kind::S:
    return rz_gate(constants::pi / 2.0);
  case Kind::T:
    return rz_gate(constants::pi / 4.0);
  case Kind::Rx:
    return rx_gate(angle);
  case Kind::Ry:
    return ry_gate(angle);
  case Kind::Rz:
    return rz_gate(angle);
  case Kind::Matrix:
    return matrix;
  }
  return QubitGate::Identity();
}

Circuit parse_circuit(std::string_view source) {
  Circuit circuit;
  circuit.source = std::string(source);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    auto end = source.find('\n', start);
    if (end == std::string_view::npos)
      end = source.size();
    std::string_view line = source.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line); // also strips a CR from CRLF input
    if (!line.empty()) {
      try {
        circuit.gates.push_back(parse_gate(line));
      } catch (const ParseFailure &f) {
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + f.message);
      }
    }
    if (end == source.size())
      break;
    start = end + 1;
  }
  if (circuit.gates.empty())
    fail(ErrorKind::Parse, "circuit contains no gates");
  return circuit;
}

std::string unparse(const Gate &gate) {
  switch (gate.kind) {
  case Gate::Kind::H:
    return "H";
  case Gate::Kind::X:
    return "X";
  case Gate::Kind::Y:
    return "Y";
  case Gate::Kind::Z:
    return "Z";
  case Gate::Kind::S:
    return "S";
  case Gate::Kind::T:
    return "T";
  case Gate::Kind::Not:
    return "NOT";
  case Gate::Kind::Rx:
    return "RX(" + format_real(gate.angle) + ")";
  case Gate::Kind::Ry:
    return "RY(" + format_real(gate.angle) + ")";
  case Gate::Kind::Rz:
    return "RZ(" + format_real(gate.angle) + ")";
  case Gate::Kind::Matrix: {
    const auto &m = gate.matrix;
    return "U [[" + format_complex(m(0, 0)) + ", " + format_complex(m(0, 1)) + "], [" +
           format_complex(m(1, 0)) + ", " + format_complex(m(1, 1)) + "]]";
  }
  }
  return {};
}

std::string unparse(const Circuit &circuit) {
  std::string out;
  for (const auto &g : circuit.gates) {
    out += unparse(g);
    out += '\n';
  }
  return out;
}

} // namespace feq
