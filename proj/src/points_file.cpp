// Copyright 2026 The richdist Authors.
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

#include "richdist/points_file.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "richdist/errors.hpp"

namespace richdist {

namespace {

constexpr std::string_view kMagic = "richdist";
constexpr long kVersion = 1;

void append_coefficients(std::string& out, const CycloNum& value) {
  for (std::size_t i = 0; i < value.degree(); ++i) {
    out += ' ';
    out += to_string(value.coefficient(i));
  }
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t')) ++pos;
      if (pos >= raw.size()) break;
      const std::size_t begin = pos;
      while (pos < raw.size() && raw[pos] != ' ' && raw[pos] != '\t') ++pos;
      line.tokens.push_back(Token{raw.substr(begin, pos - begin), begin + 1});
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && lines.back().tokens.empty()) lines.pop_back();
  return lines;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  PointSet run(std::optional<long> expected_order) {
    const Line& header = next_line();
    expect_count(header, 2);
    if (header.tokens[0].text != kMagic) fail(header, 0, "expected 'richdist'");
    if (parse_integer(header, 1) != kVersion) fail(header, 1, "unsupported format version");

    const Line& field_line = next_line();
    expect_count(field_line, 2);
    if (field_line.tokens[0].text != "cyclo") fail(field_line, 0, "expected 'cyclo'");
    const long order = parse_integer(field_line, 1);
    if (order < 1) fail(field_line, 1, "field order must be positive");
    if (expected_order && *expected_order != order) {
      fail(field_line, 1,
           "field order mismatch: expected " + std::to_string(*expected_order) + ", found " +
               std::to_string(order));
    }
    field_ = cyclotomic_field(order);

    const Line& count_line = next_line();
    expect_count(count_line, 2);
    if (count_line.tokens[0].text != "points") fail(count_line, 0, "expected 'points'");
    const long count = parse_integer(count_line, 1);

    std::vector<CycloNum> points;
    std::unordered_map<CycloNum, std::size_t, CycloNumHash> seen;
    for (long i = 0; i < count; ++i) {
      const Line& line = next_line();
      expect_count(line, field_->degree());
      points.push_back(parse_value(line, 0));
      const auto [it, fresh] = seen.emplace(points.back(), points.size() - 1);
      if (!fresh) fail(line, 0, "duplicate of point " + std::to_string(it->second));
    }
    PointSet listed = [&] {
      try {
        return PointSet::from_points(field_, std::move(points));
      } catch (const DegeneracyError& e) {
        fail(count_line, 1, e.what());
      }
    }();
    if (cursor_ == lines_.size()) return listed;

    const Line& log_line = next_line();
    expect_count(log_line, 2);
    if (log_line.tokens[0].text != "log") fail(log_line, 0, "expected 'log' or end of file");
    const long entries = parse_integer(log_line, 1);
    TransformLog log;
    for (long i = 0; i < entries; ++i) log.entries.push_back(parse_transform(next_line()));
    if (cursor_ != lines_.size()) fail(lines_[cursor_], 0, "unexpected trailing content");

    PointSet replayed = [&] {
      try {
        return replay(log);
      } catch (const std::exception& e) {
        fail(log_line, 0, std::string("log does not replay: ") + e.what());
      }
    }();
    if (replayed.field()->order() != order || replayed.points() != listed.points()) {
      fail(log_line, 0, "log does not reproduce the listed points");
    }
    return replayed;
  }

 private:
  [[noreturn]] void fail(const Line& line, std::size_t token, const std::string& what) const {
    const std::size_t column = token < line.tokens.size() ? line.tokens[token].column : 1;
    throw ParseError(line.number, column, what);
  }

  const Line& next_line() {
    if (cursor_ >= lines_.size()) {
      const std::size_t number = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(number, 1, "unexpected end of input");
    }
    return lines_[cursor_++];
  }

  void expect_count(const Line& line, std::size_t count) const {
    if (line.tokens.size() != count) {
      fail(line, std::min(count, line.tokens.size()),
           "expected " + std::to_string(count) + " fields, found " +
               std::to_string(line.tokens.size()));
    }
  }

  long parse_integer(const Line& line, std::size_t token) const {
    const std::string_view text = line.tokens.at(token).text;
    if (!is_digits(text) || text.size() > 12) fail(line, token, "expected a non-negative integer");
    return std::stol(std::string(text));
  }

  Rational parse_rational(const Line& line, std::size_t token) const {
    std::string_view text = line.tokens.at(token).text;
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!is_digits(digits) || !is_digits(den)) fail(line, token, "malformed rational '" + std::string(text) + "'");
    const Integer n{std::string(num)};
    const Integer d{std::string(den)};
    if (d == 0) fail(line, token, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  CycloNum parse_value(const Line& line, std::size_t first) const {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < field_->degree(); ++i) coeffs.push_back(parse_rational(line, first + i));
    return CycloNum::from_coefficients(field_, coeffs);
  }

  std::optional<std::size_t> parse_source(const Line& line, std::size_t token) const {
    if (line.tokens.at(token).text == "*") return std::nullopt;
    return static_cast<std::size_t>(parse_integer(line, token));
  }

  Transform parse_transform(const Line& line) const {
    if (line.tokens.empty()) fail(line, 0, "expected a transform");
    const std::string_view kind = line.tokens[0].text;
    const std::size_t d = field_->degree();
    if (kind == "polygon") {
      expect_count(line, 2);
      return BasePolygon{static_cast<int>(parse_integer(line, 1))};
    }
    if (kind == "rotate") {
      expect_count(line, 3 + d);
      const auto source = parse_source(line, 1);
      std::optional<Turn> turn;
      try {
        turn = Turn::parse(line.tokens[2].text);
      } catch (const std::invalid_argument& e) {
        fail(line, 2, e.what());
      }
      return Rotation{source, parse_value(line, 3), *turn};
    }
    if (kind == "reflect") {
      expect_count(line, 2 + 2 * d);
      return Reflection{parse_source(line, 1), parse_value(line, 2), parse_value(line, 2 + d)};
    }
    fail(line, 0, "unknown transform '" + std::string(kind) + "'");
  }

  std::vector<Line> lines_;
  std::size_t cursor_ = 0;
  FieldPtr field_;
};

}  // namespace

std::string serialize_points(const PointSet& ps) {
  std::string out;
  out += std::string(kMagic) + " " + std::to_string(kVersion) + "\n";
  out += "cyclo " + std::to_string(ps.field()->order()) + "\n";
  out += "points " + std::to_string(ps.size()) + "\n";
  for (const auto& p : ps.points()) {
    std::string line;
    append_coefficients(line, p);
    out += line.substr(1) + "\n";
  }
  if (ps.log().entries.empty()) return out;
  out += "log " + std::to_string(ps.log().entries.size()) + "\n";
  auto source = [](const std::optional<std::size_t>& s) {
    return s ? std::to_string(*s) : std::string("*");
  };
  for (const auto& entry : ps.log().entries) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, BasePolygon>) {
            out += "polygon " + std::to_string(e.sides);
          } else if constexpr (std::is_same_v<T, Rotation>) {
            out += "rotate " + source(e.source_copy) + " " + e.turn.to_string();
            append_coefficients(out, e.center);
          } else {
            out += "reflect " + source(e.source_copy);
            append_coefficients(out, e.a);
            append_coefficients(out, e.b);
          }
        },
        entry);
    out += "\n";
  }
  return out;
}

PointSet parse_points(std::string_view text, std::optional<long> expected_order) {
  return Parser(text).run(expected_order);
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open points file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_points(buffer.str());
}

void write_points_file(const std::string& path, const PointSet& ps) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write points file '" + path + "'");
  out << serialize_points(ps);
  if (!out) throw Error("failed writing points file '" + path + "'");
}

}  // namespace richdist
