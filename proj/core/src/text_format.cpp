#include "itergroup/text_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace itergroup {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " in \"" + std::string(text) + "\"");
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::optional<Point> number() {
    skip_space();
    Point value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc()) return std::nullopt;
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Permutation parse_images(std::string_view text, std::optional<std::size_t> degree) {
  Cursor cur(text);
  cur.eat('[');
  std::vector<Point> img;
  if (!cur.eat(']')) {
    do {
      auto v = cur.number();
      if (!v) parse_fail(text, "expected a point");
      img.push_back(*v);
    } while (cur.eat(','));
    if (!cur.eat(']')) parse_fail(text, "expected ']'");
  }
  if (!cur.done()) parse_fail(text, "trailing characters");
  if (degree && *degree != img.size()) {
    throw Error(ErrorCode::DegreeMismatch, "image list has length " + std::to_string(img.size()) +
                                               ", expected " + std::to_string(*degree));
  }
  return Permutation::from_images(img);
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Cursor cur(text);
  std::vector<Cycle> cycles;
  while (!cur.done()) {
    if (!cur.eat('(')) parse_fail(text, "expected '('");
    Cycle c;
    while (!cur.eat(')')) {
      auto v = cur.number();
      if (!v) parse_fail(text, "expected a point or ')'");
      c.push_back(*v);
      cur.eat(',');
    }
    if (c.size() >= 2) cycles.push_back(std::move(c));
    else if (c.size() == 1 && (c[0] < 1 || c[0] > degree)) {
      throw Error(ErrorCode::MalformedCycles, "point " + std::to_string(c[0]) + " out of range");
    }
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree) {
  Cursor probe(text);
  if (probe.eat('[')) return parse_images(text, degree);
  if (!degree) {
    throw Error(ErrorCode::InvalidArgument, "cycle notation needs an explicit degree");
  }
  return parse_cycles(text, *degree);
}

std::string format_cycles(const Permutation& p) {
  const auto d = decompose(p);
  if (d.cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : d.cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::string format_images(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (Point i = 1; i <= p.degree(); ++i) os << (i > 1 ? "," : "") << p(i);
  os << ']';
  return os.str();
}

std::string format_permutation(const Permutation& p, PermFormat fmt) {
  return fmt == PermFormat::Cycles ? format_cycles(p) : format_images(p);
}

PermFormat parse_perm_format(std::string_view name) {
  if (name == "cycles") return PermFormat::Cycles;
  if (name == "images") return PermFormat::Images;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

}  // namespace itergroup
