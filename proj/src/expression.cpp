#include "m0n/expression.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "m0n/error.hpp"

namespace m0n {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Monomial parse() {
    expect('n');
    expect('=');
    const std::size_t n_pos = peek_position();
    const std::int64_t n = integer();
    if (n < 3 || n > std::numeric_limits<Label>::max() / 2) {
      throw Error(ErrorCode::SyntaxError, "n must be at least 3", n_pos);
    }
    expect(';');
    Monomial m(static_cast<int>(n));
    skip_space();
    if (!at_end() && text_[pos_] == 'd') {
      factor(m);
      while (accept('*')) factor(m);
    } else {
      const std::size_t one_pos = peek_position();
      if (at_end() || integer() != 1) {
        throw Error(ErrorCode::SyntaxError, "expected a factor d(...) or the constant 1",
                    one_pos);
      }
    }
    skip_space();
    if (!at_end()) throw Error(ErrorCode::SyntaxError, "unexpected trailing input", pos_);
    return m;
  }

 private:
  void factor(Monomial& m) {
    const std::size_t start = peek_position();
    expect('d');
    expect('(');
    LabelSet first = part(m.ambient());
    expect('|');
    LabelSet second = part(m.ambient());
    expect(')');
    std::int64_t exponent = 1;
    if (accept('^')) {
      const std::size_t exp_pos = peek_position();
      exponent = integer();
      if (exponent < 1) throw Error(ErrorCode::SyntaxError, "exponent must be positive", exp_pos);
    }
    try {
      m.multiply(canonicalize_cut(std::move(first), std::move(second), m.ambient()), exponent);
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), start);
    }
  }

  LabelSet part(int n) {
    std::vector<Label> labels;
    do {
      const std::size_t at = peek_position();
      const std::int64_t label = integer();
      if (label < 1 || label > n) {
        throw Error(ErrorCode::AmbientMismatch,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(n), at);
      }
      for (Label l : labels) {
        if (l == label) {
          throw Error(ErrorCode::DuplicateLabelInPart,
                      "label " + std::to_string(label) + " repeated", at);
        }
      }
      labels.push_back(static_cast<Label>(label));
    } while (accept(','));
    return LabelSet(std::move(labels));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw Error(ErrorCode::SyntaxError, "integer too large", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw Error(ErrorCode::SyntaxError, "expected an integer", start);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || text_[pos_] != c) {
      throw Error(ErrorCode::SyntaxError, std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (at_end() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }

  std::size_t peek_position() {
    skip_space();
    return pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text) { return Parser(text).parse(); }

std::string render_monomial(const Monomial& m) {
  std::string out = "n=" + std::to_string(m.ambient()) + "; ";
  if (m.empty()) return out + "1";
  bool first = true;
  for (const auto& [cut, e] : m.factors()) {
    if (!first) out += " * ";
    out += "d(" + to_string(cut) + ")";
    if (e != 1) out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

}  // namespace m0n
