#include <cctype>
#include <string>

#include "dicot/errors.hpp"
#include "dicot/notation.hpp"

namespace dicot {
namespace {

class Parser {
 public:
  Parser(Store& store, std::string_view text) : store_(store), text_(text) {}

  FormId parse_all() {
    const FormId result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
    ++pos_;
  }

  FormId expr() {
    FormId acc = term();
    while (peek() == '+') {
      ++pos_;
      acc = store_.sum(acc, term());
    }
    return acc;
  }

  FormId term() {
    if (peek() == '-') {
      ++pos_;
      return store_.conjugate(game());
    }
    return game();
  }

  FormId game() {
    const char c = peek();
    if (c == '0') {
      ++pos_;
      return store_.zero();
    }
    if (c == '*') {
      ++pos_;
      return store_.nimber(nimber_index());
    }
    if (c == '{') {
      const std::size_t open = pos_++;
      std::vector<FormId> left = list('|');
      expect('|');
      std::vector<FormId> right = list('}');
      expect('}');
      if (left.empty() != right.empty()) {
        throw DicotViolation("form opened at position " + std::to_string(open) +
                             " has exactly one empty side");
      }
      return store_.intern(std::move(left), std::move(right));
    }
    if (c == '\0') fail("expected a game before end of input");
    fail("expected a game, found '" + std::string(1, c) + "'");
  }

  // The digits are part of the '*' token, so "* 2" is a syntax error.
  unsigned nimber_index() {
    const std::size_t start = pos_;
    unsigned long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (n > kMaxNimberShorthand) {
        pos_ = start;
        fail("nimber shorthand is limited to *" + std::to_string(kMaxNimberShorthand));
      }
      ++pos_;
    }
    if (pos_ == start) return 1;
    if (n == 0) {
      pos_ = start;
      fail("'*0' is not allowed, write '0'");
    }
    return static_cast<unsigned>(n);
  }

  std::vector<FormId> list(char terminator) {
    std::vector<FormId> items;
    if (peek() == terminator) return items;
    items.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      items.push_back(expr());
    }
    return items;
  }

  Store& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Store& store, FormId g, std::string& out) {
  if (auto n = store.nimber_value(g); n && *n <= kMaxNimberShorthand) {
    if (*n == 0) {
      out += '0';
    } else {
      out += '*';
      if (*n > 1) out += std::to_string(*n);
    }
    return;
  }
  const auto side = [&](std::span<const FormId> ids) {
    bool first = true;
    for (FormId x : ids) {
      if (!first) out += ',';
      first = false;
      print_into(store, x, out);
    }
  };
  out += '{';
  side(store.left(g));
  out += '|';
  side(store.right(g));
  out += '}';
}

}  // namespace

FormId parse(Store& store, std::string_view text) { return Parser(store, text).parse_all(); }

std::string print(const Store& store, FormId g) {
  std::string out;
  print_into(store, g, out);
  return out;
}

}  // namespace dicot
