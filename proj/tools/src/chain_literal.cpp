#include "quatdirac_cli/chain_literal.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace quatdirac::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ChainSet parse() {
    std::vector<Chain> chains;
    const bool braced = accept('{');
    skip_ws();
    if (!at_end() && peek() != '}') {
      chains.push_back(chain());
      while (accept(',')) chains.push_back(chain());
    }
    if (braced) expect('}');
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    try {
      return ChainSet(std::move(chains));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("chain literal: ") + e.what());
    }
  }

 private:
  Chain chain() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('[')) {
      std::vector<Int> entries = int_list_until(']');
      expect('_');
      const ChainKind kind = kind_letter();
      return from_entries(entries, kind, start);
    }
    const ChainKind kind = kind_letter();
    expect(':');
    skip_ws();
    if (accept('[')) return from_entries(int_list_until(']'), kind, start);
    const Int first = integer();
    if (kind == ChainKind::u) return make(start, [&] { return Chain::u(first); });
    if (accept('-')) {
      const Int second = integer();
      return make(start, [&] { return Chain::s(first, second); });
    }
    return make(start, [&] { return Chain::s(first); });
  }

  Chain from_entries(const std::vector<Int>& e, ChainKind kind, std::size_t start) {
    if (e.empty()) fail_at(start, "empty chain");
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] != e[i - 1] - 2) fail_at(start, "chain entries must descend in steps of 2");
    }
    return make(start, [&] { return Chain(e.front(), e.back(), kind); });
  }

  template <typename F>
  Chain make(std::size_t start, F&& build) {
    try {
      return build();
    } catch (const std::invalid_argument& ex) {
      fail_at(start, ex.what());
    }
  }

  ChainKind kind_letter() {
    skip_ws();
    if (accept('s')) return ChainKind::s;
    if (accept('u')) return ChainKind::u;
    fail("expected 's' or 'u'");
  }

  std::vector<Int> int_list_until(char close) {
    std::vector<Int> out;
    skip_ws();
    if (accept(close)) return out;
    out.push_back(integer());
    while (accept(',')) out.push_back(integer());
    expect(close);
    return out;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail_at(start, "expected an integer");
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail_at(start, "integer out of range");
    }
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t where, const std::string& msg) const {
    throw std::invalid_argument("chain literal, column " + std::to_string(where + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ChainSet parse_chainset(std::string_view text) { return Parser(text).parse(); }

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::string item;
  auto flush = [&](bool last) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    std::string trimmed = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    if (trimmed.empty()) {
      if (last && out.empty()) return;
      throw std::invalid_argument("empty entry in integer list '" + std::string(text) + "'");
    }
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(trimmed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != trimmed.size() || used == 0) {
      throw std::invalid_argument("not an integer: '" + trimmed + "'");
    }
    out.push_back(v);
    item.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush(false);
    } else {
      item += c;
    }
  }
  flush(true);
  return out;
}

}  // namespace quatdirac::cli
