#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mds/errors.hpp"
#include "mds/system.hpp"

namespace mds {

// Text format, one definition per line:
//
//   n = 4
//   f1 = x3
//   f2 = x1 * x4
//   f3 = x4
//   f4 = x1
//
// The header is mandatory and comes first. Definitions may appear in any
// order but each f_i must appear exactly once. A right-hand side is "0",
// "1", or a '*'-separated product of variables. Blank lines and lines whose
// first non-blank character is '#' are ignored. Whitespace between tokens
// is insignificant.

namespace detail {

class LineScanner {
 public:
  LineScanner(std::string_view line, int lineno) : line_(line), lineno_(lineno) {}

  void skip_ws() {
    while (pos_ < line_.size() &&
           (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  SourceSpan here() {
    skip_ws();
    return {lineno_, static_cast<int>(pos_) + 1};
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(here(), msg); }

  bool accept(char c) {
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  long long read_int(const char* what) {
    skip_ws();
    if (pos_ >= line_.size() || !std::isdigit(static_cast<unsigned char>(line_[pos_])))
      fail(std::string("expected ") + what);
    long long value = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      value = value * 10 + (line_[pos_] - '0');
      if (value > 1000000) fail("number out of range");
      ++pos_;
    }
    return value;
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
  int lineno_ = 0;
};

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace detail

inline MonomialSystem parse_system(const std::string& text) {
  const auto lines = detail::split_lines(text);
  int n = -1;
  std::vector<Monomial> components;
  std::vector<bool> defined;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    detail::LineScanner sc(lines[li], static_cast<int>(li) + 1);
    if (sc.at_end() || sc.peek() == '#') continue;

    if (sc.accept('n')) {
      if (n != -1) sc.fail("duplicate header");
      sc.expect('=', "'=' after 'n'");
      SourceSpan span = sc.here();
      long long value = sc.read_int("dimension");
      if (value < 1) throw parse_error(span, "dimension must be positive");
      if (value > kMaxDimension)
        throw parse_error(span, "dimension exceeds the supported maximum " +
                                    std::to_string(kMaxDimension));
      if (!sc.at_end()) sc.fail("unexpected trailing input");
      n = static_cast<int>(value);
      components.assign(n, Monomial::one());
      defined.assign(n, false);
      continue;
    }

    if (sc.accept('f')) {
      if (n == -1)
        throw parse_error(sc.here(), "missing header line 'n = <dimension>'");
      SourceSpan ispan = sc.here();
      long long idx = sc.read_int("component index after 'f'");
      if (idx < 1 || idx > n)
        throw parse_error(ispan, "component index out of range 1.." + std::to_string(n));
      if (defined[idx - 1])
        throw parse_error(ispan, "duplicate definition of f" + std::to_string(idx));
      sc.expect('=', "'=' after component name");

      Monomial m = Monomial::one();
      char c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        SourceSpan cspan = sc.here();
        long long value = sc.read_int("constant");
        if (value == 0)
          m = Monomial::zero();
        else if (value == 1)
          m = Monomial::one();
        else
          throw parse_error(cspan, "constant must be 0 or 1");
      } else if (c == 'x') {
        std::uint64_t support = 0;
        while (true) {
          sc.expect('x', "a variable term 'x<j>'");
          SourceSpan vspan = sc.here();
          long long j = sc.read_int("variable index after 'x'");
          if (j < 1 || j > n)
            throw parse_error(vspan, "variable index out of range 1.." + std::to_string(n));
          support |= std::uint64_t{1} << (j - 1);
          if (!sc.accept('*')) break;
        }
        m = Monomial{true, support};
      } else {
        sc.fail("expected '0', '1', or a product of variables");
      }
      if (!sc.at_end()) sc.fail("unexpected trailing input");
      components[idx - 1] = m;
      defined[idx - 1] = true;
      continue;
    }

    sc.fail("expected the 'n = <dimension>' header or a 'f<i> = ...' definition");
  }

  if (n == -1)
    throw parse_error({1, 1}, "missing header line 'n = <dimension>'");
  for (int i = 0; i < n; ++i)
    if (!defined[i])
      throw parse_error({static_cast<int>(lines.size()), 1},
                        "missing definition of f" + std::to_string(i + 1));
  return MonomialSystem{n, std::move(components)};
}

inline std::string format_system(const MonomialSystem& f) {
  check_system(f);
  std::string out = "n = " + std::to_string(f.n) + "\n";
  for (int i = 0; i < f.n; ++i) {
    const Monomial& m = f.components[i];
    out += "f" + std::to_string(i + 1) + " = ";
    if (m.is_zero()) {
      out += "0";
    } else if (m.is_one()) {
      out += "1";
    } else {
      bool first = true;
      for (int j = 0; j < f.n; ++j) {
        if (!m.has_variable(j)) continue;
        if (!first) out += " * ";
        out += "x" + std::to_string(j + 1);
        first = false;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace mds
