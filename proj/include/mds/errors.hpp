#pragma once

#include <stdexcept>
#include <string>

namespace mds {

// Position of a token in parsed text, 1-based.
struct SourceSpan {
  int line = 0;
  int column = 0;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(SourceSpan span, const std::string& what)
      : std::runtime_error(what), span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// An operation exceeded a configured resource limit (brute-force caps,
// oracle sizes, export sizes). Distinct from invalid input.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mds
