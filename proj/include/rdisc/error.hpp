#pragma once

#include <stdexcept>
#include <string>

namespace rdisc {

enum class ErrorKind {
  Format,     // malformed graph6 / edge list / coloring text
  Parameter,  // invalid argument values
  Size,       // exceeds a representation or search cap
  Structure,  // input graph lacks a required property (connected, bipartite, ...)
  Budget,     // search budget exhausted before a verdict
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace rdisc
