#pragma once

#include <stdexcept>
#include <string>

#include "jetfront/front.hpp"

namespace jetfront {

// Front file grammar:
//   file    = "front v1" NL "strands" INT NL "events" NL { event NL } { orient NL } { order NL }
//   event   = ("X" | "L" | "R") INT
//   orient  = "orient" INT ("+" | "-")
//   order   = "order" INT { INT }
// Blank lines and "#" comments are ignored.  Semantic checks are left to
// validate().
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

FrontDiagram parse_front(const std::string& text);

// Canonical text form; parse_front(serialize_front(d)) == d for valid d.
std::string serialize_front(const FrontDiagram& d);

}  // namespace jetfront
