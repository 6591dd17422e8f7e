#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDomain : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct EmptyGeneratorList : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

struct TrivialGroup : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

struct UnknownGenerator : Error {
  UnknownGenerator(std::string name, std::size_t line, std::size_t column)
      : Error("unknown generator '" + name + "' (line " + std::to_string(line) +
              ", column " + std::to_string(column) + ")"),
        name(std::move(name)),
        line(line),
        column(column) {}
  std::string name;
  std::size_t line;
  std::size_t column;
};

struct CosetLimitExceeded : Error {
  explicit CosetLimitExceeded(std::size_t max_cosets)
      : Error("coset enumeration exceeded the budget of " +
              std::to_string(max_cosets) +
              " cosets; the group may be infinite or larger than the budget"),
        max_cosets(max_cosets) {}
  std::size_t max_cosets;
};

// Carries a witness: the axiom that failed and the node indices involved.
struct NotAPartialOrder : Error {
  NotAPartialOrder(const std::string& axiom, std::size_t i, std::size_t j,
                   std::size_t k)
      : Error("relation is not a partial order: " + axiom + " fails at nodes (" +
              std::to_string(i) + ", " + std::to_string(j) + ", " +
              std::to_string(k) + ")"),
        axiom(axiom),
        witness{i, j, k} {}
  std::string axiom;
  std::size_t witness[3];
};

}  // namespace cgt
