#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betti {

// Text input could not be parsed; offset is the byte position that broke.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Input exceeds a hard size cap (vertex counts, enumeration ranges, ...).
class SizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A per-run time budget expired mid-computation.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace betti
