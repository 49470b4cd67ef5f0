#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pe {

// Error categories the CLI maps to distinct exit codes:
// ParseError -> 3 (malformed file / missing field), RangeError -> 4
// (out-of-range index or size mismatch), AxiomError -> 5 (a validated
// structure was required and validation failed).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AxiomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First violated law of a structure, in lexicographic scan order.
// `where` holds the indices of the failing instance (pair, triple, ...).
struct Violation {
  std::string law;
  std::vector<int> where;
  std::string message;
};

// Either a validated value or the first violation found.
template <typename T>
class Checked {
 public:
  Checked(T v) : value_(std::move(v)) {}
  Checked(Violation v) : violation_(std::move(v)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw AxiomError(violation_->message);
    return *value_;
  }
  T&& value() && {
    if (!value_) throw AxiomError(violation_->message);
    return std::move(*value_);
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Violation& violation() const {
    if (value_) throw std::logic_error("Checked::violation: value is valid");
    return *violation_;
  }

 private:
  std::optional<T> value_;
  std::optional<Violation> violation_;
};

}  // namespace pe
