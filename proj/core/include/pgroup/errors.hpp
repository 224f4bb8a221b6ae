#pragma once

#include <stdexcept>
#include <string>

namespace pgroup {

// Malformed data: non-square tables, out-of-range indices, unknown or
// duplicate names, duplicate product entries, unparseable documents.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size bound was exceeded (word length, truncation level,
// enumeration size). Raise the bound explicitly to proceed.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Data that a caller presented as validated turned out not to be: an
// incoherent subword inside a level set, a supposed partial group whose
// level-1 carrier admits no inversion.
class integrity_error : public std::runtime_error {
 public:
  explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// An argument contract was violated (wrong dimensions, input not
// 2-skeletal, carrier too large for an exhaustive check).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pgroup
