#pragma once

#include <stdexcept>
#include <string>

namespace kmedian {

// Base for everything the library throws on purpose.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Collinear or zero-area input where a 2D region is required.
class degenerate_geometry : public error {
public:
  using error::error;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
  using error::error;
};

// Malformed polygon/point files or CLI input.
class input_error : public error {
public:
  using error::error;
};

// An iterative solver hit its iteration cap.
class numeric_failure : public error {
public:
  using error::error;
};

}  // namespace kmedian
