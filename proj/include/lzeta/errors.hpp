#pragma once

#include <stdexcept>
#include <string>

namespace lzeta {

// Base for everything this library throws deliberately.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (CLI exit code 3).
class precondition_error : public error {
  public:
    using error::error;
};

// An inverse Euler factor evaluated exactly at a zero of its linear form.
class pole_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

// Numeric evaluation refused: a factor violates the convergence margin.
class margin_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

// Isomorphic-constituent degeneracy (pairwise non-isomorphic hypothesis fails).
class degeneracy_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

// Malformed input text / JSON (CLI exit code 2).
class parse_error : public error {
  public:
    using error::error;
};

} // namespace lzeta
