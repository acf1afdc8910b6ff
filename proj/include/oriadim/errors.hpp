#pragma once

#include <stdexcept>
#include <string>

namespace oriadim {

// Malformed input, out-of-range vertex, violated precondition. CLI exit 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size cap or search budget was exceeded. CLI exit 2.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant did not hold (partition, observation, self-check). CLI exit 3.
class StructuralError : public std::runtime_error {
 public:
  StructuralError(const std::string& what, int vertex = -1)
      : std::runtime_error(what), vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

// Robbins obstruction: the graph has a bridge and no strong orientation.
class BridgeError : public InputError {
 public:
  BridgeError(int a, int b)
      : InputError("bridge {" + std::to_string(a) + "," + std::to_string(b) + "}"), a_(a), b_(b) {}

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

 private:
  int a_;
  int b_;
};

}  // namespace oriadim
