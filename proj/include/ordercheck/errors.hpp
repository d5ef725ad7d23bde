#pragma once

#include <stdexcept>
#include <string>

namespace ordercheck {

// Input validation failures (poset construction and parsing).
struct CyclicInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ReflexiveInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// digraph6 / record parsing.
struct BadHeader : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadLength : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadByte : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial layer.
struct ZeroPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInteger : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verification pipeline. These signal implementation bugs, not bad input:
// a sweep aborts and the CLI exits with the internal-failure code.
struct HStarMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct InternalInvariant : std::logic_error {
  using std::logic_error::logic_error;
};

// Checkpointing.
struct CheckpointCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ordercheck
