#pragma once

#include <stdexcept>
#include <string>

namespace thincells {

// Bad arguments: out-of-range sizes, malformed input, mismatched shapes.
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A basis family that is not even a candidate: empty, or mixed cardinalities.
struct InvalidFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request exceeds the brute-force ceiling of an operation.
struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A plurimatroid handed to an operation that needs ranks (1, n-1).
struct InvalidSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix rows fail to span a space of the expected dimension.
struct NotASubspace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stage `stage` (1-based) of a flag candidate has dependent rows.
struct RankDeficient : std::runtime_error {
  int stage;
  explicit RankDeficient(int s)
      : std::runtime_error("stage " + std::to_string(s) + " has rank below its row count"),
        stage(s) {}
};

// Stage `stage` is not contained in stage `stage + 1`.
struct NotNested : std::runtime_error {
  int stage;
  explicit NotNested(int s)
      : std::runtime_error("stage " + std::to_string(s) + " is not contained in stage " +
                           std::to_string(s + 1)),
        stage(s) {}
};

// Asked for data of a cell that is provably empty.
struct EmptyCell : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounded rejection sampling ran out of attempts.
struct SamplingExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thincells
