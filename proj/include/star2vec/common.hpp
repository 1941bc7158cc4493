#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace star2vec {

// Dense node handle; doubles as the row index into the embedding matrix.
using NodeId = std::uint32_t;
using NodeTypeId = std::uint16_t;
using EdgeTypeId = std::uint16_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

// Bad input data or configuration; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure while executing a pipeline stage; the CLI maps this to exit code 3.
class PipelineError : public std::runtime_error {
 public:
  explicit PipelineError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace star2vec
