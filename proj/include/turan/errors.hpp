#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Result would need more than SmallGraph::kMaxVertices vertices.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// An exact search ran out of its node budget. Never accompanied by a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters fall outside the hypotheses of the statement being checked.
class HypothesisViolated : public std::invalid_argument {
 public:
  explicit HypothesisViolated(const std::string& what) : std::invalid_argument(what) {}
};

class Graph6Error : public std::invalid_argument {
 public:
  explicit Graph6Error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace turan
