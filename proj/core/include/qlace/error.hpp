#pragma once

#include <stdexcept>
#include <string>

namespace qlace {

enum class SolveErrorKind {
  Inadmissible,        // precondition on the fault set violated
  SameParity,          // endpoints from the same partite set
  NoDirection,         // no split direction passes the degree audit
  NoEdge,              // no path edge satisfies the selection constraints
  ConditionViolated,   // a stated feasibility inequality fails
  Unsatisfiable,       // instance generator constraints conflict
  NotFound,            // complete search exhausted without a solution
  BudgetExhausted,     // non-exhaustive search ran out of budget
  ConstructionFailed,  // internal defect: the construction dead-ended
};

const char* to_string(SolveErrorKind kind) noexcept;

class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  SolveErrorKind kind() const noexcept { return kind_; }

 private:
  SolveErrorKind kind_;
};

inline const char* to_string(SolveErrorKind kind) noexcept {
  switch (kind) {
    case SolveErrorKind::Inadmissible: return "inadmissible";
    case SolveErrorKind::SameParity: return "same parity";
    case SolveErrorKind::NoDirection: return "no direction";
    case SolveErrorKind::NoEdge: return "no edge";
    case SolveErrorKind::ConditionViolated: return "condition violated";
    case SolveErrorKind::Unsatisfiable: return "unsatisfiable";
    case SolveErrorKind::NotFound: return "not found";
    case SolveErrorKind::BudgetExhausted: return "budget exhausted";
    case SolveErrorKind::ConstructionFailed: return "construction failed";
  }
  return "unknown";
}

}  // namespace qlace
