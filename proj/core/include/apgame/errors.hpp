#pragma once

#include <stdexcept>
#include <string>

namespace apgame {

// A board position was outside [1, n].
struct OutOfRange : std::invalid_argument {
    explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

// A move targeted a cell that is already claimed (or a batch repeated a cell).
struct OccupiedCell : std::invalid_argument {
    explicit OccupiedCell(const std::string& what) : std::invalid_argument(what) {}
};

// Breaker batch size was not exactly min(q, #unclaimed).
struct WrongBatchSize : std::invalid_argument {
    explicit WrongBatchSize(const std::string& what) : std::invalid_argument(what) {}
};

// A strategy was asked to move on a full board.
struct NoLegalMove : std::logic_error {
    explicit NoLegalMove(const std::string& what) : std::logic_error(what) {}
};

// Query not defined for this winning-set family (e.g. pair completions for k-APs, k > 3).
struct UnsupportedFamily : std::invalid_argument {
    explicit UnsupportedFamily(const std::string& what) : std::invalid_argument(what) {}
};

// Exact solver refused a board above its exhaustive-search guard.
struct BoardTooLarge : std::invalid_argument {
    explicit BoardTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Exact solver exceeded its hard node budget.
struct NodeBudgetExceeded : std::runtime_error {
    explicit NodeBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Empirical threshold search saw the same winner across the whole bias range.
struct NoCrossover : std::runtime_error {
    explicit NoCrossover(const std::string& what) : std::runtime_error(what) {}
};

// Calibration input did not cover the required grid.
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

// Unknown strategy identifier.
struct UnknownStrategy : std::invalid_argument {
    explicit UnknownStrategy(const std::string& what) : std::invalid_argument(what) {}
};

// A transcript's recorded moves or result do not reproduce under replay.
struct ReplayMismatch : std::runtime_error {
    explicit ReplayMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace apgame
