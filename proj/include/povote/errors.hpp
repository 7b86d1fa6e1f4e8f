#pragma once

#include <stdexcept>
#include <string>

namespace povote {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Transitive closure of the given edges would contain a ≻ a.
struct CycleError : Error {
  using Error::Error;
};

/// Alternative index outside 0..m-1.
struct IndexError : Error {
  using Error::Error;
};

/// Requested enumeration exceeds the configured universe bound.
struct ResourceError : Error {
  using Error::Error;
};

/// Voter id sets of two profiles intersect.
struct OverlapError : Error {
  using Error::Error;
};

/// Profiles mix different universe sizes.
struct ArityError : Error {
  using Error::Error;
};

/// Approval set is empty or covers the whole universe.
struct DegenerateBallotError : Error {
  using Error::Error;
};

/// Weight sequence violates monotonicity/positivity constraints.
struct WeightError : Error {
  using Error::Error;
};

/// Affine transform with non-positive scale.
struct AlphaError : Error {
  using Error::Error;
};

/// Rule applied outside its ballot domain (e.g. approval rule on general orders).
struct DomainError : Error {
  using Error::Error;
};

/// Rule-spec string does not match the grammar.
struct GrammarError : Error {
  using Error::Error;
};

}  // namespace povote
