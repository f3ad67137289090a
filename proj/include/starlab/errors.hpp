#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starlab/element.hpp"

namespace starlab {

enum class RingErrorKind {
  cap_exceeded,
  invalid_spec,
  axiom_violation,
  foreign_element,
  non_commutative_base,
};

std::string_view to_string(RingErrorKind kind);

// Raised while building or addressing a ring. `detail` names the violated
// axiom or constraint; `witness` holds the offending element tuple, if any.
class RingError : public std::runtime_error {
 public:
  RingError(RingErrorKind kind, std::string detail, std::vector<ElementId> witness = {});

  RingErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<ElementId>& witness() const noexcept { return witness_; }

 private:
  RingErrorKind kind_;
  std::string detail_;
  std::vector<ElementId> witness_;
};

// A documented precondition of an analysis operation does not hold
// (e.g. the ring is not p.q.-Baer *, or a central cover is absent).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal cross-check between two independently computed answers
// disagreed. On rings satisfying the stated hypotheses this never happens.
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(std::string what, std::vector<ElementId> witness)
      : std::logic_error(std::move(what)), witness_(std::move(witness)) {}

  const std::vector<ElementId>& witness() const noexcept { return witness_; }

 private:
  std::vector<ElementId> witness_;
};

}  // namespace starlab
