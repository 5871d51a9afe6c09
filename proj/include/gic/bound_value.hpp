#pragma once

#include <span>
#include <string>

namespace gic {

/// A scalar bound in bits per channel use. When `valid` is false the value is
/// diagnostic only and must not be used as a guarantee.
struct BoundValue {
  double value = 0.0;
  bool valid = true;
  std::string active_term;
  std::string note;
};

/// Smallest valid entry. Ties go to the lexicographically smaller tag, so the
/// result does not depend on argument order. Throws DomainError if none valid.
BoundValue min_bound(std::span<const BoundValue> bounds);

/// Largest valid entry, same tie rule as min_bound.
BoundValue max_bound(std::span<const BoundValue> bounds);

}  // namespace gic
