#pragma once

#include <optional>
#include <utility>

#include "closedgraph/errors.hpp"

namespace closedgraph {

/// Outcome of a yes/no test that carries a certificate when the answer is no.
///
/// A default-constructed verdict holds. `Verdict<W>::fails(w)` builds a
/// negative verdict with witness `w`.
template <class Witness>
class Verdict {
 public:
  Verdict() = default;

  static Verdict holds_true() { return Verdict(); }
  static Verdict fails(Witness witness) {
    Verdict v;
    v.witness_ = std::move(witness);
    return v;
  }

  bool holds() const noexcept { return !witness_.has_value(); }
  explicit operator bool() const noexcept { return holds(); }

  const Witness& witness() const {
    detail::ensure(witness_.has_value(), "verdict holds; no witness");
    return *witness_;
  }
  const std::optional<Witness>& maybe_witness() const noexcept {
    return witness_;
  }

 private:
  std::optional<Witness> witness_;
};

}  // namespace closedgraph
