#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "surfbasis/bitvec.hpp"

namespace surfbasis {

enum class Recursion {
  Balanced,  ///< extend(j, k/2), update, extend(j + k/2, k - k/2)
  Simple,    ///< extend(j, 1), update, extend(j + 1, k - 1)
};

struct SupportOptions {
  Recursion recursion = Recursion::Balanced;
  /// After every update, verify that the support vectors still have full
  /// rank and are orthogonal to the committed cycles; throw InternalError
  /// otherwise.
  bool check_invariants = false;
};

struct SupportStats {
  std::size_t selections = 0;
  std::size_t updates = 0;
  std::size_t invariant_checks = 0;
};

/// Chooses basis cycles one support vector at a time. `select(S, j)` must
/// return the signature of a cycle with odd product against S; the support
/// vectors still pending are then made orthogonal to it through
/// A = Y X^-1. Returns the selected signatures in order.
std::vector<BitVec> support_recursion(std::size_t dimension,
                                      const std::function<BitVec(const BitVec& support, std::size_t j)>& select,
                                      const SupportOptions& options = {}, SupportStats* stats = nullptr);

}  // namespace surfbasis
