#ifndef DEGFAC_BAREISS_HPP
#define DEGFAC_BAREISS_HPP

#include <vector>

#include "degfac/rational.hpp"

namespace degfac {

struct LinearSolveResult {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> solution;  // valid when consistent and unique
};

/// Exact solve of A x = b over Q (A may be rectangular). Denominators are
/// cleared per row, then fraction-free Bareiss elimination with column
/// pivot skipping; back substitution is rational.
LinearSolveResult bareiss_solve(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& b);

}  // namespace degfac

#endif
