#ifndef DEGFAC_UNIFACTOR_HPP
#define DEGFAC_UNIFACTOR_HPP

#include <string>
#include <vector>

#include "degfac/unipoly.hpp"

namespace degfac {

struct UniFactor {
  UniPoly poly;  // monic, irreducible over Q
  int multiplicity = 1;
  std::string certificate;  // how irreducibility was established
};

struct UnivariateFactorization {
  Rational sigma;  // f = sigma * prod poly_i^mult_i
  std::vector<UniFactor> factors;
};

/// Deterministic complete factorization over Q: square-free decomposition
/// (Yun), then Zassenhaus on each square-free part (smallest usable prime,
/// Berlekamp over F_p, quadratic Hensel lifting past twice the Mignotte
/// bound, subset recombination in size-then-lex order). Factors are sorted
/// by degree, then by coefficient vector. Errors on zero input.
UnivariateFactorization factor_univariate(const UniPoly& f);

/// True iff f is irreducible over Q (degree >= 1 required).
bool is_irreducible_univariate(const UniPoly& f);

}  // namespace degfac

#endif
