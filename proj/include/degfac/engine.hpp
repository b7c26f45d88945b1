#ifndef DEGFAC_ENGINE_HPP
#define DEGFAC_ENGINE_HPP

#include <vector>

#include "degfac/divres.hpp"
#include "degfac/sparse_poly.hpp"

namespace degfac {

/// How shift points are searched when a translation is needed to keep the
/// initial univariate factorization coprime. In guaranteed mode the graded
/// grid is scanned until a certified-good shift is found (or the search
/// stalls); in budgeted mode the scan is additionally capped at
/// `delta_budget` points per direction.
enum class SearchMode { guaranteed, budgeted };

struct EngineConfig {
  int d = 1;  // factor degree bound, >= 1
  SearchMode mode = SearchMode::guaranteed;
  long delta_budget = 10000;  // shift points per direction (budgeted mode)
  int delta_stall = 24;       // non-improving shifts tolerated before moving on
  long term_budget = 8000000;  // sparsity cap for intermediate polynomials
  bool randomized = false;  // sample shift points in random order (not deterministic)
  unsigned long seed = 0;   // seed for the randomized order; 0 draws from the OS
};

/// Output of the candidate pass: normalized, deduplicated polynomials of
/// degree between 1 and d in the original variables.
struct CandidateList {
  std::vector<SparsePoly> entries;
};

struct FactorEntry {
  SparsePoly poly;  // irreducible over Q, canonically normalized
  int multiplicity = 1;
};

/// Sorted by (degree, graded-lex leading monomial).
struct FactorList {
  std::vector<FactorEntry> entries;
};

struct EngineStats {
  long directions = 0;  // alpha vectors processed
  long shifts = 0;      // shift points examined
  long lifts = 0;       // Hensel lifts performed
  long candidates = 0;  // distinct candidates inspected
  long restarts = 0;    // verified factors peeled from the working polynomial
};

struct FactorReport {
  FactorList factors;
  bool complete_product = false;  // sum of e*deg(g) accounts for deg(f)
  EngineStats stats;
};

/// Candidate degree-<=d factors of multiplicity one: for every direction
/// alpha in H(d,n), substitute x -> x + alpha*y, translate by shift points
/// until the univariate restriction certifies or the search stalls, factor
/// the restriction, Hensel-lift every subset of total degree <= d, and undo
/// the substitutions. Every g with deg(g) <= d, g | f, g^2 does not divide f
/// appears in the list up to normalization (given a good shift, which the
/// guaranteed scan certifies whenever the restriction turns square-free).
CandidateList candidate_factors_mult_one(const SparsePoly& f, const EngineConfig& cfg);

/// All irreducible factors of degree <= d with exact multiplicities. Runs
/// the candidate pass with derivative levels to expose repeated factors,
/// prunes candidates by irreducibility, verifies each multiplicity by exact
/// division against f, and peels verified factors from the working
/// polynomial before rescanning. Every emitted (g, e) satisfies g^e | f and
/// g^{e+1} does not divide f.
FactorReport factor_low_degree(const SparsePoly& f, const EngineConfig& cfg);

/// Convenience wrapper returning just the factor list.
FactorList all_low_degree_factors(const SparsePoly& f, const EngineConfig& cfg);

/// Smallest a >= 0 such that g does not divide the a-th partial derivative
/// of f with respect to `var`; equals the factor-multiplicity of g in f when
/// g is irreducible (hence square-free) and depends on `var`.
int multiplicity(const SparsePoly& f, const SparsePoly& g, int var,
                 const PitBackend& pit);

/// Irreducibility over Q for degree-<=d inputs: degree 1 is irreducible;
/// otherwise g is irreducible iff it has no factor of degree <= deg(g)-1,
/// decided by a recursive factor_low_degree call. Errors on constants.
bool is_irreducible_low_degree(const SparsePoly& g);

/// Total order used for canonical output: degree, then terms compared from
/// the graded-lex leading end.
bool poly_canonical_less(const SparsePoly& a, const SparsePoly& b);

}  // namespace degfac

#endif
