#ifndef DEGFAC_HITTING_HPP
#define DEGFAC_HITTING_HPP

#include <optional>
#include <vector>

#include "degfac/sparse_poly.hpp"

namespace degfac {

/// Low-Hamming-weight hitting set with an explicit value set: points whose
/// support has size at most d and whose coordinates are drawn from `values`
/// (the remaining coordinates are 0). Deduplicated; order is support size,
/// support positions, then value-lex over the support.
struct HittingSet {
  int d = 0;
  int n = 0;
  std::vector<Rational> values;  // d+1 distinct values
  std::vector<std::vector<Rational>> points;
};

/// Builds the set above. `values` must hold exactly d+1 distinct entries;
/// duplicates raise a precondition error. With values = {0,...,d} the point
/// list equals hitting_set(d, n).
HittingSet build_hitting_set(int d, int n, const std::vector<Rational>& values);

/// H(d, n): all points of Z^n whose support has size at most d and whose
/// nonzero coordinates lie in {1, ..., d}. Hits every nonzero polynomial of
/// total degree at most d in n variables. Order: support size, then support
/// positions lexicographically, then coordinate values lexicographically.
/// The zero point comes first. Errors when the set would be unreasonably
/// large.
std::vector<std::vector<Rational>> hitting_set(int d, int n);

/// Number of points of H(d, n) without materializing it.
double hitting_set_size(int d, int n);

/// First point of `points` where f does not vanish.
std::optional<std::vector<Rational>> first_nonvanishing(
    const SparsePoly& f, const std::vector<std::vector<Rational>>& points);
std::optional<std::vector<Rational>> first_nonvanishing(const SparsePoly& f,
                                                        const HittingSet& h);

/// Deterministic enumeration of Z_{>=0}^n used for shift searches: blocks by
/// maximum coordinate k = 0, 1, 2, ...; inside a block points are ordered by
/// total sum, ties broken by descending lexicographic order. At most
/// `budget` points are produced. Generation is lazy, so a small budget is
/// cheap even for large n.
std::vector<std::vector<Rational>> delta_search_sequence(int n, long budget);

}  // namespace degfac

#endif
