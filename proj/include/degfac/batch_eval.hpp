#ifndef DEGFAC_BATCH_EVAL_HPP
#define DEGFAC_BATCH_EVAL_HPP

#include <optional>
#include <vector>

#include "degfac/formula.hpp"
#include "degfac/sparse_poly.hpp"

namespace degfac {

/// Serial reference kernels: one evaluation per point, in order.
std::vector<Rational> batch_evaluate_serial(
    const SparsePoly& p, const std::vector<std::vector<Rational>>& points);
std::vector<Rational> batch_evaluate_serial(
    const Formula& c, const std::vector<std::vector<Rational>>& points);

/// OpenMP-parallel kernels. Results are written into per-point slots, so the
/// output is identical to the serial reference for any thread count.
/// threads = 0 keeps the runtime default.
std::vector<Rational> batch_evaluate(const SparsePoly& p,
                                     const std::vector<std::vector<Rational>>& points,
                                     int threads = 0);
std::vector<Rational> batch_evaluate(const Formula& c,
                                     const std::vector<std::vector<Rational>>& points,
                                     int threads = 0);

/// Index of the first point where p is nonzero (minimum index wins across
/// threads), or nullopt when p vanishes everywhere on the list.
std::optional<size_t> first_nonzero_index(
    const SparsePoly& p, const std::vector<std::vector<Rational>>& points,
    int threads = 0);

}  // namespace degfac

#endif
