#include "degfac/batch_eval.hpp"

#ifdef DEGFAC_HAVE_OPENMP
#include <omp.h>
#endif

namespace degfac {

namespace {

#ifdef DEGFAC_HAVE_OPENMP
int clamp_threads(int threads) {
  return threads > 0 ? threads : omp_get_max_threads();
}
#endif

template <typename Evaluable>
std::vector<Rational> run_serial(const Evaluable& e,
                                 const std::vector<std::vector<Rational>>& points) {
  std::vector<Rational> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = e(points[i]);
  return out;
}

template <typename Evaluable>
std::vector<Rational> run_parallel(const Evaluable& e,
                                   const std::vector<std::vector<Rational>>& points,
                                   [[maybe_unused]] int threads) {
  std::vector<Rational> out(points.size());
#ifdef DEGFAC_HAVE_OPENMP
  long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static) num_threads(clamp_threads(threads))
  for (long i = 0; i < n; ++i) out[i] = e(points[i]);
#else
  for (size_t i = 0; i < points.size(); ++i) out[i] = e(points[i]);
#endif
  return out;
}

}  // namespace

std::vector<Rational> batch_evaluate_serial(
    const SparsePoly& p, const std::vector<std::vector<Rational>>& points) {
  return run_serial([&](const std::vector<Rational>& a) { return p.evaluate(a); },
                    points);
}

std::vector<Rational> batch_evaluate_serial(
    const Formula& c, const std::vector<std::vector<Rational>>& points) {
  return run_serial([&](const std::vector<Rational>& a) { return eval_formula(c, a); },
                    points);
}

std::vector<Rational> batch_evaluate(const SparsePoly& p,
                                     const std::vector<std::vector<Rational>>& points,
                                     int threads) {
  return run_parallel([&](const std::vector<Rational>& a) { return p.evaluate(a); },
                      points, threads);
}

std::vector<Rational> batch_evaluate(const Formula& c,
                                     const std::vector<std::vector<Rational>>& points,
                                     int threads) {
  return run_parallel(
      [&](const std::vector<Rational>& a) { return eval_formula(c, a); }, points,
      threads);
}

std::optional<size_t> first_nonzero_index(
    const SparsePoly& p, const std::vector<std::vector<Rational>>& points,
    int threads) {
  std::vector<Rational> vals = batch_evaluate(p, points, threads);
  for (size_t i = 0; i < vals.size(); ++i)
    if (!vals[i].is_zero()) return i;
  return std::nullopt;
}

}  // namespace degfac
