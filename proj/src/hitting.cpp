#include "degfac/hitting.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "degfac/error.hpp"

namespace degfac {

HittingSet build_hitting_set(int d, int n, const std::vector<Rational>& values) {
  require(d >= 0 && n >= 1, errc::precondition, "build_hitting_set: bad parameters");
  require(static_cast<int>(values.size()) == d + 1, errc::precondition,
          "build_hitting_set: need exactly d+1 values");
  std::set<Rational> distinct(values.begin(), values.end());
  require(static_cast<int>(distinct.size()) == d + 1, errc::precondition,
          "build_hitting_set: duplicate entries in the value set");
  require(hitting_set_size(d, n) <= 5e7, errc::resource,
          "build_hitting_set: set too large to materialize");
  HittingSet h;
  h.d = d;
  h.n = n;
  h.values = values;
  std::set<std::vector<Rational>> seen;
  std::vector<int> support;
  std::function<void(int, int)> choose_support = [&](int start, int k) {
    if (k == 0) {
      std::vector<size_t> idx(support.size(), 0);
      std::function<void(size_t)> assign = [&](size_t pos) {
        if (pos == support.size()) {
          std::vector<Rational> pt(n, Rational(0));
          for (size_t i = 0; i < support.size(); ++i) pt[support[i]] = values[idx[i]];
          if (seen.insert(pt).second) h.points.push_back(std::move(pt));
          return;
        }
        for (size_t v = 0; v < values.size(); ++v) {
          idx[pos] = v;
          assign(pos + 1);
        }
      };
      assign(0);
      return;
    }
    for (int i = start; i <= n - k; ++i) {
      support.push_back(i);
      choose_support(i + 1, k - 1);
      support.pop_back();
    }
  };
  for (int k = 0; k <= std::min(d, n); ++k) choose_support(0, k);
  return h;
}

double hitting_set_size(int d, int n) {
  double total = 0;
  double binom = 1;  // C(n, k)
  for (int k = 0; k <= std::min(d, n); ++k) {
    total += binom * std::pow(static_cast<double>(d), k);
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

std::vector<std::vector<Rational>> hitting_set(int d, int n) {
  require(d >= 0 && n >= 1, errc::precondition, "hitting_set: bad parameters");
  require(hitting_set_size(d, n) <= 5e7, errc::resource,
          "hitting_set: set too large to materialize");
  std::vector<std::vector<Rational>> out;
  std::vector<int> support;
  std::vector<int> val;
  // Supports of size k in lexicographic order, then values in {1..d}^k
  // lexicographically.
  std::function<void(int, int)> choose_support = [&](int start, int k) {
    if (k == 0) {
      // enumerate values over the chosen support
      std::function<void(size_t)> assign = [&](size_t pos) {
        if (pos == support.size()) {
          std::vector<Rational> pt(n, Rational(0));
          for (size_t i = 0; i < support.size(); ++i)
            pt[support[i]] = Rational(static_cast<long>(val[i]));
          out.push_back(std::move(pt));
          return;
        }
        for (int v = 1; v <= d; ++v) {
          val[pos] = v;
          assign(pos + 1);
        }
      };
      val.assign(support.size(), 1);
      assign(0);
      return;
    }
    for (int i = start; i <= n - k; ++i) {
      support.push_back(i);
      choose_support(i + 1, k - 1);
      support.pop_back();
    }
  };
  for (int k = 0; k <= std::min(d, n); ++k) choose_support(0, k);
  return out;
}

std::optional<std::vector<Rational>> first_nonvanishing(
    const SparsePoly& f, const std::vector<std::vector<Rational>>& points) {
  for (const auto& pt : points)
    if (!f.evaluate(pt).is_zero()) return pt;
  return std::nullopt;
}

std::optional<std::vector<Rational>> first_nonvanishing(const SparsePoly& f,
                                                        const HittingSet& h) {
  return first_nonvanishing(f, h.points);
}

std::vector<std::vector<Rational>> delta_search_sequence(int n, long budget) {
  require(n >= 1 && budget >= 0, errc::precondition, "delta_search_sequence: bad parameters");
  std::vector<std::vector<Rational>> out;
  if (budget == 0) return out;
  std::vector<int> pt(n, 0);
  // Emits points with coords in [0, k], max coord exactly k (except k = 0),
  // fixed total sum s, in descending lexicographic order. Returns false when
  // the budget is exhausted.
  std::function<bool(int, int, bool, int)> gen = [&](int pos, int rem, bool used_k,
                                                     int k) -> bool {
    if (pos == n) {
      if (rem != 0 || !(used_k || k == 0)) return true;
      std::vector<Rational> p;
      p.reserve(n);
      for (int x : pt) p.emplace_back(static_cast<long>(x));
      out.push_back(std::move(p));
      return static_cast<long>(out.size()) < budget;
    }
    int hi = std::min(k, rem);
    for (int v = hi; v >= 0; --v) {
      // feasibility: remaining positions must absorb rem - v
      if (rem - v > (n - pos - 1) * k) continue;
      if (!used_k && v != k && rem - v < k && k > 0) continue;
      pt[pos] = v;
      if (!gen(pos + 1, rem - v, used_k || v == k, k)) return false;
    }
    pt[pos] = 0;
    return true;
  };
  for (int k = 0; static_cast<long>(out.size()) < budget; ++k) {
    int lo = k, hi = n * k;
    if (k == 0) { lo = 0; hi = 0; }
    for (int s = lo; s <= hi; ++s)
      if (!gen(0, s, false, k)) return out;
  }
  return out;
}

}  // namespace degfac
