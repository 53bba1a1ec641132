#include "vqd/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vqd {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& loss,
                             std::span<const double> x0, const NelderMeadSettings& settings) {
  const std::size_t n = x0.size();
  if (n == 0) throw std::invalid_argument("empty initial point");
  const int max_iter = settings.max_iter > 0 ? settings.max_iter : 200 * static_cast<int>(n);

  NelderMeadResult result;
  int nfev = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++nfev;
    return loss(x);
  };

  std::vector<std::vector<double>> simplex;
  simplex.reserve(n + 1);
  simplex.emplace_back(x0.begin(), x0.end());
  for (std::size_t j = 0; j < n; ++j) {
    auto v = simplex[0];
    v[j] = v[j] != 0.0 ? v[j] * 1.05 : 0.00025;
    simplex.push_back(std::move(v));
  }
  std::vector<double> fvals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fvals[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s2[i] = std::move(simplex[order[i]]);
      f2[i] = fvals[order[i]];
    }
    simplex = std::move(s2);
    fvals = std::move(f2);
  };
  sort_simplex();

  auto spread_converged = [&] {
    double dx = 0.0, df = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dx = std::max(dx, std::abs(simplex[i][j] - simplex[0][j]));
      }
      df = std::max(df, std::abs(fvals[i] - fvals[0]));
    }
    return dx <= settings.xatol && df <= settings.fatol;
  };

  int iter = 0;
  bool converged = spread_converged();
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (!converged && iter < max_iter) {
    ++iter;
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += simplex[i][j];
      centroid[j] = acc / static_cast<double>(n);
    }
    for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - simplex[n][j]);
    double fr = eval(xr);
    if (fr < fvals[0]) {
      for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - simplex[n][j]);
      double fe = eval(xe);
      if (fe < fr) {
        simplex[n] = xe;
        fvals[n] = fe;
      } else {
        simplex[n] = xr;
        fvals[n] = fr;
      }
    } else if (fr < fvals[n - 1]) {
      simplex[n] = xr;
      fvals[n] = fr;
    } else {
      bool shrink = false;
      if (fr < fvals[n]) {
        // outside contraction
        for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
        double fc = eval(xc);
        if (fc <= fr) {
          simplex[n] = xc;
          fvals[n] = fc;
        } else {
          shrink = true;
        }
      } else {
        // inside contraction
        for (std::size_t j = 0; j < n; ++j) {
          xc[j] = centroid[j] - 0.5 * (centroid[j] - simplex[n][j]);
        }
        double fc = eval(xc);
        if (fc < fvals[n]) {
          simplex[n] = xc;
          fvals[n] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          }
          fvals[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
    converged = spread_converged();
  }

  result.x = simplex[0];
  result.f = fvals[0];
  result.iterations = iter;
  result.evaluations = nfev;
  result.converged = converged;
  return result;
}

}  // namespace vqd
