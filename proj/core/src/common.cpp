#include "landau/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace landau {

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LANDAU_KIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned nt = worker_threads();
  if (n == 0) return;
  if (nt <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, n));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr err;
  std::mutex err_mtx;
  for (unsigned w = 0; w < nt; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += nt) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit out;
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  const double vxx = sxx - sx * sx / dn;
  const double vxy = sxy - sx * sy / dn;
  const double vyy = syy - sy * sy / dn;
  if (vxx <= 0) return out;
  out.slope = vxy / vxx;
  out.intercept = (sy - out.slope * sx) / dn;
  out.r2 = (vyy > 0) ? (vxy * vxy) / (vxx * vyy) : 1.0;
  return out;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& y) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) idx.push_back(i);
  return idx;
}

}  // namespace landau
