#include "bombprize/classical/blahut_arimoto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bombprize::classical {

double blahut_arimoto(const std::vector<std::vector<double>>& w) {
  const std::size_t ny = w.size();
  if (ny == 0) throw std::invalid_argument("blahut_arimoto: empty matrix");
  const std::size_t nx = w[0].size();
  for (const auto& row : w)
    if (row.size() != nx) throw std::invalid_argument("blahut_arimoto: ragged matrix");
  for (std::size_t x = 0; x < nx; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
      if (w[y][x] < -1e-12 || w[y][x] > 1.0 + 1e-12)
        throw std::invalid_argument("blahut_arimoto: entry outside [0,1]");
      sum += w[y][x];
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("blahut_arimoto: column does not sum to 1");
  }

  std::vector<double> r(nx, 1.0 / nx);
  std::vector<double> q(ny), d(nx);
  double capacity = 0.0;
  for (int iter = 0; iter < 100000; ++iter) {
    for (std::size_t y = 0; y < ny; ++y) {
      q[y] = 0.0;
      for (std::size_t x = 0; x < nx; ++x) q[y] += r[x] * w[y][x];
    }
    double lower = 0.0, upper = -1.0;
    for (std::size_t x = 0; x < nx; ++x) {
      d[x] = 0.0;
      for (std::size_t y = 0; y < ny; ++y)
        if (w[y][x] > 0.0) d[x] += w[y][x] * std::log2(w[y][x] / q[y]);
      lower += r[x] * d[x];
      upper = std::max(upper, d[x]);
    }
    capacity = 0.5 * (lower + upper);
    if (upper - lower < 1e-9) break;
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      r[x] *= std::exp2(d[x]);
      norm += r[x];
    }
    for (std::size_t x = 0; x < nx; ++x) r[x] /= norm;
  }
  return std::max(0.0, capacity);
}

}  // namespace bombprize::classical
