#include "bombprize/numkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bombprize::numkit {

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigensystem: not square");
  const std::size_t n = m.rows();
  if (!m.is_hermitian(1e-8 * std::max(1.0, m.max_abs())))
    throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");

  // Work on the hermitized copy so tiny float asymmetries cannot drift.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) < 1e-14 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rotation U with U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}.
        for (std::size_t j = 0; j < n; ++j) {  // rows p, q of U^dagger A
          const Complex rp = a(p, j), rq = a(q, j);
          a(p, j) = c * rp - s * phase * rq;
          a(q, j) = s * rp + c * phase * rq;
        }
        for (std::size_t i = 0; i < n; ++i) {  // columns p, q of (.) U
          const Complex cp = a(i, p), cq = a(i, q);
          a(i, p) = c * cp - s * std::conj(phase) * cq;
          a(i, q) = s * cp + c * std::conj(phase) * cq;
          const Complex vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * std::conj(phase) * vq;
          v(i, q) = s * vp + c * std::conj(phase) * vq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  return hermitian_eigensystem(m).values;
}

double min_eigenvalue(const CMatrix& m) { return hermitian_eigenvalues(m).front(); }

bool is_psd(const CMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

}  // namespace bombprize::numkit
