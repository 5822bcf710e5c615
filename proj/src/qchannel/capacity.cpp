#include "bombprize/qchannel/capacity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bombprize/numkit/eigen.hpp"
#include "bombprize/numkit/entropy.hpp"

namespace bombprize::qchannel {

using numkit::entropy_of_spectrum;
using numkit::hermitian_eigensystem;
using numkit::hermitian_eigenvalues;
using numkit::outer;
using numkit::tensor;

double ce_pauli(const PauliParams& p) {
  p.validate();
  double c = 2.0;
  for (double w : p.as_array())
    if (w > 0.0) c += w * std::log2(w);
  return c;
}

double ce_bell_diagonal(const std::vector<double>& lambda, int d) {
  if (d < 2) throw std::invalid_argument("ce_bell_diagonal: d must be >= 2");
  if (lambda.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("ce_bell_diagonal: lambda must have d^2 entries");
  return 2.0 * std::log2(static_cast<double>(d)) - numkit::shannon_entropy(lambda);
}

double mutual_information(const QuantumChannel& ch, const CMatrix& rho) {
  const auto es = hermitian_eigensystem(rho);
  // |psi> = sum_i sqrt(lam_i) |v_i> (x) |i>, channel on the first factor
  CMatrix psi(4, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    const double lam = std::max(0.0, es.values[i]);
    if (lam == 0.0) continue;
    const double s = std::sqrt(lam);
    for (std::size_t a = 0; a < 2; ++a) psi(a * 2 + i, 0) += s * es.vectors(a, i);
  }
  const CMatrix joint = ch.apply_to_first(outer(psi, psi));
  const double s_in = entropy_of_spectrum(es.values);
  const double s_out = entropy_of_spectrum(hermitian_eigenvalues(ch.apply(rho)));
  const double s_joint = entropy_of_spectrum(hermitian_eigenvalues(joint));
  return s_in + s_out - s_joint;
}

namespace {

CMatrix bloch_state(double r, double theta, double phi) {
  const double x = r * std::sin(theta) * std::cos(phi);
  const double y = r * std::sin(theta) * std::sin(phi);
  const double z = r * std::cos(theta);
  CMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + z);
  rho(1, 1) = 0.5 * (1.0 - z);
  rho(0, 1) = 0.5 * Complex{x, -y};
  rho(1, 0) = 0.5 * Complex{x, y};
  return rho;
}

}  // namespace

double ce_numerical(const QuantumChannel& ch, const CeSearchOptions& opts) {
  if (opts.radial < 2 || opts.polar < 2 || opts.azimuthal < 1)
    throw std::invalid_argument("ce_numerical: grid too small");
  const double pi = std::numbers::pi;

  double best = -1.0;
  double br = 0.0, bt = 0.0, bp = 0.0;
  for (int ir = 0; ir < opts.radial; ++ir) {
    const double r = static_cast<double>(ir) / (opts.radial - 1);
    for (int it = 0; it < opts.polar; ++it) {
      const double theta = pi * it / (opts.polar - 1);
      for (int ip = 0; ip < opts.azimuthal; ++ip) {
        const double phi = 2.0 * pi * ip / opts.azimuthal;
        const double v = mutual_information(ch, bloch_state(r, theta, phi));
        if (v > best) {
          best = v;
          br = r;
          bt = theta;
          bp = phi;
        }
        if (ir == 0) break;  // r = 0 is angle independent
      }
      if (ir == 0) break;
    }
  }

  // Pattern search down to the requested step.
  double sr = 1.0 / (opts.radial - 1);
  double st = pi / (opts.polar - 1);
  double sp = 2.0 * pi / opts.azimuthal;
  int guard = 0;
  while ((sr > opts.refine_step || st > opts.refine_step || sp > opts.refine_step) &&
         ++guard < 400) {
    bool improved = false;
    const auto try_point = [&](double r, double t, double p) {
      r = std::min(1.0, std::max(0.0, r));
      const double v = mutual_information(ch, bloch_state(r, t, p));
      if (v > best) {
        best = v;
        br = r;
        bt = t;
        bp = p;
        return true;
      }
      return false;
    };
    improved |= try_point(br + sr, bt, bp);
    improved |= try_point(br - sr, bt, bp);
    improved |= try_point(br, bt + st, bp);
    improved |= try_point(br, bt - st, bp);
    improved |= try_point(br, bt, bp + sp);
    improved |= try_point(br, bt, bp - sp);
    if (!improved) {
      sr *= 0.5;
      st *= 0.5;
      sp *= 0.5;
    }
  }
  return best;
}

}  // namespace bombprize::qchannel
