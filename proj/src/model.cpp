#include "lmg/model.hpp"

#include <cmath>
#include <stdexcept>

namespace lmg {

std::string to_string(Coupling c) {
  switch (c) {
    case Coupling::case_i:
      return "case-i";
    case Coupling::case_ii:
      return "case-ii";
    case Coupling::explicit_prime:
      return "explicit";
  }
  return "?";
}

ModelParams::ModelParams(int n, double lambda, Coupling coupling,
                         std::optional<double> lambda_prime, double gamma)
    : n_(n), lambda_(lambda), coupling_(coupling), gamma_(gamma) {
  if (n < 2) throw std::invalid_argument("ModelParams: n must be >= 2");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("ModelParams: lambda must be positive");
  if (gamma != 1.0)
    throw std::invalid_argument("ModelParams: only the isotropic model (gamma = 1) is supported");
  switch (coupling) {
    case Coupling::case_i:
      lambda_prime_ = lambda / n;
      break;
    case Coupling::case_ii:
      lambda_prime_ = lambda / std::sqrt(static_cast<double>(n));
      break;
    case Coupling::explicit_prime:
      if (!lambda_prime)
        throw std::invalid_argument("ModelParams: explicit coupling requires lambda_prime");
      if (!std::isfinite(*lambda_prime))
        throw std::invalid_argument("ModelParams: lambda_prime must be finite");
      lambda_prime_ = *lambda_prime;
      break;
  }
  if (coupling != Coupling::explicit_prime && lambda_prime)
    throw std::invalid_argument("ModelParams: lambda_prime only valid with explicit coupling");
}

bool ModelParams::on_grid(DickeIndex m) const {
  if (m.twice_m < -n_ || m.twice_m > n_) return false;
  // 2M must carry N's parity (M - (-N/2) is a nonnegative integer).
  return ((m.twice_m - n_) % 2) == 0;
}

namespace {

// Largest integer <= x with the given parity (0 or 1).
int floor_to_parity(double x, int parity) {
  int f = static_cast<int>(std::floor(x));
  if (((f % 2) + 2) % 2 != parity) --f;
  return f;
}

}  // namespace

DickeIndex ground_state(const ModelParams& params) {
  const int n = params.n();
  if (params.lambda() <= 1.0) return params.max_index();
  // The level minimum sits at the grid value nearest N/(2*lambda). Work with
  // doubled indices: target 2M* = N/lambda, grid step 2, parity of N. A tie
  // means two exactly degenerate levels; take the smaller M.
  const double target = n / params.lambda();  // in (0, n)
  int lo = floor_to_parity(target, n & 1);
  if (lo < -n) lo = -n;
  int hi = lo + 2;
  if (hi > n) return DickeIndex{lo};
  const double d_lo = target - lo;
  const double d_hi = hi - target;
  return DickeIndex{d_lo <= d_hi ? lo : hi};
}

double bath_eigenenergy(const ModelParams& params, DickeIndex m) {
  if (!params.on_grid(m))
    throw std::invalid_argument("bath_eigenenergy: M off the Dicke grid");
  const double mv = m.value();
  const double n = params.n();
  return 2.0 * params.lambda() * mv * mv / n - 2.0 * mv - 0.5 * params.lambda() * n;
}

double coupling_strength(const ModelParams& params) { return params.lambda_prime(); }

BlockSpec block_hamiltonian(const ModelParams& params, DickeIndex m) {
  if (!params.on_grid(m))
    throw std::invalid_argument("block_hamiltonian: M off the Dicke grid");
  if (m.twice_m >= params.n())
    throw std::invalid_argument(
        "block_hamiltonian: M = N/2 spans a one-dimensional subspace");
  const double lam = params.lambda();
  const double n = params.n();
  const double mv = m.value();
  const double mp = mv + 1.0;
  BlockSpec spec;
  spec.m = m;
  spec.alpha = -lam / (2.0 * n) * (n * n - 4.0 * mv * mv) - 2.0 * mv - 1.0;
  spec.beta = -lam / (2.0 * n) * (n * n - 4.0 * mp * mp) - 2.0 * mp + 1.0;
  // N(N+2) - 4M(M+1) = N(N+2) - 2M(2M+2), exact in integers.
  const long long arg = static_cast<long long>(params.n()) * (params.n() + 2) -
                        static_cast<long long>(m.twice_m) * (m.twice_m + 2);
  spec.zeta = -params.lambda_prime() * std::sqrt(static_cast<double>(arg));
  return spec;
}

BlockEigen block_eigensystem(const BlockSpec& spec) {
  const double s = spec.alpha - spec.beta;
  const double disc = std::hypot(s, 2.0 * spec.zeta);
  BlockEigen eig;
  eig.x1 = 0.5 * ((spec.alpha + spec.beta) + disc);
  eig.x2 = 0.5 * ((spec.alpha + spec.beta) - disc);
  if (spec.zeta == 0.0) {
    // Degenerate coupling: identity eigenvectors, ordered by x1 >= x2.
    if (spec.alpha >= spec.beta) {
      eig.a = 1.0;
      eig.b = 0.0;
    } else {
      eig.a = 0.0;
      eig.b = 1.0;
    }
    return eig;
  }
  // x1 - alpha = (disc - s)/2; rewrite for s > 0 to avoid cancellation.
  const double x1_minus_alpha =
      s > 0.0 ? 2.0 * spec.zeta * spec.zeta / (disc + s) : 0.5 * (disc - s);
  const double r = std::hypot(x1_minus_alpha, spec.zeta);
  eig.a = spec.zeta / r;
  eig.b = x1_minus_alpha / r;
  return eig;
}

}  // namespace lmg
