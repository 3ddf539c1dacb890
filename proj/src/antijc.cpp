#include "lmg/antijc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lmg {

AntiJcParams map_to_anti_jc(const ModelParams& params) {
  AntiJcParams p;
  p.nu = 2.0 * (1.0 - params.lambda());
  p.omega = -2.0;
  p.k = 2.0 * params.lambda_prime() * std::sqrt(static_cast<double>(params.n()));
  return p;
}

RabiTerms rabi_terms(const AntiJcParams& p, int n) {
  if (n < 0) throw std::invalid_argument("rabi_terms: n must be nonnegative");
  return RabiTerms{n, std::hypot(0.5 * p.delta(), p.k * std::sqrt(n + 1.0))};
}

std::pair<cplx, cplx> anti_jc_amplitudes(const AntiJcParams& p, int n, cplx c_up0,
                                         cplx c_down0, double t) {
  if (n < 0) throw std::invalid_argument("anti_jc_amplitudes: n must be nonnegative");
  if (std::abs(std::norm(c_up0) + std::norm(c_down0) - 1.0) > 1e-12)
    throw std::invalid_argument("anti_jc_amplitudes: amplitudes not normalized");
  const double omega_n = rabi_terms(p, n).omega_n;
  const double delta = p.delta();
  if (omega_n == 0.0) {
    // Fully decoupled and resonant: nothing moves.
    return {c_up0, c_down0};
  }
  const double c = std::cos(omega_n * t);
  const double s = std::sin(omega_n * t);
  const double dr = 0.5 * delta / omega_n;       // detuning ratio
  const double kr = p.k * std::sqrt(n + 1.0) / omega_n;  // coupling ratio
  const cplx i{0.0, 1.0};
  const cplx up = (c_up0 * (c - i * dr * s) + i * kr * c_down0 * s) *
                  std::polar(1.0, 0.5 * delta * t);
  const cplx down = (c_down0 * (c + i * dr * s) + i * kr * c_up0 * s) *
                    std::polar(1.0, -0.5 * delta * t);
  return {up, down};
}

ReducedDensity broken_hp_density(const ModelParams& params, double t) {
  if (params.lambda() >= 1.0)
    throw std::invalid_argument("broken_hp_density: requires lambda < 1");
  const AntiJcParams p = map_to_anti_jc(params);
  // |down>|0> couples to |up>|1>; |up>|0> is stationary.
  const auto [up1, down0] = anti_jc_amplitudes(p, 0, cplx{0.0, 0.0}, cplx{1.0, 0.0}, t);
  const double r = 1.0 / std::sqrt(2.0);
  const cplx a_up0{r, 0.0};
  const cplx a_up1 = r * up1;
  const cplx a_down0 = r * down0;
  ReducedDensity rho;
  rho.uu = std::norm(a_up0) + std::norm(a_up1);
  rho.dd = std::norm(a_down0);
  rho.ud = a_up0 * std::conj(a_down0);
  return rho;
}

double purity_broken_hp(const ModelParams& params, double t) {
  if (params.lambda() >= 1.0)
    throw std::invalid_argument("purity_broken_hp: requires lambda < 1");
  const AntiJcParams p = map_to_anti_jc(params);
  const double omega0 = rabi_terms(p, 0).omega_n;
  const double c2 = std::cos(omega0 * t) * std::cos(omega0 * t);
  const double s2 = std::sin(omega0 * t) * std::sin(omega0 * t);
  const double dr2 = 0.25 * p.delta() * p.delta() / (omega0 * omega0);
  const double kr2 = p.k * p.k / (omega0 * omega0);
  const double pop = 1.0 + c2 + dr2 * s2;
  return 0.25 * pop * pop + 0.25 * (kr2 * kr2 * s2 * s2 + 2.0 * kr2 * s2);
}

double purity_broken_case_ii_limit(double lambda, double t) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("purity_broken_case_ii_limit: requires 0 < lambda < 1");
  const double s = std::sin(std::sqrt(5.0) * lambda * t);
  const double s2 = s * s;
  return 0.25 * (32.0 / 25.0 * s2 * s2 - 8.0 / 5.0 * s2 + 4.0);
}

double mean_photon_number(const ModelParams& params) {
  if (params.lambda() <= 1.0)
    throw std::invalid_argument("mean_photon_number: requires lambda > 1");
  return 0.5 * params.n() - ground_state(params).value();
}

double mean_photon_number_approx(const ModelParams& params) {
  if (params.lambda() <= 1.0)
    throw std::invalid_argument("mean_photon_number_approx: requires lambda > 1");
  return 0.5 * params.n() * (1.0 - 1.0 / params.lambda());
}

KerrJcTerms kerr_jc_terms(const ModelParams& params, int n) {
  const int big_n = params.n();
  if (n < 0 || n > big_n)
    throw std::invalid_argument("kerr_jc_terms: n must lie in [0, N]");
  const double lam = params.lambda();
  KerrJcTerms k;
  k.n = n;
  k.detuning = -2.0 * lam;
  k.pair_detuning = lam * (2.0 * n + 1.0) / big_n + 0.5 * k.detuning;
  k.pair_coupling = 2.0 * params.lambda_prime() *
                    std::sqrt(static_cast<double>(big_n - n) * (n + 1.0));
  k.rabi = std::hypot(k.pair_detuning, k.pair_coupling);
  k.phase_up =
      lam * (static_cast<double>(n) * n + (n + 1.0) * (n + 1.0)) / big_n - 0.5 * k.detuning;
  k.phase_down = k.phase_up + k.detuning;
  return k;
}

double purity_symmetric_hp(const ModelParams& params, double t, HpSinArg arg) {
  if (params.lambda() <= 1.0)
    throw std::invalid_argument("purity_symmetric_hp: requires lambda > 1");
  const int n = static_cast<int>(std::lround(mean_photon_number(params)));
  const KerrJcTerms k = kerr_jc_terms(params, n);
  const double theta = arg == HpSinArg::omega_t ? k.rabi * t : 0.5 * k.rabi * t;
  const double s = std::sin(theta);
  const double weight = (k.pair_coupling / k.rabi) * (k.pair_coupling / k.rabi);
  const double inner = 1.0 - weight * s * s;
  return 0.5 + 0.5 * inner * inner;
}

double purity_symmetric_case_i(double lambda, double t) {
  if (lambda <= 1.0)
    throw std::invalid_argument("purity_symmetric_case_i: requires lambda > 1");
  const double s = std::sin(lambda * t);
  const double inner = 1.0 - (1.0 - 1.0 / (lambda * lambda)) * s * s;
  return 0.5 + 0.5 * inner * inner;
}

double purity_symmetric_case_ii(int n, double lambda, double t) {
  if (lambda <= 1.0)
    throw std::invalid_argument("purity_symmetric_case_ii: requires lambda > 1");
  if (n < 2) throw std::invalid_argument("purity_symmetric_case_ii: n must be >= 2");
  const double s = std::sin(std::sqrt(n * (lambda * lambda - 1.0)) * t);
  const double inner = 1.0 - s * s;
  return 0.5 + 0.5 * inner * inner;
}

}  // namespace lmg
