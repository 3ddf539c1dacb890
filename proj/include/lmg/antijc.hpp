// Holstein-Primakoff reductions of the central-spin model.
//
// Broken phase (lambda < 1): the bath bosonizes around full polarization and
// the model becomes an anti-Jaynes-Cummings Hamiltonian
//   nu d'd - k (sigma+ d' + sigma- d) + omega sigma_z / 2
// with nu = 2(1 - lambda), omega = -2, k = 2 lambda' sqrt(N).
//
// Symmetric phase (lambda > 1): the ground state carries an extensive boson
// occupation n = N/2 - I(lambda); keeping the occupation-dependent coupling
// sqrt(N - d'd) and the Kerr term (2 lambda / N)(d'd)^2 gives an
// intensity-dependent anti-JC model that is still block-diagonal.
//
// Everything here is an approximation layer and is validated against the
// exact block dynamics. Operations refuse the opposite phase rather than
// extrapolating.
#pragma once

#include <complex>
#include <utility>

#include "lmg/dynamics.hpp"
#include "lmg/model.hpp"

namespace lmg {

struct AntiJcParams {
  double nu = 0.0;     // boson frequency
  double omega = 0.0;  // two-level splitting
  double k = 0.0;      // coupling

  double delta() const { return nu + omega; }
};

struct RabiTerms {
  int n = 0;            // boson occupation index
  double omega_n = 0.0; // sqrt((delta/2)^2 + k^2 (n+1))
};

// The block quantities of the intensity-dependent model at occupation n.
// rabi equals half the exact gap of the corresponding 2x2 block (an identity,
// not an approximation); phase_up - phase_down = -detuning = 2*lambda.
struct KerrJcTerms {
  int n = 0;
  double detuning = 0.0;       // nu + omega = -2*lambda
  double pair_detuning = 0.0;  // lambda (2n+1)/N + detuning/2
  double pair_coupling = 0.0;  // 2 lambda' sqrt((N-n)(n+1))
  double rabi = 0.0;           // hypot(pair_detuning, pair_coupling)
  double phase_up = 0.0;       // lambda [n^2 + (n+1)^2]/N - detuning/2
  double phase_down = 0.0;     // phase_up + detuning
};

// Identification (nu, omega, k) for the given model parameters. Defined for
// all lambda; physically meaningful in the low-excitation (broken) regime.
AntiJcParams map_to_anti_jc(const ModelParams& params);

RabiTerms rabi_terms(const AntiJcParams& p, int n);

// Amplitudes (c_up,n+1(t), c_down,n(t)) of the anti-JC pair starting from
// (c_up0, c_down0). Unitary for every t and n.
std::pair<cplx, cplx> anti_jc_amplitudes(const AntiJcParams& p, int n, cplx c_up0,
                                         cplx c_down0, double t);

// Reduced density matrix of the qubit for the balanced initial state with the
// boson mode in vacuum, assembled from anti_jc_amplitudes plus the stationary
// (up, vacuum) component.
ReducedDensity broken_hp_density(const ModelParams& params, double t);

// Broken-phase H-P purity, balanced initial qubit:
// P = 1/4 [1 + cos^2 + (delta/2 Omega0)^2 sin^2]^2
//   + 1/4 [(k/Omega0)^4 sin^4 + 2 (k/Omega0)^2 sin^2],  argument Omega0 t.
// Requires lambda < 1.
double purity_broken_hp(const ModelParams& params, double t);

// N-independent Case II broken-phase limit:
// P = 1/4 [(32/25) sin^4(sqrt5 lambda t) - (8/5) sin^2(sqrt5 lambda t) + 4].
double purity_broken_case_ii_limit(double lambda, double t);

// Boson occupation of the symmetric-phase ground state, n = N/2 - I(lambda),
// exact. Requires lambda > 1.
double mean_photon_number(const ModelParams& params);

// Continuum approximation N/2 (1 - 1/lambda) of the same quantity.
double mean_photon_number_approx(const ModelParams& params);

// Block quantities at occupation n (0 <= n <= N).
KerrJcTerms kerr_jc_terms(const ModelParams& params, int n);

// Two printed conventions exist for the sine argument of the symmetric-phase
// purity; omega_t reproduces the exact gap (rabi = gap/2, so sin^2(rabi*t)
// oscillates at the gap frequency) and is the production choice. The half
// variant is kept only for side-by-side comparison in validation reports.
enum class HpSinArg { omega_t, omega_t_half };

// Symmetric-phase H-P purity, balanced initial qubit, evaluated at the exact
// ground-state occupation: P = 1/2 + 1/2 [1 - (coupling/rabi)^2 sin^2]^2.
// Requires lambda > 1.
double purity_symmetric_hp(const ModelParams& params, double t,
                           HpSinArg arg = HpSinArg::omega_t);

// Large-N Case I limit: P = 1/2 + 1/2 [1 - (1 - 1/lambda^2) sin^2(lambda t)]^2.
double purity_symmetric_case_i(double lambda, double t);

// Large-N Case II limit: P = 1/2 + 1/2 [1 - sin^2(sqrt(N(lambda^2-1)) t)]^2.
double purity_symmetric_case_ii(int n, double lambda, double t);

}  // namespace lmg
