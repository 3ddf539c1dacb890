// Exact time evolution of the joint bath+qubit state in the Dicke-sector
// invariant subspaces, the reduced density matrix and purity of the central
// qubit, and the closed-form purity expressions for both phases.
//
// From a ground-state product initial condition the dynamics never leaves the
// pair of 2x2 blocks containing |G>|up> and |G>|down>, so every operation here
// costs O(1) regardless of N. The closed forms are algebraically identical to
// the block evolution (not approximations); tests pin that identity at 1e-12.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lmg/model.hpp"

namespace lmg {

using cplx = std::complex<double>;

enum class Spin { up, down };

struct QubitState {
  cplx up{0.0, 0.0};
  cplx down{0.0, 0.0};
};

// |c_up|^2 + |c_down|^2 == 1 within tol.
bool is_normalized(const QubitState& q, double tol = 1e-12);

QubitState balanced_qubit();  // (|up> + |down>)/sqrt(2)

// 2x2 complex matrix in a block's ordered basis {(M, up), (M+1, down)}.
struct Mat2c {
  cplx uu, ud, du, dd;
};

// Joint amplitudes over the Dicke-sector product basis, sparse over
// (M, qubit spin). Entries are kept sorted by (M, spin).
struct TotalState {
  struct Entry {
    DickeIndex m;
    Spin spin;
    cplx amp;
  };

  int n = 0;
  std::vector<Entry> entries;

  cplx amplitude(DickeIndex m, Spin spin) const;  // 0 if absent
  double norm() const;
};

// 2x2 Hermitian qubit density matrix; rho_du is conj(ud).
struct ReducedDensity {
  double uu = 0.0;
  double dd = 0.0;
  cplx ud{0.0, 0.0};
};

// The four population/transfer weights of the closed-form purity. Both pairs
// are |column|^2 weights of a unitary, so f + i = 1 and g + h = 1.
// In the symmetric variant f, i come from the block at the ground index and
// g, h from the block one step below. In the broken variant the up component
// is stationary (f = 1, i = 0) and g, h come from the block at N/2 - 1.
enum class PhaseVariant { symmetric, broken };

struct ClosedFormTerms {
  double f = 1.0;
  double g = 1.0;
  double h = 0.0;
  double i = 0.0;
  PhaseVariant variant = PhaseVariant::symmetric;
};

enum class TraceMethod { exact, closed_form, hp_limit };

std::string to_string(TraceMethod m);

struct TraceMeta {
  int n = 0;
  double lambda = 0.0;
  Coupling coupling = Coupling::case_i;
  TraceMethod method = TraceMethod::exact;
};

struct PurityTrace {
  std::vector<double> times;
  std::vector<double> values;
  TraceMeta meta;
};

// exp(-i H_M t) on the block, written as a global phase e^{-i x2 t} times a
// function of the gap so that later |entry|^2 expansions reproduce the
// closed-form cosines bit-for-bit.
Mat2c block_propagator(const BlockEigen& eig, double t);

// Evolves |N/2,m0> (x) q0. The m0 = +-N/2 corner components are stationary
// eigenstates with energies -(N+1) and +(N+1). Intended for tests; physical
// runs start from the ground state via evolve_product_state.
TotalState evolve_dicke_product(const ModelParams& params, DickeIndex m0,
                                const QubitState& q0, double t);

// Evolves |G> (x) q0 with |G> the bath ground state. Throws if q0 is not
// normalized.
TotalState evolve_product_state(const ModelParams& params, const QubitState& q0,
                                double t);

// Partial trace over the bath: populations and coherence grouped by exact
// bath index.
ReducedDensity reduced_density(const TotalState& state);

// Tr[rho^2] = uu^2 + dd^2 + 2|ud|^2.
double purity(const ReducedDensity& rho);

// Closed-form weights at time t for the ground-state initial condition.
ClosedFormTerms closed_form_terms(const ModelParams& params, double t);

// Purity of the balanced initial qubit from the closed-form weights:
// P = 1/4 (f+h)^2 + 1/4 (i+g)^2 + 1/2 g f.
double purity_from_terms(const ClosedFormTerms& terms);

// Closed-form purity, balanced initial qubit, lambda > 1.
double purity_symmetric_closed(const ModelParams& params, double t);

// Closed-form purity, balanced initial qubit, 0 < lambda <= 1.
double purity_broken_closed(const ModelParams& params, double t);

// Large-N angular-momentum-coupling approximation of the broken-phase
// density matrix: populations frozen, coherence rotating at 2*lambda/N + 2.
// Its purity is exactly 1. Requires lambda < 1.
ReducedDensity broken_phase_cg_density(const ModelParams& params,
                                       const QubitState& q0, double t);

// One purity value per time by the selected method. closed_form and hp_limit
// require balanced qubit populations (|c_up|^2 = 1/2) and throw on phase
// mismatches instead of rerouting; hp_limit is undefined at lambda = 1.
PurityTrace purity_trace(const ModelParams& params, const QubitState& q0,
                         std::span<const double> times, TraceMethod method);

}  // namespace lmg
