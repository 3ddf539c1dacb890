// Independent brute-force references used to validate the block dynamics and
// every closed form: a dense Dicke-sector Hamiltonian assembled from ladder
// matrix elements, a tiny-N full spin-basis Hamiltonian assembled from Pauli
// products, and exact unitary evolution through a complex Hermitian Jacobi
// eigensolver implemented here (no external linear algebra, so the oracle
// stays independent and portable).
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lmg/dynamics.hpp"
#include "lmg/model.hpp"

namespace lmg::oracle {

using lmg::cplx;

struct DenseHermitian {
  int dim = 0;
  std::vector<cplx> a;  // row-major

  explicit DenseHermitian(int d) : dim(d), a(static_cast<std::size_t>(d) * d) {}
  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

struct EigenDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<cplx> vectors;        // column-major, column j at [j*dim .. j*dim+dim)

  cplx vec(int i, int j) const { return vectors[static_cast<std::size_t>(j) * dim + i]; }
};

// Basis layout of the Dicke-sector matrices: index 2k + s with k = (2M + N)/2
// counting M upward from -N/2 and s = 0 (up), 1 (down).
int dicke_state_index(int n, DickeIndex m, Spin spin);

// Total Hamiltonian on {|N/2,M>|s>}, dim 2(N+1), assembled from the standard
// angular-momentum ladder elements sqrt(j(j+1) - M(M+-1)), j = N/2.
// Guarded at N <= 4096.
DenseHermitian dense_hamiltonian(const ModelParams& params);

// Cyclic Jacobi for complex Hermitian matrices. Deterministic; throws
// std::runtime_error if the off-diagonal mass has not vanished after a fixed
// sweep budget.
EigenDecomposition hermitian_eigendecomposition(const DenseHermitian& h);

// psi(t) = V exp(-i Lambda t) V^dagger psi0.
std::vector<cplx> dense_evolve(const EigenDecomposition& eig, std::span<const cplx> psi0,
                               double t);
std::vector<cplx> dense_evolve(const DenseHermitian& h, std::span<const cplx> psi0,
                               double t);

// Amplitude vector of |N/2,m0> (x) q0 in the dense basis.
std::vector<cplx> dicke_product_vector(const ModelParams& params, DickeIndex m0,
                                       const QubitState& q0);

// Partial trace over the bath index in the dense basis.
ReducedDensity dense_reduced_density(int n, std::span<const cplx> psi);

// Caches one eigendecomposition for repeated evolutions of the same model.
class DickeOracle {
 public:
  explicit DickeOracle(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  const EigenDecomposition& eigensystem() const { return eig_; }

  std::vector<cplx> evolve(std::span<const cplx> psi0, double t) const;
  double purity(const QubitState& q0, double t) const;  // from |G> (x) q0

 private:
  ModelParams params_;
  EigenDecomposition eig_;
};

// One-shot purity from dense evolution plus explicit partial trace.
double purity_oracle(const ModelParams& params, const QubitState& q0, double t);

// ---- full 2^(N+1) spin-basis oracle (N <= 8) ------------------------------
//
// Basis index: bit 0 is the central qubit, bits 1..N the bath qubits; a set
// bit means spin down. The bath part of the coupling uses the flip-flop form
// -2 lambda' (s+ J- + s- J+) = -lambda' sum_i (sx_i sx + sy_i sy).

DenseHermitian full_spin_hamiltonian(const ModelParams& params);

// Symmetric Dicke state |N/2, M> embedded in the 2^N bath space.
std::vector<cplx> dicke_embedding(int n, DickeIndex m);

class FullSpinOracle {
 public:
  explicit FullSpinOracle(const ModelParams& params);

  std::vector<cplx> initial_state(DickeIndex m0, const QubitState& q0) const;
  std::vector<cplx> evolve(std::span<const cplx> psi0, double t) const;
  double purity(const QubitState& q0, double t) const;  // from |G> (x) q0

 private:
  ModelParams params_;
  EigenDecomposition eig_;
};

double full_spin_purity(const ModelParams& params, const QubitState& q0, double t);

}  // namespace lmg::oracle
