// Isotropic Lipkin-Meshkov-Glick bath coupled to a central qubit: model
// parameters, Dicke-sector spectrum and ground state, and the 2x2
// invariant-subspace blocks with their eigensystems.
//
// Throughout, hbar = 1 and all energies/times are dimensionless. The bath is
// restricted to the maximal-spin sector j = N/2, where the isotropic model is
// diagonal in the Dicke basis |N/2, M>.
#pragma once

#include <compare>
#include <optional>
#include <string>

namespace lmg {

// Convention for the qubit-bath coupling strength lambda':
//   case_i        lambda' = lambda / N        (same as the intra-bath coupling)
//   case_ii       lambda' = lambda / sqrt(N)
//   explicit_prime  lambda' given directly
enum class Coupling { case_i, case_ii, explicit_prime };

std::string to_string(Coupling c);

// J^z quantum number M on the grid {-N/2, -N/2+1, ..., N/2}. Stored doubled
// so the half-integer grid of odd N stays exact.
struct DickeIndex {
  int twice_m = 0;

  double value() const { return 0.5 * twice_m; }
  DickeIndex prev() const { return DickeIndex{twice_m - 2}; }
  DickeIndex next() const { return DickeIndex{twice_m + 2}; }

  friend auto operator<=>(const DickeIndex&, const DickeIndex&) = default;
};

// Immutable parameter set; the single source of truth for one simulation.
class ModelParams {
 public:
  // Throws std::invalid_argument unless n >= 2, lambda > 0, gamma == 1
  // (only the isotropic model is handled), and lambda_prime is supplied
  // exactly when coupling == explicit_prime.
  ModelParams(int n, double lambda, Coupling coupling,
              std::optional<double> lambda_prime = std::nullopt,
              double gamma = 1.0);

  int n() const { return n_; }
  double lambda() const { return lambda_; }
  Coupling coupling() const { return coupling_; }
  double gamma() const { return gamma_; }

  // The resolved coupling strength lambda'.
  double lambda_prime() const { return lambda_prime_; }

  DickeIndex min_index() const { return DickeIndex{-n_}; }
  DickeIndex max_index() const { return DickeIndex{n_}; }
  bool on_grid(DickeIndex m) const;

 private:
  int n_;
  double lambda_;
  Coupling coupling_;
  double lambda_prime_;
  double gamma_;
};

// One 2x2 diagonal block of the total Hamiltonian in the ordered basis
// {|N/2,M> (x) |up>, |N/2,M+1> (x) |down>}:
//
//   H_M = [ alpha  zeta ]
//         [ zeta   beta ]
//
// Valid only for M < N/2; the M = N/2 subspace is one-dimensional.
struct BlockSpec {
  DickeIndex m;
  double alpha = 0.0;
  double beta = 0.0;
  double zeta = 0.0;  // <= 0 by construction
};

// Eigensystem of a BlockSpec. x1 >= x2, and (a, b) is the unit eigenvector
// of x1; the x2 eigenvector is (-b, a).
struct BlockEigen {
  double x1 = 0.0;
  double x2 = 0.0;
  double a = 0.0;
  double b = 0.0;

  double gap() const { return x1 - x2; }
};

// Ground-state Dicke index of the bath. Fully polarized (M = N/2) for
// lambda <= 1; for lambda > 1 the grid value nearest N/(2*lambda), with an
// exact tie between two degenerate levels resolved toward the smaller M.
DickeIndex ground_state(const ModelParams& params);

// Bath eigenenergy 2*lambda*M^2/N - 2M - lambda*N/2 of |N/2, M>.
double bath_eigenenergy(const ModelParams& params, DickeIndex m);

// Resolved lambda' (same value as params.lambda_prime()).
double coupling_strength(const ModelParams& params);

// Assembles H_M. Throws std::invalid_argument for M = N/2 (one-dimensional
// subspace; callers must use the stationary-state path) or M off the grid.
BlockSpec block_hamiltonian(const ModelParams& params, DickeIndex m);

// Analytic 2x2 eigensolve. The zeta = 0 degenerate case returns the identity
// eigenvectors ordered by x1 >= x2.
BlockEigen block_eigensystem(const BlockSpec& spec);

}  // namespace lmg
