#include "lmg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lmg::oracle {

int dicke_state_index(int n, DickeIndex m, Spin spin) {
  const int k = (m.twice_m + n) / 2;
  return 2 * k + (spin == Spin::down ? 1 : 0);
}

namespace {

// <M|J-|M+1> = sqrt(j(j+1) - (M+1)M) with j = N/2, via the doubled index.
double ladder_down_element(int n, int twice_m_upper) {
  const double j2 = 0.5 * n;
  const double mu = 0.5 * twice_m_upper;
  return std::sqrt(j2 * (j2 + 1.0) - mu * (mu - 1.0));
}

}  // namespace

DenseHermitian dense_hamiltonian(const ModelParams& params) {
  const int n = params.n();
  if (n > 4096) throw std::invalid_argument("dense_hamiltonian: N too large");
  const double lam = params.lambda();
  const double lamp = params.lambda_prime();
  const double j2 = 0.5 * n;

  DenseHermitian h(2 * (n + 1));
  for (int k = 0; k <= n; ++k) {
    const DickeIndex m{-n + 2 * k};
    const double mv = m.value();
    // J+J- + J-J+ acts diagonally as 2[j(j+1) - M^2].
    const double bath = -(lam / n) * (2.0 * (j2 * (j2 + 1.0) - mv * mv) - n) - 2.0 * mv;
    h.at(dicke_state_index(n, m, Spin::up), dicke_state_index(n, m, Spin::up)) = bath - 1.0;
    h.at(dicke_state_index(n, m, Spin::down), dicke_state_index(n, m, Spin::down)) =
        bath + 1.0;
    if (k < n) {
      // -2 lambda' s+ J- couples (M, up) to (M+1, down).
      const double zeta = -2.0 * lamp * ladder_down_element(n, m.twice_m + 2);
      const int iu = dicke_state_index(n, m, Spin::up);
      const int jd = dicke_state_index(n, m.next(), Spin::down);
      h.at(iu, jd) = zeta;
      h.at(jd, iu) = zeta;
    }
  }
  return h;
}

EigenDecomposition hermitian_eigendecomposition(const DenseHermitian& h) {
  const int n = h.dim;
  std::vector<cplx> a = h.a;
  std::vector<cplx> v(static_cast<std::size_t>(n) * n, cplx{0.0, 0.0});
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto at = [&](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto vat = [&](int i, int j) -> cplx& { return v[static_cast<std::size_t>(i) * n + j]; };

  double scale = 0.0;
  for (const cplx& x : a) scale += std::norm(x);
  scale = std::sqrt(scale);
  if (scale == 0.0) scale = 1.0;
  const double off_tol = 1e-14 * scale;

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    if (std::sqrt(2.0 * off) <= off_tol) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const cplx phase = apq / mag;  // e^{i phi}
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double tt = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
        const double c = 1.0 / std::hypot(tt, 1.0);
        const double s = tt * c;

        // Unitary plane rotation J: J_pp = c, J_pq = s e^{i phi},
        // J_qp = -s e^{-i phi}, J_qq = c; apply A <- J^dagger A J.
        at(p, p) = app - tt * mag;
        at(q, q) = aqq + tt * mag;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = at(k, p);
          const cplx akq = at(k, q);
          at(k, p) = c * akp - s * std::conj(phase) * akq;
          at(k, q) = s * phase * akp + c * akq;
          at(p, k) = std::conj(at(k, p));
          at(q, k) = std::conj(at(k, q));
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = vat(k, p);
          const cplx vkq = vat(k, q);
          vat(k, p) = c * vkp - s * std::conj(phase) * vkq;
          vat(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == max_sweeps)
    throw std::runtime_error("hermitian_eigendecomposition: Jacobi sweeps exhausted");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return at(i, i).real() < at(j, j).real(); });

  EigenDecomposition eig;
  eig.dim = n;
  eig.eigenvalues.resize(n);
  eig.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    eig.eigenvalues[j] = at(order[j], order[j]).real();
    for (int i = 0; i < n; ++i)
      eig.vectors[static_cast<std::size_t>(j) * n + i] = vat(i, order[j]);
  }
  return eig;
}

std::vector<cplx> dense_evolve(const EigenDecomposition& eig, std::span<const cplx> psi0,
                               double t) {
  const int n = eig.dim;
  if (static_cast<int>(psi0.size()) != n)
    throw std::invalid_argument("dense_evolve: dimension mismatch");
  std::vector<cplx> coeff(n, cplx{0.0, 0.0});
  for (int j = 0; j < n; ++j) {
    cplx c{0.0, 0.0};
    for (int i = 0; i < n; ++i) c += std::conj(eig.vec(i, j)) * psi0[i];
    coeff[j] = c * std::polar(1.0, -eig.eigenvalues[j] * t);
  }
  std::vector<cplx> psi(n, cplx{0.0, 0.0});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) psi[i] += eig.vec(i, j) * coeff[j];
  return psi;
}

std::vector<cplx> dense_evolve(const DenseHermitian& h, std::span<const cplx> psi0,
                               double t) {
  return dense_evolve(hermitian_eigendecomposition(h), psi0, t);
}

std::vector<cplx> dicke_product_vector(const ModelParams& params, DickeIndex m0,
                                       const QubitState& q0) {
  if (!params.on_grid(m0))
    throw std::invalid_argument("dicke_product_vector: M off the Dicke grid");
  std::vector<cplx> psi(2 * (static_cast<std::size_t>(params.n()) + 1), cplx{0.0, 0.0});
  psi[dicke_state_index(params.n(), m0, Spin::up)] = q0.up;
  psi[dicke_state_index(params.n(), m0, Spin::down)] = q0.down;
  return psi;
}

ReducedDensity dense_reduced_density(int n, std::span<const cplx> psi) {
  ReducedDensity rho;
  for (int k = 0; k <= n; ++k) {
    const cplx up = psi[2 * static_cast<std::size_t>(k)];
    const cplx down = psi[2 * static_cast<std::size_t>(k) + 1];
    rho.uu += std::norm(up);
    rho.dd += std::norm(down);
    rho.ud += up * std::conj(down);
  }
  return rho;
}

DickeOracle::DickeOracle(const ModelParams& params)
    : params_(params), eig_(hermitian_eigendecomposition(dense_hamiltonian(params))) {}

std::vector<cplx> DickeOracle::evolve(std::span<const cplx> psi0, double t) const {
  return dense_evolve(eig_, psi0, t);
}

double DickeOracle::purity(const QubitState& q0, double t) const {
  if (!is_normalized(q0))
    throw std::invalid_argument("DickeOracle::purity: qubit state not normalized");
  const auto psi0 = dicke_product_vector(params_, ground_state(params_), q0);
  const auto psi = dense_evolve(eig_, psi0, t);
  return lmg::purity(dense_reduced_density(params_.n(), psi));
}

double purity_oracle(const ModelParams& params, const QubitState& q0, double t) {
  return DickeOracle(params).purity(q0, t);
}

DenseHermitian full_spin_hamiltonian(const ModelParams& params) {
  const int n = params.n();
  if (n > 8) throw std::invalid_argument("full_spin_hamiltonian: N must be <= 8");
  const int dim = 1 << (n + 1);
  const double lam = params.lambda();
  const double lamp = params.lambda_prime();

  DenseHermitian h(dim);
  for (int x = 0; x < dim; ++x) {
    const int central = x & 1;
    const unsigned bath = static_cast<unsigned>(x) >> 1;
    const int down = std::popcount(bath);
    // -sum_i sigma_z(i) over the bath, and -sigma_z of the central qubit.
    h.at(x, x) += -static_cast<double>(n - 2 * down) - (1.0 - 2.0 * central);
    // Bath flip-flop: -(lambda/N)(sx sx + sy sy) summed over pairs.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const unsigned bi = (bath >> i) & 1u;
        const unsigned bj = (bath >> j) & 1u;
        if (bi == bj) continue;
        const int y = x ^ (1 << (i + 1)) ^ (1 << (j + 1));
        h.at(x, y) += -2.0 * lam / n;
      }
    }
    // Qubit-bath flip-flop: -lambda' (sx_i sx + sy_i sy) summed over i.
    for (int i = 0; i < n; ++i) {
      const unsigned bi = (bath >> i) & 1u;
      if (static_cast<int>(bi) == central) continue;
      const int y = x ^ (1 << (i + 1)) ^ 1;
      h.at(x, y) += -2.0 * lamp;
    }
  }
  return h;
}

std::vector<cplx> dicke_embedding(int n, DickeIndex m) {
  if (n > 8) throw std::invalid_argument("dicke_embedding: N must be <= 8");
  const int weight = (n - m.twice_m) / 2;  // number of flipped (down) spins
  std::vector<cplx> vec(1u << n, cplx{0.0, 0.0});
  long count = 0;
  for (unsigned x = 0; x < (1u << n); ++x)
    if (std::popcount(x) == weight) ++count;
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  for (unsigned x = 0; x < (1u << n); ++x)
    if (std::popcount(x) == weight) vec[x] = amp;
  return vec;
}

FullSpinOracle::FullSpinOracle(const ModelParams& params)
    : params_(params), eig_(hermitian_eigendecomposition(full_spin_hamiltonian(params))) {}

std::vector<cplx> FullSpinOracle::initial_state(DickeIndex m0, const QubitState& q0) const {
  const auto bath = dicke_embedding(params_.n(), m0);
  std::vector<cplx> psi(bath.size() * 2, cplx{0.0, 0.0});
  for (std::size_t x = 0; x < bath.size(); ++x) {
    psi[(x << 1) | 0] = bath[x] * q0.up;
    psi[(x << 1) | 1] = bath[x] * q0.down;
  }
  return psi;
}

std::vector<cplx> FullSpinOracle::evolve(std::span<const cplx> psi0, double t) const {
  return dense_evolve(eig_, psi0, t);
}

double FullSpinOracle::purity(const QubitState& q0, double t) const {
  if (!is_normalized(q0))
    throw std::invalid_argument("FullSpinOracle::purity: qubit state not normalized");
  const auto psi = dense_evolve(eig_, initial_state(ground_state(params_), q0), t);
  ReducedDensity rho;
  for (std::size_t x = 0; x < psi.size() / 2; ++x) {
    rho.uu += std::norm(psi[(x << 1) | 0]);
    rho.dd += std::norm(psi[(x << 1) | 1]);
    rho.ud += psi[(x << 1) | 0] * std::conj(psi[(x << 1) | 1]);
  }
  return lmg::purity(rho);
}

double full_spin_purity(const ModelParams& params, const QubitState& q0, double t) {
  return FullSpinOracle(params).purity(q0, t);
}

}  // namespace lmg::oracle
