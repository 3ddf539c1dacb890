#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lmg/model.hpp"

using namespace lmg;

namespace {

// Independent reference: exhaustive minimization of the Dicke-level energy
// over the whole grid, ties resolved toward the smaller M.
DickeIndex brute_force_ground_state(const ModelParams& p) {
  DickeIndex best{-p.n()};
  double ebest = bath_eigenenergy(p, best);
  for (int tm = -p.n() + 2; tm <= p.n(); tm += 2) {
    const double e = bath_eigenenergy(p, DickeIndex{tm});
    if (e < ebest) {
      ebest = e;
      best = DickeIndex{tm};
    }
  }
  return best;
}

std::vector<double> lambda_samples() {
  std::vector<double> ls;
  for (double l = 0.05; l < 6.0; l += 0.173) ls.push_back(l);
  return ls;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ModelParams(1, 0.5, Coupling::case_i), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(10, 0.0, Coupling::case_i), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(10, -2.0, Coupling::case_i), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(10, 0.5, Coupling::explicit_prime), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(10, 0.5, Coupling::case_i, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(10, 0.5, Coupling::case_i, std::nullopt, 0.9),
                  std::invalid_argument);
  CHECK_NOTHROW(ModelParams(10, 0.5, Coupling::explicit_prime, 0.0));
  CHECK(ModelParams(10, 0.5, Coupling::case_i).gamma() == 1.0);
}

TEST_CASE("coupling strength per convention") {
  CHECK(coupling_strength(ModelParams(100, 0.5, Coupling::case_i)) ==
        doctest::Approx(0.005).epsilon(1e-14));
  CHECK(coupling_strength(ModelParams(100, 0.5, Coupling::case_ii)) ==
        doctest::Approx(0.05).epsilon(1e-14));
  CHECK(coupling_strength(ModelParams(5000, 2.0, Coupling::case_i)) ==
        doctest::Approx(4e-4).epsilon(1e-14));
  CHECK(coupling_strength(ModelParams(64, 3.0, Coupling::explicit_prime, 0.125)) == 0.125);
}

TEST_CASE("dicke grid") {
  const ModelParams even(10, 1.0, Coupling::case_i);
  CHECK(even.on_grid(DickeIndex{10}));
  CHECK(even.on_grid(DickeIndex{-10}));
  CHECK(even.on_grid(DickeIndex{0}));
  CHECK_FALSE(even.on_grid(DickeIndex{3}));
  CHECK_FALSE(even.on_grid(DickeIndex{12}));
  const ModelParams odd(5, 1.0, Coupling::case_i);
  CHECK(odd.on_grid(DickeIndex{5}));
  CHECK(odd.on_grid(DickeIndex{-3}));
  CHECK_FALSE(odd.on_grid(DickeIndex{0}));
}

TEST_CASE("ground state selection") {
  CHECK(ground_state(ModelParams(10, 0.5, Coupling::case_i)).value() == 5.0);
  CHECK(ground_state(ModelParams(100, 2.0, Coupling::case_i)).value() == 25.0);
  CHECK(ground_state(ModelParams(10, 1.5, Coupling::case_i)).value() == 3.0);
  // The boundary belongs to the fully polarized branch.
  CHECK(ground_state(ModelParams(10, 1.0, Coupling::case_i)).value() == 5.0);
  CHECK(ground_state(ModelParams(10, 0.2, Coupling::case_ii)).value() == 5.0);
  // Odd N lives on the half-integer grid.
  CHECK(ground_state(ModelParams(5, 2.0, Coupling::case_i)).value() == 1.5);
  // N/(2 lambda) exactly halfway between levels: degenerate pair, smaller M.
  const ModelParams tie(10, 2.0, Coupling::case_i);  // N/(2 lambda) = 2.5
  CHECK(bath_eigenenergy(tie, DickeIndex{4}) ==
        doctest::Approx(bath_eigenenergy(tie, DickeIndex{6})).epsilon(1e-15));
  CHECK(ground_state(tie).value() == 2.0);
}

TEST_CASE("ground state minimizes the spectrum (exhaustive)") {
  for (int n : {2, 3, 4, 5, 10, 17, 64, 128, 200}) {
    for (double lambda : lambda_samples()) {
      const ModelParams p(n, lambda, Coupling::case_i);
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(ground_state(p) == brute_force_ground_state(p));
    }
  }
}

TEST_CASE("ground state is piecewise constant with jumps at level crossings") {
  for (int n : {8, 12, 13}) {
    // Jumps can only sit where N/(2 lambda) crosses the midpoint between two
    // adjacent grid values; midpoints have doubled index of opposite parity.
    for (int tm_mid = (n % 2 == 0) ? 1 : 2; tm_mid < n; tm_mid += 2) {
      const double lambda_star = static_cast<double>(n) / tm_mid;
      if (lambda_star <= 1.0) continue;
      const ModelParams below(n, lambda_star * (1 - 1e-9), Coupling::case_i);
      const ModelParams at(n, lambda_star, Coupling::case_i);
      const ModelParams above(n, lambda_star * (1 + 1e-9), Coupling::case_i);
      CHECK(ground_state(below).twice_m == tm_mid + 1);
      CHECK(ground_state(above).twice_m == tm_mid - 1);
      CHECK(ground_state(at).twice_m == tm_mid - 1);  // tie -> smaller
    }
    // Constant in between: scan a fine grid, levels step down one at a time.
    int jumps = 0;
    int prev = ground_state(ModelParams(n, 1.0001, Coupling::case_i)).twice_m;
    for (double lambda = 1.0001; lambda < 20.0; lambda *= 1.001) {
      const int cur = ground_state(ModelParams(n, lambda, Coupling::case_i)).twice_m;
      if (cur != prev) {
        ++jumps;
        CHECK(cur == prev - 2);
        prev = cur;
      }
    }
    CHECK(jumps <= n / 2 + 1);
  }
}

TEST_CASE("bath eigenenergy") {
  CHECK(bath_eigenenergy(ModelParams(10, 0.7, Coupling::case_i), DickeIndex{10}) ==
        doctest::Approx(-10.0).epsilon(1e-15));
  CHECK(bath_eigenenergy(ModelParams(10, 0.5, Coupling::case_i), DickeIndex{10}) ==
        doctest::Approx(-10.0).epsilon(1e-15));
  CHECK(bath_eigenenergy(ModelParams(4, 2.0, Coupling::case_i), DickeIndex{0}) ==
        doctest::Approx(-4.0).epsilon(1e-15));
  CHECK_THROWS_AS(bath_eigenenergy(ModelParams(4, 2.0, Coupling::case_i), DickeIndex{1}),
                  std::invalid_argument);
}

TEST_CASE("block hamiltonian entries") {
  const ModelParams p(4, 2.0, Coupling::case_i);  // lambda' = 0.5
  const BlockSpec spec = block_hamiltonian(p, DickeIndex{0});
  CHECK(spec.alpha == doctest::Approx(-5.0).epsilon(1e-15));
  CHECK(spec.beta == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(spec.zeta == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-15));

  // At M = N/2 - 1 the root collapses to 2 sqrt(N).
  for (int n : {6, 25, 1000}) {
    for (Coupling c : {Coupling::case_i, Coupling::case_ii}) {
      const ModelParams q(n, 1.7, c);
      const BlockSpec top = block_hamiltonian(q, DickeIndex{n - 2});
      CHECK(top.zeta ==
            doctest::Approx(-2.0 * q.lambda_prime() * std::sqrt(n)).epsilon(1e-14));
    }
  }

  const ModelParams decoupled(4, 2.0, Coupling::explicit_prime, 0.0);
  const BlockSpec d = block_hamiltonian(decoupled, DickeIndex{0});
  CHECK(d.zeta == 0.0);
  CHECK(d.alpha == doctest::Approx(-5.0));
  CHECK(d.beta == doctest::Approx(-4.0));

  CHECK_THROWS_AS(block_hamiltonian(p, DickeIndex{4}), std::invalid_argument);
  CHECK_THROWS_AS(block_hamiltonian(p, DickeIndex{6}), std::invalid_argument);
}

TEST_CASE("block eigensystem examples") {
  SUBCASE("generic block") {
    const BlockEigen e = block_eigensystem({DickeIndex{0}, -5.0, -4.0, -std::sqrt(6.0)});
    CHECK(e.x1 == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(e.x2 == doctest::Approx(-7.0).epsilon(1e-14));
    CHECK(e.a == doctest::Approx(-0.6324555320336759).epsilon(1e-14));
    CHECK(e.b == doctest::Approx(0.7745966692414834).epsilon(1e-14));
  }
  SUBCASE("symmetric block") {
    const BlockEigen e = block_eigensystem({DickeIndex{0}, 0.0, 0.0, -1.0});
    CHECK(e.x1 == doctest::Approx(1.0));
    CHECK(e.x2 == doctest::Approx(-1.0));
    CHECK(e.a == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(e.b == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  }
  SUBCASE("decoupled block keeps identity eigenvectors") {
    const BlockEigen e = block_eigensystem({DickeIndex{0}, -5.0, -4.0, 0.0});
    CHECK(e.x1 == -4.0);
    CHECK(e.x2 == -5.0);
    CHECK(e.a == 0.0);
    CHECK(e.b == 1.0);
    const BlockEigen f = block_eigensystem({DickeIndex{0}, -4.0, -5.0, 0.0});
    CHECK(f.a == 1.0);
    CHECK(f.b == 0.0);
  }
}

TEST_CASE("block eigensystem properties over random parameters") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> pick_n(2, 200);
  std::uniform_real_distribution<double> pick_lambda(0.05, 6.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 500; ++trial) {
    const int n = pick_n(rng);
    const Coupling c = trial % 3 == 0   ? Coupling::case_i
                       : trial % 3 == 1 ? Coupling::case_ii
                                        : Coupling::explicit_prime;
    const ModelParams p(n, pick_lambda(rng), c,
                        c == Coupling::explicit_prime
                            ? std::optional<double>(2.0 * unit(rng) - 1.0)
                            : std::nullopt);
    const int steps = static_cast<int>(unit(rng) * n);  // M in [-N/2, N/2)
    const DickeIndex m{-n + 2 * steps};
    const BlockSpec spec = block_hamiltonian(p, m);
    const BlockEigen e = block_eigensystem(spec);
    CAPTURE(n);
    CAPTURE(m.twice_m);

    CHECK(std::abs(e.a * e.a + e.b * e.b - 1.0) <= 1e-12);
    CHECK(e.x1 >= e.x2);

    // Residuals of both eigenpairs against the assembled 2x2 block.
    const double r1u = spec.alpha * e.a + spec.zeta * e.b - e.x1 * e.a;
    const double r1d = spec.zeta * e.a + spec.beta * e.b - e.x1 * e.b;
    CHECK(std::hypot(r1u, r1d) <= 1e-10 * (std::abs(e.x1) + 1.0));
    const double r2u = spec.alpha * (-e.b) + spec.zeta * e.a - e.x2 * (-e.b);
    const double r2d = spec.zeta * (-e.b) + spec.beta * e.a - e.x2 * e.a;
    CHECK(std::hypot(r2u, r2d) <= 1e-10 * (std::abs(e.x2) + 1.0));

    // Trace and determinant.
    const double scale = std::abs(spec.alpha) + std::abs(spec.beta) + std::abs(spec.zeta) + 1.0;
    CHECK(std::abs(e.x1 + e.x2 - (spec.alpha + spec.beta)) <= 1e-10 * scale);
    CHECK(std::abs(e.x1 * e.x2 - (spec.alpha * spec.beta - spec.zeta * spec.zeta)) <=
          1e-10 * scale * scale);

    // Flipping the sign of zeta must leave the spectrum and the squared
    // amplitudes untouched (everything downstream depends on zeta^2 only).
    BlockSpec flipped = spec;
    flipped.zeta = -spec.zeta;
    const BlockEigen ef = block_eigensystem(flipped);
    CHECK(ef.x1 == doctest::Approx(e.x1).epsilon(1e-14));
    CHECK(ef.x2 == doctest::Approx(e.x2).epsilon(1e-14));
    CHECK(ef.a * ef.a == doctest::Approx(e.a * e.a).epsilon(1e-12));
    CHECK(ef.b * ef.b == doctest::Approx(e.b * e.b).epsilon(1e-12));
    CHECK(ef.a * ef.a * ef.b * ef.b ==
          doctest::Approx(e.a * e.a * e.b * e.b).epsilon(1e-12));
  }
}
