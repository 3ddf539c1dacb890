#include "lmg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmg/antijc.hpp"

namespace lmg {

bool is_normalized(const QubitState& q, double tol) {
  return std::abs(std::norm(q.up) + std::norm(q.down) - 1.0) <= tol;
}

QubitState balanced_qubit() {
  const double r = 1.0 / std::sqrt(2.0);
  return QubitState{cplx{r, 0.0}, cplx{r, 0.0}};
}

std::string to_string(TraceMethod m) {
  switch (m) {
    case TraceMethod::exact:
      return "exact";
    case TraceMethod::closed_form:
      return "closed-form";
    case TraceMethod::hp_limit:
      return "hp-limit";
  }
  return "?";
}

cplx TotalState::amplitude(DickeIndex m, Spin spin) const {
  for (const Entry& e : entries)
    if (e.m == m && e.spin == spin) return e.amp;
  return cplx{0.0, 0.0};
}

double TotalState::norm() const {
  double s = 0.0;
  for (const Entry& e : entries) s += std::norm(e.amp);
  return std::sqrt(s);
}

Mat2c block_propagator(const BlockEigen& eig, double t) {
  const cplx global = std::polar(1.0, -eig.x2 * t);
  const cplx rel = std::polar(1.0, -eig.gap() * t);
  const double a2 = eig.a * eig.a;
  const double b2 = eig.b * eig.b;
  const double ab = eig.a * eig.b;
  Mat2c u;
  u.uu = global * (a2 * rel + b2);
  u.ud = global * (ab * (rel - 1.0));
  u.du = u.ud;
  u.dd = global * (b2 * rel + a2);
  return u;
}

namespace {

void add_amp(TotalState& st, DickeIndex m, Spin spin, cplx amp) {
  for (auto& e : st.entries) {
    if (e.m == m && e.spin == spin) {
      e.amp += amp;
      return;
    }
  }
  st.entries.push_back({m, spin, amp});
}

}  // namespace

TotalState evolve_dicke_product(const ModelParams& params, DickeIndex m0,
                                const QubitState& q0, double t) {
  if (!params.on_grid(m0))
    throw std::invalid_argument("evolve_dicke_product: M off the Dicke grid");
  if (!is_normalized(q0))
    throw std::invalid_argument("evolve_dicke_product: qubit state not normalized");

  TotalState st;
  st.n = params.n();
  const int n = params.n();

  if (q0.up != cplx{0.0, 0.0}) {
    if (m0.twice_m == n) {
      // |N/2,N/2>|up> is an eigenstate of energy -(N+1).
      add_amp(st, m0, Spin::up, q0.up * std::polar(1.0, (n + 1) * t));
    } else {
      const Mat2c u = block_propagator(block_eigensystem(block_hamiltonian(params, m0)), t);
      add_amp(st, m0, Spin::up, q0.up * u.uu);
      add_amp(st, m0.next(), Spin::down, q0.up * u.du);
    }
  }
  if (q0.down != cplx{0.0, 0.0}) {
    if (m0.twice_m == -n) {
      // Mirror corner: |N/2,-N/2>|down> is an eigenstate of energy +(N+1).
      add_amp(st, m0, Spin::down, q0.down * std::polar(1.0, -(n + 1) * t));
    } else {
      // |N/2,m0>|down> is the lower basis vector of the block at m0 - 1.
      const Mat2c u =
          block_propagator(block_eigensystem(block_hamiltonian(params, m0.prev())), t);
      add_amp(st, m0.prev(), Spin::up, q0.down * u.ud);
      add_amp(st, m0, Spin::down, q0.down * u.dd);
    }
  }

  std::sort(st.entries.begin(), st.entries.end(),
            [](const TotalState::Entry& a, const TotalState::Entry& b) {
              if (a.m != b.m) return a.m < b.m;
              return a.spin < b.spin;
            });
  return st;
}

TotalState evolve_product_state(const ModelParams& params, const QubitState& q0,
                                double t) {
  return evolve_dicke_product(params, ground_state(params), q0, t);
}

ReducedDensity reduced_density(const TotalState& state) {
  ReducedDensity rho;
  const auto& es = state.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].spin == Spin::up) {
      rho.uu += std::norm(es[i].amp);
      // Coherence pairs the up and down amplitudes at the same bath index;
      // entries are sorted, so a partner is adjacent.
      if (i + 1 < es.size() && es[i + 1].m == es[i].m && es[i + 1].spin == Spin::down)
        rho.ud += es[i].amp * std::conj(es[i + 1].amp);
    } else {
      rho.dd += std::norm(es[i].amp);
    }
  }
  return rho;
}

double purity(const ReducedDensity& rho) {
  return rho.uu * rho.uu + rho.dd * rho.dd + 2.0 * std::norm(rho.ud);
}

namespace {

// |a^2 e^{-i g t} + b^2|^2 and the complementary transfer weight, expanded so
// they match the propagator entries bit-for-bit.
void stay_and_transfer(const BlockEigen& eig, double t, double& stay,
                       double& transfer) {
  const double a2 = eig.a * eig.a;
  const double b2 = eig.b * eig.b;
  const double c = std::cos(eig.gap() * t);
  stay = a2 * a2 + b2 * b2 + 2.0 * a2 * b2 * c;
  transfer = 2.0 * a2 * b2 * (1.0 - c);
}

}  // namespace

ClosedFormTerms closed_form_terms(const ModelParams& params, double t) {
  const DickeIndex mg = ground_state(params);
  ClosedFormTerms terms;
  if (mg.twice_m == params.n()) {
    terms.variant = PhaseVariant::broken;
    terms.f = 1.0;
    terms.i = 0.0;
  } else {
    terms.variant = PhaseVariant::symmetric;
    const BlockEigen eig = block_eigensystem(block_hamiltonian(params, mg));
    stay_and_transfer(eig, t, terms.f, terms.i);
  }
  if (mg.prev() < params.min_index())
    throw std::invalid_argument("closed_form_terms: no subspace below the ground index");
  const BlockEigen lower = block_eigensystem(block_hamiltonian(params, mg.prev()));
  stay_and_transfer(lower, t, terms.g, terms.h);
  return terms;
}

double purity_from_terms(const ClosedFormTerms& terms) {
  const double p1 = 0.5 * (terms.f + terms.h);
  const double p2 = 0.5 * (terms.i + terms.g);
  return p1 * p1 + p2 * p2 + 0.5 * terms.g * terms.f;
}

double purity_symmetric_closed(const ModelParams& params, double t) {
  if (params.lambda() <= 1.0)
    throw std::invalid_argument("purity_symmetric_closed: requires lambda > 1");
  return purity_from_terms(closed_form_terms(params, t));
}

double purity_broken_closed(const ModelParams& params, double t) {
  if (params.lambda() > 1.0)
    throw std::invalid_argument("purity_broken_closed: requires lambda <= 1");
  return purity_from_terms(closed_form_terms(params, t));
}

ReducedDensity broken_phase_cg_density(const ModelParams& params,
                                       const QubitState& q0, double t) {
  if (params.lambda() >= 1.0)
    throw std::invalid_argument("broken_phase_cg_density: requires lambda < 1");
  if (!is_normalized(q0))
    throw std::invalid_argument("broken_phase_cg_density: qubit state not normalized");
  ReducedDensity rho;
  rho.uu = std::norm(q0.up);
  rho.dd = std::norm(q0.down);
  rho.ud = q0.up * std::conj(q0.down) *
           std::polar(1.0, (2.0 * params.lambda() / params.n() + 2.0) * t);
  return rho;
}

namespace {

void require_balanced(const QubitState& q0, const char* what) {
  if (!is_normalized(q0) || std::abs(std::norm(q0.up) - 0.5) > 1e-12)
    throw std::invalid_argument(std::string(what) +
                                ": closed forms assume balanced qubit populations");
}

}  // namespace

PurityTrace purity_trace(const ModelParams& params, const QubitState& q0,
                         std::span<const double> times, TraceMethod method) {
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("purity_trace: times must be ascending");

  PurityTrace trace;
  trace.meta = TraceMeta{params.n(), params.lambda(), params.coupling(), method};
  trace.times.assign(times.begin(), times.end());
  trace.values.reserve(times.size());

  switch (method) {
    case TraceMethod::exact:
      if (!is_normalized(q0))
        throw std::invalid_argument("purity_trace: qubit state not normalized");
      for (double t : times)
        trace.values.push_back(purity(reduced_density(evolve_product_state(params, q0, t))));
      break;
    case TraceMethod::closed_form:
      require_balanced(q0, "purity_trace[closed-form]");
      for (double t : times)
        trace.values.push_back(params.lambda() > 1.0 ? purity_symmetric_closed(params, t)
                                                     : purity_broken_closed(params, t));
      break;
    case TraceMethod::hp_limit:
      require_balanced(q0, "purity_trace[hp-limit]");
      if (params.lambda() == 1.0)
        throw std::invalid_argument(
            "purity_trace[hp-limit]: undefined at the critical point lambda = 1");
      for (double t : times)
        trace.values.push_back(params.lambda() < 1.0 ? purity_broken_hp(params, t)
                                                     : purity_symmetric_hp(params, t));
      break;
  }
  return trace;
}

}  // namespace lmg
