// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcap/capability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "entcap/errors.hpp"
#include "entcap/random.hpp"

namespace entcap {

std::string_view to_string(RateMethod method) {
  switch (method) {
    case RateMethod::AnalyticSchmidt:
      return "analytic-schmidt";
    case RateMethod::Commutator:
      return "commutator";
    case RateMethod::FiniteDifference:
      return "finite-difference";
  }
  return "unknown";
}

double two_term_rate(double x) {
  return 2.0 * std::sqrt(x * (1.0 - x)) * std::log2(x / (1.0 - x));
}

namespace {

constexpr double kSupportCutoff = 1e-12;

// -Tr[rho_dot log2 rho_a] on the support of rho_a.
double support_rate(const ComplexMatrix& rho_dot, const ComplexMatrix& rho_a) {
  const EigenDecomposition ed = eigh(rho_a);
  const std::size_t n = rho_a.rows();
  std::vector<ComplexVector> kernel;
  Complex acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexVector v = ed.eigenvectors.column_vector(k);
    if (ed.eigenvalues[k] < kSupportCutoff) {
      kernel.push_back(v);
      continue;
    }
    acc -= std::log2(ed.eigenvalues[k]) * inner(v, matvec(rho_dot, v));
  }
  double leak = 0.0;
  for (const auto& u : kernel) {
    const ComplexVector image = matvec(rho_dot, u);
    for (const auto& w : kernel) leak = std::max(leak, std::abs(inner(w, image)));
  }
  if (leak > 1e-8 || std::abs(acc.imag()) > 1e-9) {
    std::ostringstream os;
    os << "entanglement rate: inconsistent reduced dynamics (kernel block " << leak
       << ", imaginary part " << acc.imag() << ", spectrum";
    for (double l : ed.eigenvalues) os << ' ' << l;
    os << ")";
    throw NumericalConsistencyError(os.str());
  }
  return acc.real();
}

void require_hamiltonian(const ComplexMatrix& h, const BipartiteState& state, const char* who) {
  if (!h.is_square() || h.rows() != state.dim()) {
    throw DimensionError(std::string(who) + ": Hamiltonian of size " + std::to_string(h.rows()) +
                         " does not act on a " + std::to_string(state.dA()) + "x" +
                         std::to_string(state.dB()) + " state");
  }
  if (!is_hermitian(h)) throw NotHermitianError(std::string(who) + ": Hamiltonian is not Hermitian");
}

}  // namespace

double rate_commutator(const ComplexMatrix& h, const BipartiteState& state, double t) {
  require_hamiltonian(h, state, "rate_commutator");
  const ComplexMatrix u = expm_hermitian(h, t);
  const ComplexMatrix rho = u * state.density() * u.adjoint();
  const ComplexMatrix rho_dot = -kI * partial_trace(commutator(h, rho), state.dA(), state.dB(), Subsystem::A);
  const ComplexMatrix rho_a = partial_trace(rho, state.dA(), state.dB(), Subsystem::A);
  return support_rate(rho_dot, rho_a);
}

double rate_zero_general(const ComplexMatrix& h, const BipartiteState& state) {
  require_hamiltonian(h, state, "rate_zero_general");
  const ComplexMatrix psi = state.amplitude_matrix();
  const ComplexMatrix h_psi(state.dA(), state.dB(), matvec(h, state.amplitudes()));
  // Tr_B |u><v| = U V^dagger for amplitude matrices U, V.
  const ComplexMatrix traced = h_psi * psi.adjoint() - psi * h_psi.adjoint();
  return support_rate(-kI * traced, psi * psi.adjoint());
}

double rate_zero_schmidt(const SelfInverseFactor& xa, const SelfInverseFactor& xb,
                         const SchmidtDecomposition& sd) {
  if (sd.vectorsA.rows() != xa.dim() || sd.vectorsB.rows() != xb.dim()) {
    throw DimensionError("rate_zero_schmidt: Schmidt vectors do not match factor dimensions");
  }
  const ComplexMatrix xa_s = sd.vectorsA.adjoint() * xa.matrix() * sd.vectorsA;
  const ComplexMatrix xb_s = sd.vectorsB.adjoint() * xb.matrix() * sd.vectorsB;
  const auto& l = sd.coefficients;
  Complex acc = 0.0;
  for (std::size_t m = 0; m < sd.rank(); ++m)
    for (std::size_t n = 0; n < sd.rank(); ++n) {
      if (m == n) continue;
      acc += std::sqrt(l[m] * l[n]) * std::log2(l[m] / l[n]) * xa_s(m, n) * xb_s(m, n);
    }
  acc *= kI;
  if (std::abs(acc.imag()) > 1e-9) {
    std::ostringstream os;
    os << "rate_zero_schmidt: imaginary residue " << acc.imag() << " (real part " << acc.real()
       << ", rank " << sd.rank() << ")";
    throw NumericalConsistencyError(os.str());
  }
  return acc.real();
}

double rate_finite_difference(const ComplexMatrix& h, const BipartiteState& state, double t,
                              double step) {
  require_hamiltonian(h, state, "rate_finite_difference");
  auto entropy_at = [&](double s) {
    return entropy(BipartiteState::from_unnormalized(state.dA(), state.dB(),
                                                     matvec(expm_hermitian(h, s), state.amplitudes())));
  };
  return central_diff(entropy_at, t, step);
}

CapabilityResult capability_bound() {
  const ScalarMaxResult r = golden_max(two_term_rate, 0.5, 1.0 - 1e-9, 1e-10);
  CapabilityResult out;
  out.beta = r.maximum;
  out.x0 = r.argmax;
  out.evaluations = r.evaluations;
  return out;
}

CapabilityResult capability_self_inverse(const SelfInverseFactor& xa, const SelfInverseFactor& xb) {
  CapabilityResult out = capability_bound();
  BipartiteState state = optimal_input(xa, xb, out.x0);
  const double achieved = rate_zero_schmidt(xa, xb, schmidt(state));
  if (std::abs(achieved - out.beta) > 1e-8) {
    throw NumericalConsistencyError("capability_self_inverse: optimal input reaches " +
                                    std::to_string(achieved) + " instead of beta");
  }
  out.optimalState = std::move(state);
  return out;
}

std::vector<RateReport> rate_sweep(const ProductHamiltonian& h, const BipartiteState& state,
                                   std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("rate_sweep: grid must be sorted");
  auto evolved = [&](double s) { return evolve_state(h, state, s); };
  auto entropy_at = [&](double s) { return entropy(evolved(s)); };

  std::vector<RateReport> out;
  out.reserve(grid.size() * 3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const BipartiteState now = evolved(t);
    const double s = entropy(now);
    out.push_back({t, s, rate_commutator(h.matrix(), state, t), RateMethod::Commutator});
    out.push_back({t, s, rate_zero_schmidt(h.factorA(), h.factorB(), schmidt(now)),
                   RateMethod::AnalyticSchmidt});
    if (i > 0 && i + 1 < grid.size()) {
      out.push_back({t, s, central_diff(entropy_at, t, 1e-5), RateMethod::FiniteDifference});
    }
  }
  return out;
}

double max_method_deviation(std::span<const RateReport> reports) {
  std::map<double, std::pair<double, double>> range;
  for (const auto& r : reports) {
    auto [it, fresh] = range.try_emplace(r.t, r.gamma, r.gamma);
    if (!fresh) {
      it->second.first = std::min(it->second.first, r.gamma);
      it->second.second = std::max(it->second.second, r.gamma);
    }
  }
  double worst = 0.0;
  for (const auto& [t, mm] : range) worst = std::max(worst, mm.second - mm.first);
  return worst;
}

double gate_capability(const SelfInverseFactor& xa, const SelfInverseFactor& xb, double t,
                       int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("gate_capability: trials must be at least 1");
  const ProductHamiltonian h(xa, xb);

  auto candidate = [&](std::span<const Complex> gamma, std::span<const Complex> delta) {
    const PseudoQubitPair p = make_pseudo_qubit_pair(xa, xb, gamma, delta);
    const double formula = concurrence_two_term(p.overlapA, p.overlapB, t);
    const double direct = pure_concurrence(evolve_state(h, BipartiteState::product(p.gamma, p.delta), t));
    if (std::abs(formula - direct) > 1e-8) {
      throw NumericalConsistencyError("gate_capability: two-term concurrence " + std::to_string(formula) +
                                      " disagrees with evolved state " + std::to_string(direct));
    }
    return formula;
  };

  auto balanced = [](const SelfInverseFactor& x) {
    ComplexVector v = x.eigenplus().column_vector(0);
    const ComplexVector m = x.eigenminus().column_vector(0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += m[i];
    return normalized(v);
  };

  double best = candidate(balanced(xa), balanced(xb));
  Rng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const ComplexVector gamma = random_unit_vector(xa.dim(), rng);
    const ComplexVector delta = random_unit_vector(xb.dim(), rng);
    best = std::max(best, candidate(gamma, delta));
  }
  return best;
}

double ecs_initial_rate(Spin j, Complex eta, double x) {
  const ProductHamiltonian h1(parity(j), parity(j));
  return rate_zero_general(h1.matrix(), ecs(j, eta, x));
}

}  // namespace entcap
