// Copyright 2026 The qntk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qntk/tangent_kernel.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace qntk {

namespace {

PauliAxis generator_axis(GateKind kind) {
    return kind == GateKind::RotX ? PauliAxis::X : PauliAxis::Z;
}

void check_dataset(std::span<const LabeledState> dataset) {
    if (dataset.empty()) {
        throw std::invalid_argument("dataset must not be empty");
    }
    const std::size_t n = dataset.front().state.num_qubits();
    for (const auto &x : dataset) {
        if (x.state.num_qubits() != n) {
            throw std::invalid_argument("dataset mixes register sizes");
        }
    }
}

} // namespace

double residual(const LabeledState &x, const ParamCircuit &circuit, std::span<const double> params,
                const Observable &obs) {
    return expectation(run(circuit, params, x.state), obs) - x.label;
}

std::vector<double> gradient(const LabeledState &x, const ParamCircuit &circuit,
                             std::span<const double> params, const Observable &obs) {
    Statevector phi = run(circuit, params, x.state);
    Statevector lambda = phi;
    obs.apply(lambda);

    std::vector<double> grad(circuit.param_count(), 0.0);
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        const Gate &g = *it;
        const double angle = g.is_parametric() ? params[g.param_slot] : 0.0;
        if (g.is_parametric()) {
            grad[g.param_slot] =
                kernels::omp::pauli_matrix_element(lambda.amplitudes(), phi.amplitudes(),
                                                   generator_axis(g.kind), g.qubit)
                    .imag();
        }
        apply_gate_adjoint(phi, g, angle);
        apply_gate_adjoint(lambda, g, angle);
    }
    return grad;
}

std::vector<double> gradient_param_shift(const LabeledState &x, const ParamCircuit &circuit,
                                         std::span<const double> params, const Observable &obs) {
    if (params.size() != circuit.param_count()) {
        throw std::invalid_argument("expected " + std::to_string(circuit.param_count()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    constexpr double shift = std::numbers::pi / 2;
    ParamVector shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t l = 0; l < params.size(); ++l) {
        shifted[l] = params[l] + shift;
        const double plus = residual(x, circuit, shifted, obs);
        shifted[l] = params[l] - shift;
        const double minus = residual(x, circuit, shifted, obs);
        shifted[l] = params[l];
        grad[l] = (plus - minus) / 2;
    }
    return grad;
}

double qntk_value(const LabeledState &a, const LabeledState &b, const ParamCircuit &circuit,
                  std::span<const double> params, const Observable &obs) {
    if (a.state.num_qubits() != b.state.num_qubits()) {
        throw std::invalid_argument("kernel arguments have different register sizes");
    }
    const auto ga = gradient(a, circuit, params, obs);
    const auto gb = gradient(b, circuit, params, obs);
    double k = 0.0;
    for (std::size_t l = 0; l < ga.size(); ++l) {
        k += ga[l] * gb[l];
    }
    return k;
}

KernelMatrix::KernelMatrix(Eigen::MatrixXd entries) : entries_{std::move(entries)} {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("kernel matrix must be square");
    }
}

double KernelMatrix::max_asymmetry() const {
    return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd KernelMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Eigen::MatrixXd gradient_matrix(std::span<const LabeledState> dataset, const ParamCircuit &circuit,
                                std::span<const double> params, const Observable &obs) {
    check_dataset(dataset);
    const auto m = static_cast<std::int64_t>(dataset.size());
    Eigen::MatrixXd jac(m, static_cast<Eigen::Index>(circuit.param_count()));
    // Rows are disjoint, so the parallel write needs no synchronization.
#pragma omp parallel for schedule(dynamic) if (m > 1 && !omp_in_parallel())
    for (std::int64_t i = 0; i < m; ++i) {
        const auto g = gradient(dataset[static_cast<std::size_t>(i)], circuit, params, obs);
        jac.row(i) =
            Eigen::Map<const Eigen::RowVectorXd>(g.data(), static_cast<Eigen::Index>(g.size()));
    }
    return jac;
}

KernelMatrix gram_matrix(std::span<const LabeledState> dataset, const ParamCircuit &circuit,
                         std::span<const double> params, const Observable &obs) {
    const Eigen::MatrixXd jac = gradient_matrix(dataset, circuit, params, obs);
    Eigen::MatrixXd k = jac * jac.transpose();
    // Mirror the lower triangle so the result is symmetric bit-for-bit.
    k.triangularView<Eigen::StrictlyUpper>() = k.transpose().triangularView<Eigen::StrictlyUpper>();
    return KernelMatrix(std::move(k));
}

std::vector<double> residuals(std::span<const LabeledState> dataset, const ParamCircuit &circuit,
                              std::span<const double> params, const Observable &obs) {
    std::vector<double> eps;
    eps.reserve(dataset.size());
    for (const auto &x : dataset) {
        eps.push_back(residual(x, circuit, params, obs));
    }
    return eps;
}

LazyTrajectory lazy_dynamics(const KernelMatrix &kernel, std::span<const double> eps0, double eta,
                             std::size_t steps) {
    if (eps0.size() != kernel.size()) {
        throw std::invalid_argument("residual vector has length " + std::to_string(eps0.size()) +
                                    " but the kernel is " + std::to_string(kernel.size()) + "x" +
                                    std::to_string(kernel.size()));
    }
    if (eta < 0.0) {
        throw std::invalid_argument("learning rate must be non-negative");
    }
    LazyTrajectory out;
    if (kernel.size() > 0) {
        out.contractive = eta * kernel.eigenvalues().maxCoeff() < 2.0;
    }
    const auto m = static_cast<Eigen::Index>(kernel.size());
    const Eigen::MatrixXd step = Eigen::MatrixXd::Identity(m, m) - eta * kernel.entries();
    Eigen::VectorXd eps = Eigen::Map<const Eigen::VectorXd>(eps0.data(), m);
    out.residuals.reserve(steps + 1);
    out.residuals.emplace_back(eps0.begin(), eps0.end());
    for (std::size_t t = 0; t < steps; ++t) {
        eps = step * eps;
        out.residuals.emplace_back(eps.data(), eps.data() + eps.size());
    }
    return out;
}

TrainingHistory gd_train(std::span<const LabeledState> dataset, const ParamCircuit &circuit,
                         ParamVector params, const Observable &obs, double eta, std::size_t steps) {
    check_dataset(dataset);
    TrainingHistory history;
    history.residuals.reserve(steps + 1);
    history.params.reserve(steps + 1);
    for (std::size_t t = 0;; ++t) {
        history.residuals.push_back(residuals(dataset, circuit, params, obs));
        history.params.push_back(params);
        if (t == steps) {
            break;
        }
        // dL/dtheta = J^T eps
        const Eigen::MatrixXd jac = gradient_matrix(dataset, circuit, params, obs);
        const auto &eps = history.residuals.back();
        const Eigen::VectorXd grad =
            jac.transpose() *
            Eigen::Map<const Eigen::VectorXd>(eps.data(), static_cast<Eigen::Index>(eps.size()));
        for (std::size_t l = 0; l < params.size(); ++l) {
            params[l] -= eta * grad(static_cast<Eigen::Index>(l));
        }
    }
    return history;
}

} // namespace qntk
