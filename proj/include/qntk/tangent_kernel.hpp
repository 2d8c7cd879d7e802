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
/**
 * @file tangent_kernel.hpp
 * Residuals, parameter gradients and the quantum neural tangent kernel
 *
 *     K(x_m, x_i) = sum_l d eps_m / d theta_l * d eps_i / d theta_l,
 *
 * where eps_i = <x_i|U^dag O U|x_i> - y_i. Also holds the frozen-kernel
 * (lazy) residual dynamics and the full gradient-descent reference.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qntk/ansatz.hpp"
#include "qntk/observable.hpp"

namespace qntk {

struct LabeledState {
    Statevector state;
    double label = 0.0;
};

[[nodiscard]] double residual(const LabeledState &x, const ParamCircuit &circuit,
                              std::span<const double> params, const Observable &obs);

/**
 * @brief Exact gradient of the residual by a reverse-mode adjoint sweep.
 *
 * One forward pass to U|x>, then a backward pass carrying both
 * |phi> = G_k...G_1|x> and |lambda> = G_{k+1}^dag...G_L^dag O U|x>. For a
 * rotation exp(-i t P/2) the derivative is Im <lambda|P|phi>.
 */
[[nodiscard]] std::vector<double> gradient(const LabeledState &x, const ParamCircuit &circuit,
                                           std::span<const double> params, const Observable &obs);

/// Two-point shift rule (eps(t + pi/2) - eps(t - pi/2)) / 2 for every slot.
[[nodiscard]] std::vector<double> gradient_param_shift(const LabeledState &x,
                                                       const ParamCircuit &circuit,
                                                       std::span<const double> params,
                                                       const Observable &obs);

[[nodiscard]] double qntk_value(const LabeledState &a, const LabeledState &b,
                                const ParamCircuit &circuit, std::span<const double> params,
                                const Observable &obs);

/// Symmetric PSD Gram matrix of kernel values over a dataset.
class KernelMatrix {
  public:
    KernelMatrix() = default;
    explicit KernelMatrix(Eigen::MatrixXd entries);

    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
    [[nodiscard]] double operator()(std::size_t m, std::size_t i) const {
        return entries_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i));
    }
    [[nodiscard]] const Eigen::MatrixXd &entries() const { return entries_; }

    [[nodiscard]] double max_asymmetry() const;
    /// Ascending eigenvalues.
    [[nodiscard]] Eigen::VectorXd eigenvalues() const;

  private:
    Eigen::MatrixXd entries_;
};

/// m x Lambda matrix of residual gradients, one row per data point.
[[nodiscard]] Eigen::MatrixXd gradient_matrix(std::span<const LabeledState> dataset,
                                              const ParamCircuit &circuit,
                                              std::span<const double> params,
                                              const Observable &obs);

/// K = J J^T from the cached gradient matrix J.
[[nodiscard]] KernelMatrix gram_matrix(std::span<const LabeledState> dataset,
                                       const ParamCircuit &circuit, std::span<const double> params,
                                       const Observable &obs);

[[nodiscard]] std::vector<double> residuals(std::span<const LabeledState> dataset,
                                            const ParamCircuit &circuit,
                                            std::span<const double> params, const Observable &obs);

struct LazyTrajectory {
    /// residuals[t] = (I - eta K)^t eps0 for t = 0..steps
    std::vector<std::vector<double>> residuals;
    /// eta * lambda_max(K) < 2; the iteration may diverge otherwise.
    bool contractive = true;
};

[[nodiscard]] LazyTrajectory lazy_dynamics(const KernelMatrix &kernel, std::span<const double> eps0,
                                           double eta, std::size_t steps);

struct TrainingHistory {
    std::vector<std::vector<double>> residuals; ///< per step, t = 0..steps
    std::vector<ParamVector> params;            ///< per step, t = 0..steps
};

/// Full-batch gradient descent on L = 1/2 sum eps_i^2.
[[nodiscard]] TrainingHistory gd_train(std::span<const LabeledState> dataset,
                                       const ParamCircuit &circuit, ParamVector params,
                                       const Observable &obs, double eta, std::size_t steps);

} // namespace qntk
