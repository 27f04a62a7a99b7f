// Copyright 2026 The qcfnest Authors
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

#ifndef QCFNEST_QUANTUM_H
#define QCFNEST_QUANTUM_H

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qcfnest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Tolerance for exact algebraic identities (hermiticity, trace, completeness).
inline constexpr double kAlgebraTolerance = 1e-10;
/// Floor for eigenvalue-based positivity checks on computed outputs.
inline constexpr double kEigenvalueFloor = 1e-8;

/// Builds a matrix from row-major entries. Throws std::invalid_argument if
/// `entries.size() != rows * cols`.
ComplexMatrix matrix_from_row_major(std::size_t rows, std::size_t cols, const std::vector<Complex> &entries);

/// Smallest eigenvalue of the Hermitian part of a square matrix.
double min_hermitian_eigenvalue(const ComplexMatrix &m);

/// Traces out the second tensor factor of an operator on A (x) B.
ComplexMatrix partial_trace_second(const ComplexMatrix &m, std::size_t dim_first, std::size_t dim_second);

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
   public:
    /// Throws std::invalid_argument when any invariant fails beyond `kAlgebraTolerance`.
    explicit DensityOperator(ComplexMatrix matrix);

    static DensityOperator pure(const Eigen::VectorXcd &ket);
    static DensityOperator basis_state(std::size_t dim, std::size_t index);
    static DensityOperator maximally_mixed(std::size_t dim);

    std::size_t dim() const {
        return static_cast<std::size_t>(matrix_.rows());
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

   private:
    ComplexMatrix matrix_;
};

/// Operator-sum representation; every operator is dim_out x dim_in.
struct KrausChannel {
    std::vector<ComplexMatrix> operators;
};

/// Unitary on system (x) environment with a fixed environment input state.
/// Composite index is `system_index * env_dim + env_index`.
struct DilationChannel {
    ComplexMatrix unitary;
    std::size_t env_dim;
    DensityOperator env_state;
};

class QuantumChannel {
   public:
    /// Throws std::invalid_argument unless sum_k K_k^dag K_k = I.
    explicit QuantumChannel(KrausChannel kraus);
    /// Throws std::invalid_argument unless the unitary is square, sized to a
    /// multiple of env_dim, unitary, and env_state has dimension env_dim.
    explicit QuantumChannel(DilationChannel dilation);

    std::size_t input_dim() const;
    std::size_t output_dim() const;

    bool is_kraus() const {
        return std::holds_alternative<KrausChannel>(form_);
    }
    const KrausChannel &kraus() const {
        return std::get<KrausChannel>(form_);
    }
    const DilationChannel &dilation() const {
        return std::get<DilationChannel>(form_);
    }

   private:
    std::variant<KrausChannel, DilationChannel> form_;
};

/// Generalized measurement; elements are PSD and sum to identity.
class Povm {
   public:
    /// Labels default to "0", "1", ... when left empty.
    explicit Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels = {});

    /// Projective measurement onto the computational basis of `dim`.
    static Povm computational(std::size_t dim);

    std::size_t dim() const;
    std::size_t size() const {
        return elements_.size();
    }
    const ComplexMatrix &element(std::size_t index) const;
    const std::vector<std::string> &labels() const {
        return labels_;
    }

   private:
    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
};

enum class StandardChannelKind { identity, bit_flip, depolarizing };

struct StandardChannel {
    StandardChannelKind kind = StandardChannelKind::identity;
    /// Flip probability f for bit_flip, mixing weight lambda for depolarizing.
    double parameter = 0.0;
};

/// Qubit channel in Kraus form.
///   identity:       {I}
///   bit_flip(f):    {sqrt(1-f) I, sqrt(f) X}
///   depolarizing(l): {sqrt(1-3l/4) I, sqrt(l/4) X, sqrt(l/4) Y, sqrt(l/4) Z}
QuantumChannel make_standard_channel(StandardChannel spec);

/// The same channels in dilation form with env_dim <= 3.
///
/// identity and bit_flip use a pure |0><0| environment of dimension 2.
/// depolarizing has Kraus rank 4, so it uses a partial swap
/// sqrt(1-l) I + i sqrt(l) SWAP against a maximally mixed qubit environment.
QuantumChannel make_standard_dilation(StandardChannel spec);

/// Stinespring dilation of a Kraus set against a pure |0><0| environment.
/// Requires operators.size() <= env_dim and square Kraus operators. The
/// isometry is completed to a unitary by Gram-Schmidt over the standard basis.
QuantumChannel dilate(const KrausChannel &kraus, std::size_t env_dim = 3);

DensityOperator apply_channel(const QuantumChannel &channel, const DensityOperator &rho);

/// Born rule Tr[Pi_i rho], clamped into [0, 1].
double measure_probability(const Povm &povm, std::size_t outcome_index, const DensityOperator &rho);

/// Probability that a state sent through `channel` is read as `wrong_outcome_index`.
double error_rate(
    const QuantumChannel &channel, const DensityOperator &rho_x, const Povm &povm, std::size_t wrong_outcome_index);

}  // namespace qcfnest

#endif
