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

#include "qcfnest/quantum.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcfnest {

namespace {

std::string dims_of(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

double max_abs_entry(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

void require_probability(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

ComplexMatrix matrix_from_row_major(std::size_t rows, std::size_t cols, const std::vector<Complex> &entries) {
    if (rows == 0 || cols == 0 || entries.size() != rows * cols) {
        throw std::invalid_argument(
            "expected " + std::to_string(rows * cols) + " entries for a " + std::to_string(rows) + "x" +
            std::to_string(cols) + " matrix, got " + std::to_string(entries.size()));
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = entries[r * cols + c];
        }
    }
    return m;
}

double min_hermitian_eigenvalue(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("eigenvalues need a non-empty square matrix, got " + dims_of(m));
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ComplexMatrix partial_trace_second(const ComplexMatrix &m, std::size_t dim_first, std::size_t dim_second) {
    auto n = static_cast<Eigen::Index>(dim_first * dim_second);
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument(
            "partial trace: " + dims_of(m) + " does not match " + std::to_string(dim_first) + "*" +
            std::to_string(dim_second));
    }
    auto a = static_cast<Eigen::Index>(dim_first);
    auto b = static_cast<Eigen::Index>(dim_second);
    ComplexMatrix out = ComplexMatrix::Zero(a, a);
    for (Eigen::Index i = 0; i < a; ++i) {
        for (Eigen::Index j = 0; j < a; ++j) {
            Complex acc = 0;
            for (Eigen::Index k = 0; k < b; ++k) {
                acc += m(i * b + k, j * b + k);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

DensityOperator::DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw std::invalid_argument("density operator must be square, got " + dims_of(matrix_));
    }
    if (max_abs_entry(matrix_ - matrix_.adjoint()) > kAlgebraTolerance) {
        throw std::invalid_argument("density operator is not Hermitian");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kAlgebraTolerance) {
        throw std::invalid_argument("density operator trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    if (min_hermitian_eigenvalue(matrix_) < -kAlgebraTolerance) {
        throw std::invalid_argument("density operator has a negative eigenvalue");
    }
}

DensityOperator DensityOperator::pure(const Eigen::VectorXcd &ket) {
    double norm = ket.norm();
    if (ket.size() == 0 || norm == 0.0) {
        throw std::invalid_argument("pure state needs a non-zero ket");
    }
    Eigen::VectorXcd v = ket / norm;
    return DensityOperator(v * v.adjoint());
}

DensityOperator DensityOperator::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(index) + " out of range for dim " + std::to_string(dim));
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return pure(v);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

QuantumChannel::QuantumChannel(KrausChannel kraus) : form_(std::move(kraus)) {
    const auto &ops = std::get<KrausChannel>(form_).operators;
    if (ops.empty()) {
        throw std::invalid_argument("Kraus channel needs at least one operator");
    }
    auto rows = ops.front().rows();
    auto cols = ops.front().cols();
    ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
    for (const auto &k : ops) {
        if (k.rows() != rows || k.cols() != cols) {
            throw std::invalid_argument("Kraus operators have mixed shapes: " + dims_of(ops.front()) + " vs " + dims_of(k));
        }
        sum += k.adjoint() * k;
    }
    if (max_abs_entry(sum - ComplexMatrix::Identity(cols, cols)) > kAlgebraTolerance) {
        throw std::invalid_argument("Kraus operators are not trace preserving");
    }
}

QuantumChannel::QuantumChannel(DilationChannel dilation) : form_(std::move(dilation)) {
    const auto &d = std::get<DilationChannel>(form_);
    auto n = d.unitary.rows();
    if (d.unitary.cols() != n || d.env_dim < 2 || n % static_cast<Eigen::Index>(d.env_dim) != 0 ||
        n == static_cast<Eigen::Index>(d.env_dim)) {
        throw std::invalid_argument(
            "dilation unitary " + dims_of(d.unitary) + " incompatible with env_dim " + std::to_string(d.env_dim));
    }
    if (d.env_state.dim() != d.env_dim) {
        throw std::invalid_argument("environment state dimension does not match env_dim");
    }
    if (max_abs_entry(d.unitary.adjoint() * d.unitary - ComplexMatrix::Identity(n, n)) > kAlgebraTolerance) {
        throw std::invalid_argument("dilation operator is not unitary");
    }
}

std::size_t QuantumChannel::input_dim() const {
    if (is_kraus()) {
        return static_cast<std::size_t>(kraus().operators.front().cols());
    }
    return static_cast<std::size_t>(dilation().unitary.rows()) / dilation().env_dim;
}

std::size_t QuantumChannel::output_dim() const {
    if (is_kraus()) {
        return static_cast<std::size_t>(kraus().operators.front().rows());
    }
    return input_dim();
}

Povm::Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) {
        throw std::invalid_argument("POVM needs at least one element");
    }
    auto n = elements_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto &e : elements_) {
        if (e.rows() != n || e.cols() != n) {
            throw std::invalid_argument("POVM elements must all be " + dims_of(elements_.front()));
        }
        if (max_abs_entry(e - e.adjoint()) > kAlgebraTolerance || min_hermitian_eigenvalue(e) < -kAlgebraTolerance) {
            throw std::invalid_argument("POVM element is not positive semidefinite");
        }
        sum += e;
    }
    if (max_abs_entry(sum - ComplexMatrix::Identity(n, n)) > kAlgebraTolerance) {
        throw std::invalid_argument("POVM elements do not sum to identity");
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            labels_.push_back(std::to_string(i));
        }
    } else if (labels_.size() != elements_.size()) {
        throw std::invalid_argument("POVM label count does not match element count");
    }
}

Povm Povm::computational(std::size_t dim) {
    std::vector<ComplexMatrix> elements;
    auto n = static_cast<Eigen::Index>(dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        p(i, i) = 1.0;
        elements.push_back(std::move(p));
    }
    return Povm(std::move(elements));
}

std::size_t Povm::dim() const {
    return static_cast<std::size_t>(elements_.front().rows());
}

const ComplexMatrix &Povm::element(std::size_t index) const {
    if (index >= elements_.size()) {
        throw std::invalid_argument(
            "POVM outcome index " + std::to_string(index) + " out of range (" + std::to_string(elements_.size()) +
            " outcomes)");
    }
    return elements_[index];
}

QuantumChannel make_standard_channel(StandardChannel spec) {
    ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    switch (spec.kind) {
        case StandardChannelKind::identity:
            return QuantumChannel(KrausChannel{{id}});
        case StandardChannelKind::bit_flip: {
            double f = spec.parameter;
            require_probability(f, "bit-flip probability");
            return QuantumChannel(KrausChannel{{std::sqrt(1 - f) * id, std::sqrt(f) * pauli_x()}});
        }
        case StandardChannelKind::depolarizing: {
            double l = spec.parameter;
            require_probability(l, "depolarizing weight");
            double w = std::sqrt(l / 4);
            return QuantumChannel(
                KrausChannel{{std::sqrt(1 - 3 * l / 4) * id, w * pauli_x(), w * pauli_y(), w * pauli_z()}});
        }
    }
    throw std::invalid_argument("unknown standard channel kind");
}

QuantumChannel make_standard_dilation(StandardChannel spec) {
    switch (spec.kind) {
        case StandardChannelKind::identity:
        case StandardChannelKind::bit_flip:
            return dilate(make_standard_channel(spec).kraus(), 2);
        case StandardChannelKind::depolarizing: {
            double l = spec.parameter;
            require_probability(l, "depolarizing weight");
            ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
            for (Eigen::Index s = 0; s < 2; ++s) {
                for (Eigen::Index e = 0; e < 2; ++e) {
                    swap(e * 2 + s, s * 2 + e) = 1.0;
                }
            }
            ComplexMatrix u = std::sqrt(1 - l) * ComplexMatrix::Identity(4, 4) + Complex(0, std::sqrt(l)) * swap;
            return QuantumChannel(DilationChannel{std::move(u), 2, DensityOperator::maximally_mixed(2)});
        }
    }
    throw std::invalid_argument("unknown standard channel kind");
}

QuantumChannel dilate(const KrausChannel &kraus, std::size_t env_dim) {
    const auto &ops = kraus.operators;
    if (ops.empty() || ops.size() > env_dim) {
        throw std::invalid_argument(
            std::to_string(ops.size()) + " Kraus operators do not fit an environment of dimension " +
            std::to_string(env_dim));
    }
    // Validates trace preservation.
    QuantumChannel checked{KrausChannel{ops}};
    auto d = ops.front().cols();
    if (ops.front().rows() != d) {
        throw std::invalid_argument("dilation needs square Kraus operators");
    }
    auto e = static_cast<Eigen::Index>(env_dim);
    auto n = d * e;

    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    std::vector<bool> filled(static_cast<std::size_t>(n), false);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < ops.size(); ++k) {
            auto env = static_cast<Eigen::Index>(k);
            for (Eigen::Index s = 0; s < d; ++s) {
                u(s * e + env, j * e) = ops[k](s, j);
            }
        }
        filled[static_cast<std::size_t>(j * e)] = true;
    }

    // Complete the isometry column set with an orthonormal basis of its complement.
    Eigen::Index candidate = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
        if (filled[static_cast<std::size_t>(col)]) {
            continue;
        }
        while (true) {
            if (candidate >= n) {
                throw std::runtime_error("failed to complete dilation to a unitary");
            }
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
            v(candidate++) = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (Eigen::Index c = 0; c < n; ++c) {
                    if (filled[static_cast<std::size_t>(c)]) {
                        v -= u.col(c) * u.col(c).dot(v);
                    }
                }
            }
            double norm = v.norm();
            if (norm > 1e-6) {
                u.col(col) = v / norm;
                filled[static_cast<std::size_t>(col)] = true;
                break;
            }
        }
    }
    return QuantumChannel(DilationChannel{std::move(u), env_dim, DensityOperator::basis_state(env_dim, 0)});
}

DensityOperator apply_channel(const QuantumChannel &channel, const DensityOperator &rho) {
    if (channel.input_dim() != rho.dim()) {
        throw std::invalid_argument(
            "channel expects dimension " + std::to_string(channel.input_dim()) + ", state has " +
            std::to_string(rho.dim()));
    }
    ComplexMatrix out;
    if (channel.is_kraus()) {
        auto n = static_cast<Eigen::Index>(channel.output_dim());
        out = ComplexMatrix::Zero(n, n);
        for (const auto &k : channel.kraus().operators) {
            out += k * rho.matrix() * k.adjoint();
        }
    } else {
        const auto &d = channel.dilation();
        ComplexMatrix joint = kron(rho.matrix(), d.env_state.matrix());
        out = partial_trace_second(d.unitary * joint * d.unitary.adjoint(), rho.dim(), d.env_dim);
    }
    return DensityOperator(0.5 * (out + out.adjoint()));
}

double measure_probability(const Povm &povm, std::size_t outcome_index, const DensityOperator &rho) {
    const auto &e = povm.element(outcome_index);
    if (povm.dim() != rho.dim()) {
        throw std::invalid_argument(
            "POVM dimension " + std::to_string(povm.dim()) + " does not match state dimension " +
            std::to_string(rho.dim()));
    }
    double p = (e * rho.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

double error_rate(
    const QuantumChannel &channel, const DensityOperator &rho_x, const Povm &povm, std::size_t wrong_outcome_index) {
    if (channel.output_dim() != povm.dim()) {
        throw std::invalid_argument("POVM dimension does not match channel output");
    }
    povm.element(wrong_outcome_index);
    return measure_probability(povm, wrong_outcome_index, apply_channel(channel, rho_x));
}

}  // namespace qcfnest
