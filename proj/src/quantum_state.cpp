#include "qsph/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsph/errors.hpp"

namespace qsph {

namespace {

double sum_norm_squared(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return acc;
}

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ConfigError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw NumericalError("state vector: empty amplitude list");
    }
    const double n2 = sum_norm_squared(amplitudes_);
    const double defect = std::abs(n2 - 1.0);
    if (!std::isfinite(n2) || defect > kRenormalizeLimit) {
        throw NumericalError("state vector: norm^2 = " + std::to_string(n2) +
                             " is not within tolerance of 1");
    }
    if (defect > kNormTolerance) {
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& z : amplitudes_) z *= inv;
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ConfigError("basis state index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

double StateVector::norm_squared() const { return sum_norm_squared(amplitudes_); }

NormalizedState normalize(std::span<const Complex> raw) {
    const double norm = std::sqrt(sum_norm_squared(raw));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ConfigError("normalize: input has no nonzero finite entry");
    }
    std::vector<Complex> amps(raw.begin(), raw.end());
    for (auto& z : amps) z /= norm;
    return {StateVector(std::move(amps)), norm};
}

NormalizedState normalize(std::span<const double> raw) {
    std::vector<Complex> c(raw.begin(), raw.end());
    return normalize(std::span<const Complex>(c));
}

Complex inner_product(std::span<const Complex> x, std::span<const Complex> y) {
    require_same_length(x.size(), y.size(), "inner_product");
    Complex acc{};
    for (std::size_t k = 0; k < x.size(); ++k) acc += std::conj(x[k]) * y[k];
    return acc;
}

Complex inner_product(const StateVector& x, const StateVector& y) {
    return inner_product(x.amplitudes(), y.amplitudes());
}

Operator::Operator(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Operator Operator::identity(std::size_t dim) {
    Operator id(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) id(i, i) = 1.0;
    return id;
}

Operator Operator::pauli_z() {
    Operator z(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return z;
}

Operator Operator::adjoint() const {
    Operator out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

bool Operator::is_unitary(double tol) const {
    if (!is_square()) return false;
    return (adjoint() * *this).max_abs_diff(identity(rows_)) <= tol;
}

double Operator::max_abs_diff(const Operator& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ConfigError("operator: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

Operator& Operator::operator+=(const Operator& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ConfigError("operator: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ConfigError("operator: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Operator& Operator::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ConfigError("operator: inner dimensions differ");
    Operator out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

Operator outer_product(const StateVector& v, const StateVector& u) {
    Operator out(v.dim(), u.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j) out(i, j) = v[i] * std::conj(u[j]);
    return out;
}

Operator tensor(const Operator& a, const Operator& b) {
    const std::size_t p = b.rows();
    const std::size_t q = b.cols();
    Operator out(a.rows() * p, a.cols() * q);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < p; ++k)
                for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
        }
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto& x : a.amplitudes())
        for (const auto& y : b.amplitudes()) amps.push_back(x * y);
    return StateVector(std::move(amps));
}

std::vector<Complex> apply_raw(const Operator& op, std::span<const Complex> s) {
    require_same_length(op.cols(), s.size(), "apply");
    std::vector<Complex> out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < op.cols(); ++j) acc += op(i, j) * s[j];
        out[i] = acc;
    }
    return out;
}

StateVector apply(const Operator& op, const StateVector& s) {
    if (!op.is_square()) throw ConfigError("apply: operator is not square");
    return StateVector(apply_raw(op, s.amplitudes()));
}

}  // namespace qsph
