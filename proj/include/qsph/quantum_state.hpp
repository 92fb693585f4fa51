#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qsph {

using Complex = std::complex<double>;

// Unit-norm complex amplitude vector. For an m-qubit register the length is
// 2^m and index k is the big-endian value of the basis bit string.
class StateVector {
public:
    // Norm defect |sum |a_k|^2 - 1| <= kNormTolerance: stored as given.
    // Defect <= kRenormalizeLimit: silently renormalized.
    // Anything larger (or an empty vector) throws NumericalError.
    static constexpr double kNormTolerance = 1e-12;
    static constexpr double kRenormalizeLimit = 1e-8;

    explicit StateVector(std::vector<Complex> amplitudes);

    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

    // Sum of squared moduli, recomputed from the stored amplitudes.
    double norm_squared() const;

private:
    std::vector<Complex> amplitudes_;
};

struct NormalizedState {
    StateVector state;
    double norm;  // Euclidean norm of the raw input; raw = norm * state
};

NormalizedState normalize(std::span<const Complex> raw);
NormalizedState normalize(std::span<const double> raw);

// <x|y> = sum_k conj(x_k) y_k
Complex inner_product(const StateVector& x, const StateVector& y);
Complex inner_product(std::span<const Complex> x, std::span<const Complex> y);

// Dense row-major complex matrix. Square for operators acting on states;
// outer products of unequal-length vectors give rectangular ones.
class Operator {
public:
    Operator(std::size_t rows, std::size_t cols);

    static Operator identity(std::size_t dim);
    static Operator pauli_z();

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Operator adjoint() const;
    bool is_unitary(double tol = 1e-10) const;
    // max_ij |A_ij - B_ij|; shapes must agree.
    double max_abs_diff(const Operator& other) const;

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(Complex scale);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Complex scale, Operator op) { return op *= scale; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

// |v><u| : entries v_i conj(u_j)
Operator outer_product(const StateVector& v, const StateVector& u);

// Kronecker product, (A (x) B)[i*p + k, j*q + l] = A[i,j] B[k,l].
Operator tensor(const Operator& a, const Operator& b);
StateVector tensor(const StateVector& a, const StateVector& b);

// Plain matrix-vector product.
std::vector<Complex> apply_raw(const Operator& op, std::span<const Complex> s);
// Matrix-vector product for norm-preserving operators; the result must pass
// the StateVector norm check.
StateVector apply(const Operator& op, const StateVector& s);

}  // namespace qsph
