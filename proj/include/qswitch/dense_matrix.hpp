#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qswitch/state_vector.hpp"

namespace qswitch {

// Plain row-major complex matrix. This is the slow oracle representation used
// to cross-check the bit-level operator paths; dimensions are capped
// accordingly.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::uint64_t dim); // zero matrix

    static DenseMatrix identity(std::uint64_t dim);
    static DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

    std::uint64_t dim() const { return dim_; }

    Amplitude& at(std::uint64_t row, std::uint64_t col) {
        return entries_[row * dim_ + col];
    }
    const Amplitude& at(std::uint64_t row, std::uint64_t col) const {
        return entries_[row * dim_ + col];
    }

    DenseMatrix operator*(const DenseMatrix& other) const;
    DenseMatrix operator+(const DenseMatrix& other) const;
    DenseMatrix operator-(const DenseMatrix& other) const;
    StateVector apply(const StateVector& s) const;

    DenseMatrix adjoint() const;
    bool is_unitary(double tol = kNormTol) const;
    double max_abs_diff(const DenseMatrix& other) const;
    bool approx_equal(const DenseMatrix& other, double tol = kNormTol) const;

    bool operator==(const DenseMatrix&) const = default;

private:
    std::uint64_t dim_ = 0;
    std::vector<Amplitude> entries_;
};

inline constexpr std::uint64_t kMaxDenseDim = 1024;

} // namespace qswitch
