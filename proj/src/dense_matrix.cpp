#include "qswitch/dense_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qswitch/errors.hpp"

namespace qswitch {

DenseMatrix::DenseMatrix(std::uint64_t dim) : dim_(dim) {
    if (dim == 0) {
        throw std::invalid_argument("DenseMatrix: dimension must be positive");
    }
    if (dim > kMaxDenseDim) {
        throw CapacityError("DenseMatrix: dimension " + std::to_string(dim) +
                            " exceeds the oracle limit of " +
                            std::to_string(kMaxDenseDim));
    }
    entries_.assign(dim * dim, Amplitude(0.0, 0.0));
}

DenseMatrix DenseMatrix::identity(std::uint64_t dim) {
    DenseMatrix m(dim);
    for (std::uint64_t k = 0; k < dim; ++k) m.at(k, k) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.dim_ * b.dim_);
    for (std::uint64_t ar = 0; ar < a.dim_; ++ar) {
        for (std::uint64_t ac = 0; ac < a.dim_; ++ac) {
            Amplitude av = a.at(ar, ac);
            if (av == Amplitude(0.0, 0.0)) continue;
            for (std::uint64_t br = 0; br < b.dim_; ++br) {
                for (std::uint64_t bc = 0; bc < b.dim_; ++bc) {
                    out.at(ar * b.dim_ + br, ac * b.dim_ + bc) = av * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseMatrix::operator*: dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::uint64_t r = 0; r < dim_; ++r) {
        for (std::uint64_t k = 0; k < dim_; ++k) {
            Amplitude v = at(r, k);
            if (v == Amplitude(0.0, 0.0)) continue;
            for (std::uint64_t c = 0; c < dim_; ++c) {
                out.at(r, c) += v * other.at(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseMatrix::operator+: dimension mismatch");
    }
    DenseMatrix out = *this;
    for (std::uint64_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] += other.entries_[k];
    }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseMatrix::operator-: dimension mismatch");
    }
    DenseMatrix out = *this;
    for (std::uint64_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] -= other.entries_[k];
    }
    return out;
}

StateVector DenseMatrix::apply(const StateVector& s) const {
    if (dim_ != s.size()) {
        throw std::invalid_argument("DenseMatrix::apply: dimension mismatch");
    }
    StateVector out = s;
    for (std::uint64_t r = 0; r < dim_; ++r) {
        Amplitude acc(0.0, 0.0);
        for (std::uint64_t c = 0; c < dim_; ++c) {
            acc += at(r, c) * s[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::uint64_t r = 0; r < dim_; ++r) {
        for (std::uint64_t c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

bool DenseMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) <= tol;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseMatrix::max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::uint64_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool DenseMatrix::approx_equal(const DenseMatrix& other, double tol) const {
    return max_abs_diff(other) <= tol;
}

} // namespace qswitch
