#include "qswitch/state_vector.hpp"

#include <cmath>
#include <stdexcept>

#include "qswitch/errors.hpp"

namespace qswitch {

static void check_width(int m) {
    if (m < 1) {
        throw std::invalid_argument("StateVector: need at least one qubit");
    }
    if (m > kMaxQubits) {
        throw CapacityError("StateVector: register width " + std::to_string(m) +
                            " exceeds the dense-simulation limit of " +
                            std::to_string(kMaxQubits) + " qubits");
    }
}

StateVector::StateVector(int m) : m_(m) {
    check_width(m);
    amps_.assign(size(), Amplitude(0.0, 0.0));
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int m, std::uint64_t index) {
    StateVector s(m);
    if (index >= s.size()) {
        throw std::out_of_range("StateVector::basis: index beyond register");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::uniform(int m) {
    StateVector s(m);
    double a = 1.0 / std::sqrt(double(s.size()));
    for (auto& amp : s.amps_) amp = a;
    return s;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("StateVector::normalize: zero vector");
    }
    for (auto& a : amps_) a /= n;
}

double StateVector::max_abs_diff(const StateVector& other) const {
    if (m_ != other.m_) {
        throw std::invalid_argument("StateVector::max_abs_diff: width mismatch");
    }
    double worst = 0.0;
    for (std::uint64_t k = 0; k < size(); ++k) {
        worst = std::max(worst, std::abs(amps_[k] - other.amps_[k]));
    }
    return worst;
}

bool StateVector::approx_equal(const StateVector& other, double tol) const {
    return max_abs_diff(other) <= tol;
}

StateVector StateVector::operator+(const StateVector& other) const {
    if (m_ != other.m_) {
        throw std::invalid_argument("StateVector::operator+: width mismatch");
    }
    StateVector out = *this;
    for (std::uint64_t k = 0; k < size(); ++k) out.amps_[k] += other.amps_[k];
    return out;
}

StateVector StateVector::operator-(const StateVector& other) const {
    if (m_ != other.m_) {
        throw std::invalid_argument("StateVector::operator-: width mismatch");
    }
    StateVector out = *this;
    for (std::uint64_t k = 0; k < size(); ++k) out.amps_[k] -= other.amps_[k];
    return out;
}

StateVector StateVector::operator*(Amplitude scale) const {
    StateVector out = *this;
    for (auto& a : out.amps_) a *= scale;
    return out;
}

} // namespace qswitch
