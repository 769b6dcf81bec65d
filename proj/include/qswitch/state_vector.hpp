#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qswitch {

using Amplitude = std::complex<double>;

inline constexpr double kNormTol = 1e-12;

// Dense amplitude array over the computational basis of m qubits. Qubit 0 is
// the least-significant bit of the basis index, matching BitVector.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(int m); // |0...0>

    static StateVector basis(int m, std::uint64_t index);
    static StateVector uniform(int m);

    int qubit_count() const { return m_; }
    std::uint64_t size() const { return std::uint64_t(1) << m_; }

    Amplitude& operator[](std::uint64_t k) { return amps_[k]; }
    const Amplitude& operator[](std::uint64_t k) const { return amps_[k]; }

    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    double norm_sq() const;
    double norm() const;
    bool is_normalized(double tol = kNormTol) const;
    void normalize();

    // max_k |a_k - b_k|
    double max_abs_diff(const StateVector& other) const;
    bool approx_equal(const StateVector& other, double tol = kNormTol) const;

    StateVector operator+(const StateVector& other) const;
    StateVector operator-(const StateVector& other) const;
    StateVector operator*(Amplitude scale) const;

private:
    int m_ = 0;
    std::vector<Amplitude> amps_;
};

// Dense simulation beyond this register width is out of scope.
inline constexpr int kMaxQubits = 24;

} // namespace qswitch
