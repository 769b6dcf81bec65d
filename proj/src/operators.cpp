#include "qswitch/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qswitch {

void apply_x_inplace(const BitVector& x, std::span<Amplitude> amps) {
    const std::uint64_t mask = x.bits;
    if (mask == 0) return;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        std::uint64_t j = k ^ mask;
        if (k < j) std::swap(amps[k], amps[j]);
    }
}

void apply_diag_inplace(const BoolFn& f, std::span<Amplitude> amps) {
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (f.value(k)) amps[k] = -amps[k];
    }
}

void apply_u_inplace(const PlayerInput& u, std::span<Amplitude> amps) {
    apply_diag_inplace(u.f, amps);
    apply_x_inplace(u.x, amps);
}

StateVector apply_x(const BitVector& x, const StateVector& s) {
    check_arity_match(x.n, s.qubit_count(), "apply_x");
    StateVector out = s;
    apply_x_inplace(x, out.amplitudes());
    return out;
}

StateVector apply_diag(const BoolFn& f, const StateVector& s) {
    check_arity_match(f.arity(), s.qubit_count(), "apply_diag");
    StateVector out = s;
    apply_diag_inplace(f, out.amplitudes());
    return out;
}

StateVector apply_u(const PlayerInput& u, const StateVector& s) {
    check_arity_match(u.arity(), s.qubit_count(), "apply_u");
    StateVector out = s;
    apply_u_inplace(u, out.amplitudes());
    return out;
}

DenseMatrix dense_matrix(const PlayerInput& u) {
    std::uint64_t dim = std::uint64_t(1) << u.arity();
    DenseMatrix m(dim);
    for (std::uint64_t z = 0; z < dim; ++z) {
        m.at(z ^ u.x.bits, z) = u.f.value(z) ? -1.0 : 1.0;
    }
    return m;
}

StateVector apply_hadamard(int qubit, const StateVector& s) {
    if (qubit < 0 || qubit >= s.qubit_count()) {
        throw std::out_of_range("apply_hadamard: qubit index " +
                                std::to_string(qubit) + " out of range for " +
                                std::to_string(s.qubit_count()) + " qubits");
    }
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector out = s;
    auto amps = out.amplitudes();
    const std::uint64_t low = std::uint64_t(1) << qubit;
    const std::uint64_t stride = low << 1;
    for (std::uint64_t base = 0; base < amps.size(); base += stride) {
        for (std::uint64_t k = 0; k < low; ++k) {
            Amplitude a = amps[base + k];
            Amplitude b = amps[base + k + low];
            amps[base + k] = (a + b) * inv_sqrt2;
            amps[base + k + low] = (a - b) * inv_sqrt2;
        }
    }
    return out;
}

} // namespace qswitch
