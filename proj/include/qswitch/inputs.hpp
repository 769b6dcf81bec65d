#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qswitch {

// Element of Z_2^n. Component i (1-based, as in x_1..x_n) lives in bit i-1,
// so x_1 is the least-significant bit and the packed word doubles as the
// computational-basis index of |x>.
struct BitVector {
    std::uint64_t bits = 0;
    int n = 0;

    BitVector() = default;
    BitVector(std::uint64_t bits, int n);

    static BitVector zero(int n) { return BitVector(0, n); }

    bool bit(int i) const { return (bits >> i) & 1u; } // 0-based component index
    bool is_zero() const { return bits == 0; }

    BitVector operator^(const BitVector& other) const;
    bool operator==(const BitVector&) const = default;

    // "5/3" = value 5 over 3 components.
    std::string to_string() const;
};

// Truth table of a function f: Z_2^n -> Z_2 with f(0) = 0, packed into 64-bit
// words. Bit z of the table (z interpreted per the BitVector index convention)
// holds f(z).
class BoolFn {
public:
    BoolFn() = default;
    explicit BoolFn(int n); // zero function

    static BoolFn zero(int n) { return BoolFn(n); }
    // f(point) = 1, zero elsewhere; point must be nonzero to keep f(0) = 0.
    static BoolFn indicator(const BitVector& point);
    static BoolFn from_words(int n, std::vector<std::uint64_t> words);
    static BoolFn from_hex(int n, const std::string& hex);

    int arity() const { return n_; }
    std::uint64_t table_size() const { return std::uint64_t(1) << n_; }

    bool value(std::uint64_t z_index) const {
        return (words_[z_index >> 6] >> (z_index & 63)) & 1u;
    }
    bool operator()(const BitVector& z) const;

    // Setting index 0 to 1 violates f(0) = 0 and throws.
    void set(std::uint64_t z_index, bool v);

    const std::vector<std::uint64_t>& words() const { return words_; }

    // Lowercase hex, least-significant table bit = f(0). One digit per four
    // table entries, most-significant nibble first.
    std::string to_hex() const;

    bool operator==(const BoolFn&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// A player's full input (x, f); equivalently the label of the signed
// permutation X(x) D(f) the player applies inside the switch.
struct PlayerInput {
    BitVector x;
    BoolFn f;

    PlayerInput() = default;
    PlayerInput(BitVector x, BoolFn f);

    int arity() const { return x.n; }
    bool operator==(const PlayerInput&) const = default;
    std::string to_string() const;
};

// Widest arity whose truth table the BoolFn representation accepts.
// 2^26 bits = 8 MiB per table; beyond that sweeps stop being desk-scale.
inline constexpr int kMaxArity = 26;

void check_arity_match(int a, int b, const char* where);

} // namespace qswitch
