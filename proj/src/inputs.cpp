#include "qswitch/inputs.hpp"

#include <sstream>
#include <stdexcept>

#include "qswitch/errors.hpp"

namespace qswitch {

void check_arity_match(int a, int b, const char* where) {
    if (a != b) {
        std::ostringstream msg;
        msg << where << ": arity mismatch (" << a << " vs " << b << ")";
        throw std::invalid_argument(msg.str());
    }
}

static void check_arity_range(int n, const char* where) {
    if (n < 1 || n > kMaxArity) {
        std::ostringstream msg;
        msg << where << ": arity must be in [1, " << kMaxArity << "], got " << n;
        if (n > kMaxArity) throw CapacityError(msg.str());
        throw std::invalid_argument(msg.str());
    }
}

BitVector::BitVector(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
    check_arity_range(n, "BitVector");
    if (n < 64 && (bits >> n) != 0) {
        throw std::invalid_argument("BitVector: bits set beyond component " +
                                    std::to_string(n));
    }
}

BitVector BitVector::operator^(const BitVector& other) const {
    check_arity_match(n, other.n, "BitVector::operator^");
    return BitVector(bits ^ other.bits, n);
}

std::string BitVector::to_string() const {
    return std::to_string(bits) + "/" + std::to_string(n);
}

BoolFn::BoolFn(int n) : n_(n) {
    check_arity_range(n, "BoolFn");
    words_.assign((table_size() + 63) / 64, 0);
}

BoolFn BoolFn::indicator(const BitVector& point) {
    if (point.is_zero()) {
        throw std::invalid_argument("BoolFn::indicator: point must be nonzero, "
                                    "f(0) = 0 is required");
    }
    BoolFn f(point.n);
    f.set(point.bits, true);
    return f;
}

BoolFn BoolFn::from_words(int n, std::vector<std::uint64_t> words) {
    BoolFn f(n);
    if (words.size() != f.words_.size()) {
        throw std::invalid_argument("BoolFn::from_words: wrong word count");
    }
    // Mask tail bits beyond the table.
    std::uint64_t size = f.table_size();
    if (size < 64) {
        words.back() &= (std::uint64_t(1) << size) - 1;
    }
    if (words[0] & 1u) {
        throw std::invalid_argument("BoolFn::from_words: table bit 0 must be 0 "
                                    "(f(0) = 0)");
    }
    f.words_ = std::move(words);
    return f;
}

bool BoolFn::operator()(const BitVector& z) const {
    check_arity_match(n_, z.n, "BoolFn::operator()");
    return value(z.bits);
}

void BoolFn::set(std::uint64_t z_index, bool v) {
    if (z_index >= table_size()) {
        throw std::out_of_range("BoolFn::set: index beyond table");
    }
    if (z_index == 0 && v) {
        throw std::invalid_argument("BoolFn::set: f(0) must stay 0");
    }
    std::uint64_t mask = std::uint64_t(1) << (z_index & 63);
    if (v) {
        words_[z_index >> 6] |= mask;
    } else {
        words_[z_index >> 6] &= ~mask;
    }
}

std::string BoolFn::to_hex() const {
    std::uint64_t digits = (table_size() + 3) / 4;
    std::string out(digits, '0');
    static const char* hex = "0123456789abcdef";
    for (std::uint64_t d = 0; d < digits; ++d) {
        unsigned nibble = (words_[d >> 4] >> ((d & 15) * 4)) & 0xf;
        out[digits - 1 - d] = hex[nibble];
    }
    return out;
}

BoolFn BoolFn::from_hex(int n, const std::string& hex) {
    BoolFn f(n);
    std::uint64_t digits = (f.table_size() + 3) / 4;
    if (hex.size() != digits) {
        throw std::invalid_argument("BoolFn::from_hex: expected " +
                                    std::to_string(digits) + " hex digits, got " +
                                    std::to_string(hex.size()));
    }
    for (std::uint64_t d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = unsigned(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = unsigned(c - 'a') + 10;
        } else {
            throw std::invalid_argument("BoolFn::from_hex: bad digit");
        }
        f.words_[d >> 4] |= std::uint64_t(nibble) << ((d & 15) * 4);
    }
    std::uint64_t size = f.table_size();
    if (size < 64) {
        std::uint64_t tail = f.words_.back() >> size;
        if (tail != 0) {
            throw std::invalid_argument("BoolFn::from_hex: bits beyond table");
        }
    }
    if (f.value(0)) {
        throw std::invalid_argument("BoolFn::from_hex: table bit 0 must be 0");
    }
    return f;
}

PlayerInput::PlayerInput(BitVector x_, BoolFn f_) : x(x_), f(std::move(f_)) {
    check_arity_match(x.n, f.arity(), "PlayerInput");
}

std::string PlayerInput::to_string() const {
    return "(x=" + x.to_string() + ", f=" + f.to_hex() + ")";
}

} // namespace qswitch
