#include "pkm/core.hpp"

#include <atomic>

namespace pkm {

namespace {

std::atomic<std::size_t> g_bit_budget{1'048'576};

// y as a machine integer, rejecting anything the bit budget could never
// admit anyway.
std::size_t checked_exponent(const Nat& y) {
    if (y < 0) {
        throw std::invalid_argument("pkm: negative exponent");
    }
    if (y >= g_bit_budget.load(std::memory_order_relaxed)) {
        throw CapacityError("pkm: 2^y exceeds the configured bit budget");
    }
    return y.convert_to<std::size_t>();
}

} // namespace

std::size_t bit_budget() {
    return g_bit_budget.load(std::memory_order_relaxed);
}

void set_bit_budget(std::size_t bits) {
    if (bits == 0) {
        throw std::invalid_argument("pkm: bit budget must be positive");
    }
    g_bit_budget.store(bits, std::memory_order_relaxed);
}

Nat pair(const Nat& x, const Nat& y) {
    const std::size_t shift = checked_exponent(y);
    Nat odd = 2 * x + 1;
    return (odd << shift) - 1;
}

Coord unpair(const Nat& z) {
    Nat succ = z + 1; // > 0, so lsb() is defined
    const unsigned y = boost::multiprecision::lsb(succ);
    // succ = 2^y (2x + 1), so x = (succ >> y - 1) / 2 = succ >> (y + 1).
    return Coord{succ >> (y + 1), Nat(y)};
}

Nat mersenne(const Nat& y) {
    const std::size_t shift = checked_exponent(y);
    return (Nat(1) << shift) - 1;
}

std::optional<Nat> mersenne_index(const Nat& z) {
    Nat succ = z + 1;
    if ((succ & z) != 0) {
        return std::nullopt; // z + 1 not a power of two
    }
    return Nat(boost::multiprecision::lsb(succ));
}

Nat cantor_pair(const Nat& x, const Nat& y) {
    Nat s = x + y;
    if (2 * bit_length(s) + 2 > bit_budget()) {
        throw CapacityError("pkm: cantor_pair result exceeds the bit budget");
    }
    return s * (s + 1) / 2 + y;
}

std::size_t trailing_ones(const Nat& z) {
    Nat succ = z + 1;
    return boost::multiprecision::lsb(succ);
}

std::size_t bit_length(const Nat& z) {
    if (z == 0) {
        return 0;
    }
    return boost::multiprecision::msb(z) + 1;
}

namespace detail {

CoordU64 unpair_u64(std::uint64_t z) {
    // Caller guarantees z < 2^64 - 1 so that z + 1 does not wrap.
    const std::uint64_t succ = z + 1;
    const unsigned y = static_cast<unsigned>(__builtin_ctzll(succ));
    return CoordU64{succ >> (y + 1), y};
}

} // namespace detail

} // namespace pkm
