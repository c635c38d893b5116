#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace pkm {

/// Unbounded non-negative integer. Matrix values, coordinates and Mersenne
/// numbers all outgrow 64 bits quickly, so everything public is a Nat.
using Nat = boost::multiprecision::cpp_int;

/// Lattice point (x, y) in the first quadrant: x = column, y = row.
struct Coord {
    Nat x;
    Nat y;

    bool operator==(const Coord&) const = default;
};

/// Raised when an operation would materialize a value beyond the configured
/// bit budget (predictable failure instead of a memory blowup).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Global cap on the bit width any single value may reach. Default 1 Mibit.
std::size_t bit_budget();
void set_bit_budget(std::size_t bits);

/// F(x, y) = 2^y (2x + 1) - 1. Even iff y = 0; equals M_y iff x = 0.
Nat pair(const Nat& x, const Nat& y);

/// Inverse of pair: y = trailing 1-bits of z, x = what remains after
/// stripping those 1s and one 0.
Coord unpair(const Nat& z);

/// M_y = 2^y - 1.
Nat mersenne(const Nat& y);

/// y such that z = 2^y - 1, or nullopt when z is not a Mersenne number.
std::optional<Nat> mersenne_index(const Nat& z);

/// Cantor's (x + y)(x + y + 1)/2 + y. Kept for comparison only: unlike
/// pair(), it does not separate parities.
Nat cantor_pair(const Nat& x, const Nat& y);

/// Length of the maximal run of 1-bits at the least-significant end.
std::size_t trailing_ones(const Nat& z);

/// Number of bits in z; bit_length(0) = 0.
std::size_t bit_length(const Nat& z);

namespace detail {

/// Fixed-width fast path used by the scanning code. Must stay bit-for-bit
/// consistent with the Nat route (differential-fuzzed in the tests).
struct CoordU64 {
    std::uint64_t x;
    unsigned y;
};

CoordU64 unpair_u64(std::uint64_t z);

} // namespace detail

} // namespace pkm
