#pragma once

#include "pkm/core.hpp"

#include <string>
#include <vector>

namespace pkm {

/// Verdict of classify_prime. Results are exact below 2^64; above that the
/// positive answer is only "probable" (strong-pseudoprime rounds).
enum class Primality { composite, prime, probably_prime };

/// Knobs for the probabilistic path. The seed makes probable-prime answers
/// reproducible run to run.
struct PrimeConfig {
    unsigned rounds = 64;
    std::uint64_t seed = 1;
};

PrimeConfig prime_config();
void set_prime_config(const PrimeConfig& cfg);

Primality classify_prime(const Nat& z);

/// classify_prime(z) != composite.
bool is_prime(const Nat& z);

/// p prime and 2p + 1 prime.
bool is_sophie_germain(const Nat& p);

/// q prime, q >= 5 odd, (q - 1)/2 prime.
bool is_safe_prime(const Nat& q);

enum class ColumnZone { allowed, forbidden };

/// Mod-3 classification of a matrix column. Sophie Germain primes can only
/// live in columns whose entries are all = 2 (mod 3), i.e. x = 1 (mod 3).
struct ColumnClass {
    Nat x;
    ColumnZone zone = ColumnZone::forbidden;
    std::string residue_pattern;
};

ColumnClass column_class(const Nat& x);

/// A Sophie Germain prime p = F(x, y) together with its safe prime
/// q = 2p + 1 = F(x, y + 1).
struct SGHit {
    Nat p;
    Nat q;
    Coord coord;

    bool operator==(const SGHit&) const = default;
};

/// All Sophie Germain p = pair(x, y) with y < max_y.
std::vector<SGHit> scan_sg_column(const Nat& x, const Nat& max_y);

/// All Sophie Germain primes <= limit, ascending, found by walking only the
/// allowed columns (x = 1 mod 3) plus the lone 0-column exception p = 3.
std::vector<SGHit> scan_sg_region(const Nat& limit);

namespace detail {

/// Deterministic Miller-Rabin, exact for the full uint64 range.
bool is_prime_u64(std::uint64_t n);

} // namespace detail

} // namespace pkm
