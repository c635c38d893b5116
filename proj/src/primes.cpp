#include "pkm/primes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>

namespace pkm {

namespace {

std::mutex g_cfg_mutex;
PrimeConfig g_cfg;

constexpr std::array<std::uint32_t, 25> k_small_primes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
    std::uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// One strong-pseudoprime round: n - 1 = d * 2^s with d odd.
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t base,
                               std::uint64_t d, unsigned s) {
    std::uint64_t x = powmod_u64(base, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bool strong_probable_prime(const Nat& n, const Nat& base, const Nat& d,
                           unsigned s) {
    Nat x = boost::multiprecision::powm(base, d, n);
    Nat n1 = n - 1;
    if (x == 1 || x == n1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n1) {
            return true;
        }
    }
    return false;
}

} // namespace

PrimeConfig prime_config() {
    std::lock_guard lock(g_cfg_mutex);
    return g_cfg;
}

void set_prime_config(const PrimeConfig& cfg) {
    if (cfg.rounds == 0) {
        throw std::invalid_argument("pkm: prp rounds must be positive");
    }
    std::lock_guard lock(g_cfg_mutex);
    g_cfg = cfg;
}

namespace detail {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint32_t p : k_small_primes) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's base set: deterministic for every n < 2^64.
    for (std::uint64_t base :
         {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
          1795265022ull}) {
        if (base % n == 0) {
            continue;
        }
        if (!strong_probable_prime_u64(n, base, d, s)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

Primality classify_prime(const Nat& z) {
    if (z < 2) {
        return Primality::composite;
    }
    for (std::uint32_t p : k_small_primes) {
        if (z % p == 0) {
            return z == p ? Primality::prime : Primality::composite;
        }
    }
    if (bit_length(z) <= 64) {
        return detail::is_prime_u64(z.convert_to<std::uint64_t>())
                   ? Primality::prime
                   : Primality::composite;
    }

    const PrimeConfig cfg = prime_config();
    Nat d = z - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::mt19937_64 rng(cfg.seed);
    boost::random::uniform_int_distribution<Nat> pick(2, z - 2);
    for (unsigned round = 0; round < cfg.rounds; ++round) {
        Nat base = pick(rng);
        if (!strong_probable_prime(z, base, d, s)) {
            return Primality::composite;
        }
    }
    return Primality::probably_prime;
}

bool is_prime(const Nat& z) {
    return classify_prime(z) != Primality::composite;
}

bool is_sophie_germain(const Nat& p) {
    return is_prime(p) && is_prime(2 * p + 1);
}

bool is_safe_prime(const Nat& q) {
    if (q < 5 || (q & 1) == 0) {
        return false;
    }
    return is_prime(q) && is_prime((q - 1) / 2);
}

ColumnClass column_class(const Nat& x) {
    if (x < 0) {
        throw std::invalid_argument("pkm: column index must be non-negative");
    }
    ColumnClass cls;
    cls.x = x;
    if (x % 3 == 1) {
        cls.zone = ColumnZone::allowed;
        cls.residue_pattern = "all entries = 2 (mod 3)";
    } else {
        cls.zone = ColumnZone::forbidden;
        const int start = (2 * x % 3).convert_to<int>();
        cls.residue_pattern = "entries alternate {0,1} (mod 3), starting at " +
                              std::to_string(start);
    }
    return cls;
}

std::vector<SGHit> scan_sg_column(const Nat& x, const Nat& max_y) {
    std::vector<SGHit> hits;
    for (Nat y = 0; y < max_y; ++y) {
        Nat p = pair(x, y);
        if (is_sophie_germain(p)) {
            hits.push_back(SGHit{p, 2 * p + 1, Coord{x, y}});
        }
    }
    return hits;
}

std::vector<SGHit> scan_sg_region(const Nat& limit) {
    std::vector<SGHit> hits;
    // The 0-column holds exactly one Sophie Germain prime: 3 = pair(0, 2).
    if (limit >= 3) {
        hits.push_back(SGHit{3, 7, Coord{0, 2}});
    }
    for (Nat x = 1; 2 * x <= limit; x += 3) {
        for (Nat y = 0;; ++y) {
            Nat p = pair(x, y);
            if (p > limit) {
                break;
            }
            if (is_sophie_germain(p)) {
                hits.push_back(SGHit{p, 2 * p + 1, Coord{x, y}});
            }
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const SGHit& a, const SGHit& b) { return a.p < b.p; });
    return hits;
}

} // namespace pkm
