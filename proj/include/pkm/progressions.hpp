#pragma once

#include "pkm/core.hpp"

#include <string>
#include <vector>

namespace pkm {

/// Rational generating function, both polynomials in ascending degree.
/// The denominator's constant term is 1, so the power-series expansion has
/// integer coefficients computable exactly.
struct RationalSeries {
    std::vector<Nat> numerator;
    std::vector<Nat> denominator;

    bool operator==(const RationalSeries&) const = default;
};

/// [pair(0, y), ..., pair(count - 1, y)]: the arithmetic progression
/// M_y + k * 2^(y+1).
std::vector<Nat> row_terms(const Nat& y, std::size_t count);

/// [pair(x, 0), ..., pair(x, count - 1)]: each term is twice the previous
/// plus one (the arithmetic-geometric "Mersenne tree" of column x).
std::vector<Nat> column_terms(const Nat& x, std::size_t count);

/// First `count` coefficients of numerator/denominator, exactly, via the
/// linear recurrence c_k = num_k - sum_{j>=1} den_j * c_{k-j}.
std::vector<Nat> expand_series(const RationalSeries& s, std::size_t count);

/// (2x - (2x-1)t) / ((1-t)(1-2t)); expansion is column_terms(x, .).
RationalSeries column_gf(const Nat& x);

/// (M_y + (M_y+2)t) / (1-t)^2; expansion is row_terms(y, .).
RationalSeries row_gf(const Nat& y);

/// Canonical display form, e.g. "(2 - t)/(1 - 3t + 2t^2)".
std::string to_string(const RationalSeries& s);

} // namespace pkm
