#include "pkm/progressions.hpp"

#include <sstream>

namespace pkm {

std::vector<Nat> row_terms(const Nat& y, std::size_t count) {
    std::vector<Nat> terms;
    terms.reserve(count);
    if (count == 0) {
        return terms;
    }
    Nat term = mersenne(y);
    Nat step = Nat(1) << (y.convert_to<std::size_t>() + 1);
    for (std::size_t k = 0; k < count; ++k) {
        terms.push_back(term);
        term += step;
    }
    return terms;
}

std::vector<Nat> column_terms(const Nat& x, std::size_t count) {
    std::vector<Nat> terms;
    terms.reserve(count);
    if (count == 0) {
        return terms;
    }
    if (count > bit_budget()) {
        throw CapacityError("pkm: column height exceeds the bit budget");
    }
    Nat term = 2 * x; // pair(x, 0)
    for (std::size_t k = 0; k < count; ++k) {
        terms.push_back(term);
        term = 2 * term + 1;
    }
    return terms;
}

std::vector<Nat> expand_series(const RationalSeries& s, std::size_t count) {
    if (s.denominator.empty() || s.denominator.front() != 1) {
        throw std::invalid_argument(
            "pkm: series denominator must have constant term 1");
    }
    std::vector<Nat> coeffs;
    coeffs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Nat c = k < s.numerator.size() ? s.numerator[k] : Nat(0);
        const std::size_t jmax = std::min(k, s.denominator.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            c -= s.denominator[j] * coeffs[k - j];
        }
        coeffs.push_back(std::move(c));
    }
    return coeffs;
}

RationalSeries column_gf(const Nat& x) {
    return RationalSeries{{2 * x, -(2 * x - 1)}, {1, -3, 2}};
}

RationalSeries row_gf(const Nat& y) {
    Nat m = mersenne(y);
    return RationalSeries{{m, m + 2}, {1, -2, 1}};
}

namespace {

void append_polynomial(std::ostringstream& out, const std::vector<Nat>& poly) {
    bool first = true;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Nat& c = poly[k];
        if (c == 0 && poly.size() > 1) {
            // keep a lone constant 0, skip interior zero terms
            if (!(k == 0 && poly.size() == 1)) {
                continue;
            }
        }
        Nat mag = abs(c);
        if (first) {
            if (c < 0) {
                out << '-';
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) {
            out << mag;
        }
        if (k >= 1) {
            out << 't';
            if (k >= 2) {
                out << '^' << k;
            }
        }
    }
    if (first) {
        out << '0';
    }
}

} // namespace

std::string to_string(const RationalSeries& s) {
    std::ostringstream out;
    out << '(';
    append_polynomial(out, s.numerator);
    out << ")/(";
    append_polynomial(out, s.denominator);
    out << ')';
    return out.str();
}

} // namespace pkm
