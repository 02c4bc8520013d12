#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return double(r.numerator()) / double(r.denominator());
}

// Parses "3", "-0.25", "1/3". Decimal digits are capped so the int64
// numerator cannot overflow.
Rational parse_rational(const std::string& s);

// Rational interval, possibly unbounded: empty optional = -inf / +inf.
struct RationalInterval {
    std::optional<Rational> lo;  // nullopt = -inf
    std::optional<Rational> hi;  // nullopt = +inf

    RationalInterval() = default;
    RationalInterval(std::optional<Rational> l, std::optional<Rational> h) : lo(l), hi(h) {
        if (lo && hi && !(*lo < *hi)) throw InputError("interval endpoints must satisfy lo < hi");
    }
    static RationalInterval whole() { return {}; }

    bool bounded_below() const { return lo.has_value(); }
    bool bounded_above() const { return hi.has_value(); }

    // Containment of iv in *this (as subsets of the line).
    bool contains(const RationalInterval& iv) const {
        if (lo && (!iv.lo || *iv.lo < *lo)) return false;
        if (hi && (!iv.hi || *hi < *iv.hi)) return false;
        return true;
    }

    std::string str() const;
};

// Parses "r,s" with "-inf"/"inf" allowed for the endpoints.
RationalInterval parse_interval(const std::string& s);

}  // namespace bohr
