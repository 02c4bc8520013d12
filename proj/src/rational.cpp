#include "bohr/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace bohr {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string t = s;
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        long long num = 0, den = 0;
        try {
            num = std::stoll(t.substr(0, slash));
            den = std::stoll(t.substr(slash + 1));
        } catch (...) {
            throw InputError("bad rational literal: " + s);
        }
        if (den == 0) throw InputError("zero denominator in: " + s);
        return Rational(num, den);
    }
    bool neg = false;
    size_t i = 0;
    if (t[i] == '+' || t[i] == '-') {
        neg = t[i] == '-';
        ++i;
    }
    std::string intpart, fracpart;
    for (; i < t.size() && std::isdigit((unsigned char)t[i]); ++i) intpart += t[i];
    if (i < t.size() && t[i] == '.') {
        ++i;
        for (; i < t.size() && std::isdigit((unsigned char)t[i]); ++i) fracpart += t[i];
    }
    if (i != t.size() || (intpart.empty() && fracpart.empty()))
        throw InputError("bad rational literal: " + s);
    if (fracpart.size() > 15) throw InputError("too many decimal digits in: " + s);
    long long den = 1;
    for (size_t k = 0; k < fracpart.size(); ++k) den *= 10;
    long long num = 0;
    try {
        num = std::stoll(intpart.empty() ? "0" : intpart) * den +
              (fracpart.empty() ? 0 : std::stoll(fracpart));
    } catch (...) {
        throw InputError("rational literal out of range: " + s);
    }
    if (neg) num = -num;
    return Rational(num, den);
}

std::string RationalInterval::str() const {
    std::ostringstream os;
    os << "(";
    if (lo)
        os << lo->numerator() << (lo->denominator() == 1 ? "" : "/" + std::to_string(lo->denominator()));
    else
        os << "-inf";
    os << ",";
    if (hi)
        os << hi->numerator() << (hi->denominator() == 1 ? "" : "/" + std::to_string(hi->denominator()));
    else
        os << "inf";
    os << ")";
    return os.str();
}

RationalInterval parse_interval(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("interval must be written as r,s");
    std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    auto strip = [](std::string& x) {
        while (!x.empty() && std::isspace((unsigned char)x.front())) x.erase(x.begin());
        while (!x.empty() && std::isspace((unsigned char)x.back())) x.pop_back();
    };
    strip(a);
    strip(b);
    std::optional<Rational> lo, hi;
    if (a != "-inf") lo = parse_rational(a);
    if (b != "inf" && b != "+inf") hi = parse_rational(b);
    return RationalInterval(lo, hi);
}

}  // namespace bohr
