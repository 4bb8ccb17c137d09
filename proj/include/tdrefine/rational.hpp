#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "tdrefine/errors.hpp"

namespace tdr {

// Exact arithmetic everywhere a threshold comparison decides correctness.
using Rat = boost::rational<long long>;

// Smallest integer >= r.
inline long long ceil_rat(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline long long floor_rat(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

// Accepts "3", "-2", or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw UserError("zero denominator in rational: " + s);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw UserError("cannot parse rational: " + s);
    } catch (const std::out_of_range&) {
        throw UserError("rational out of range: " + s);
    }
}

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace tdr
