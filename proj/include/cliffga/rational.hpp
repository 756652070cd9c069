#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cliffga {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "a/b" with b omitted when 1; matches the CLI wire format.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

}  // namespace cliffga
