#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "planecol/error.hpp"

namespace planecol {

// Exact rational charge. cpp_rational keeps values normalized (lowest terms,
// denominator > 0) and grows without overflow, so ledger sums stay exact no
// matter how many transfers accumulate.
using Charge = boost::multiprecision::cpp_rational;

// Accepts "n", "-n", "n/d" and "-n/d" with optional surrounding whitespace.
inline Charge parse_charge(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty charge literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Charge(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator: " + text);
        return Charge(num, den);
    } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedInput, "bad charge literal: " + text);
    }
}

// Lowest-terms textual form: "q" for integers, "p/q" otherwise.
inline std::string charge_str(const Charge& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

} // namespace planecol
