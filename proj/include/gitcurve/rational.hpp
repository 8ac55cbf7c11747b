#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gitcurve {

using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);

// p/q in lowest terms, integers without denominator
std::string to_string(const Rational& q);

int sign(const Rational& q);

std::vector<long> parse_int_list(const std::string& csv);

}  // namespace gitcurve
