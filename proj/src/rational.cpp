#include "gitcurve/rational.hpp"

#include <sstream>

namespace gitcurve {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw Error("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

int sign(const Rational& q) { return sgn(q); }

std::vector<long> parse_int_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw Error("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw Error("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace gitcurve
