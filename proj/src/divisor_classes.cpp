#include "gitcurve/divisor_classes.hpp"

#include <algorithm>

namespace gitcurve {

namespace {

void check_genus(int g) {
    if (g < 2) throw Error("genus must be at least 2");
}

std::string term(const Rational& c, const std::string& name, bool first) {
    if (sign(c) == 0) return {};
    std::string s;
    Rational a = abs(c);
    if (!first) s += sign(c) < 0 ? " - " : " + ";
    else if (sign(c) < 0) s += "-";
    if (a != 1) s += to_string(a) + "*";
    return s + name;
}

}  // namespace

DivisorClass DivisorClass::total(int g, const Rational& lambda, const Rational& delta) {
    check_genus(g);
    DivisorClass d;
    d.g = g;
    d.lambda = lambda;
    d.total_ = delta;
    return d;
}

DivisorClass DivisorClass::split(int g, const Rational& lambda, std::vector<Rational> delta) {
    check_genus(g);
    if (static_cast<int>(delta.size()) != g / 2 + 1)
        throw Error("expected " + std::to_string(g / 2 + 1) + " boundary coefficients");
    DivisorClass d;
    d.g = g;
    d.lambda = lambda;
    d.split_ = true;
    d.delta_ = std::move(delta);
    return d;
}

const Rational& DivisorClass::delta_total() const {
    if (split_) throw Error("class is in split boundary form");
    return total_;
}

const std::vector<Rational>& DivisorClass::delta() const {
    if (!split_) throw Error("class is in total boundary form");
    return delta_;
}

Rational DivisorClass::delta_i(int i) const {
    if (i < 0 || i > g / 2) throw Error("boundary index out of range");
    return split_ ? delta_[static_cast<std::size_t>(i)] : total_;
}

DivisorClass DivisorClass::to_split() const {
    if (split_) return *this;
    return split(g, lambda, std::vector<Rational>(static_cast<std::size_t>(g / 2 + 1), total_));
}

DivisorClass DivisorClass::to_total() const {
    if (!split_) return *this;
    for (const auto& c : delta_)
        if (c != delta_.front()) throw Error("boundary coefficients differ; no total form");
    return total(g, lambda, delta_.front());
}

void DivisorClass::check(const DivisorClass& o) const {
    if (g != o.g) throw Error("genus mismatch");
    if (split_ != o.split_) throw Error("cannot mix total and split boundary forms");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check(o);
    DivisorClass d = *this;
    d.lambda += o.lambda;
    d.total_ += o.total_;
    for (std::size_t i = 0; i < d.delta_.size(); ++i) d.delta_[i] += o.delta_[i];
    return d;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * Rational(-1); }

DivisorClass DivisorClass::operator*(const Rational& c) const {
    DivisorClass d = *this;
    d.lambda *= c;
    d.total_ *= c;
    for (auto& x : d.delta_) x *= c;
    return d;
}

DivisorClass operator*(const Rational& c, const DivisorClass& d) { return d * c; }

bool DivisorClass::operator==(const DivisorClass& o) const {
    check(o);
    return lambda == o.lambda && total_ == o.total_ && delta_ == o.delta_;
}

std::string DivisorClass::str() const {
    std::string s = term(lambda, "lambda", true);
    auto add = [&](const Rational& c, const std::string& name) { s += term(c, name, s.empty()); };
    if (!split_) add(total_, "delta");
    else
        for (std::size_t i = 0; i < delta_.size(); ++i) add(delta_[i], "delta_" + std::to_string(i));
    return s.empty() ? "0" : s;
}

bool proportional(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass x = a.to_split(), y = b.to_split();
    if (x.g != y.g) throw Error("genus mismatch");
    std::vector<Rational> u{x.lambda}, v{y.lambda};
    u.insert(u.end(), x.delta().begin(), x.delta().end());
    v.insert(v.end(), y.delta().begin(), y.delta().end());
    bool uz = std::all_of(u.begin(), u.end(), [](const Rational& q) { return sign(q) == 0; });
    bool vz = std::all_of(v.begin(), v.end(), [](const Rational& q) { return sign(q) == 0; });
    if (uz || vz) return uz && vz;
    std::size_t k = 0;
    while (sign(v[k]) == 0) ++k;
    Rational c = u[k] / v[k];
    if (sign(c) == 0) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != c * v[i]) return false;
    return true;
}

long r_of(int n, int g) {
    if (n < 1) throw Error("n must be positive");
    check_genus(g);
    return n == 1 ? g : (2L * n - 1) * (g - 1);
}

DivisorClass lambda_class(int g) { return DivisorClass::total(g, 1, 0); }
DivisorClass delta_class(int g) { return DivisorClass::total(g, 0, 1); }

DivisorClass delta_i_class(int g, int i) {
    std::vector<Rational> d(static_cast<std::size_t>(g / 2 + 1), Rational(0));
    if (i < 0 || i > g / 2) throw Error("boundary index out of range");
    d[static_cast<std::size_t>(i)] = 1;
    return DivisorClass::split(g, 0, d);
}

DivisorClass lambda_n(int n, int g) {
    if (n < 1) throw Error("n must be positive");
    if (n == 1) return lambda_class(g);
    long nn = n;
    return DivisorClass::total(g, Rational(6 * nn * nn - 6 * nn + 1), Rational(-(nn * (nn - 1) / 2)));
}

DivisorClass viehweg_class(int n, int m, int g) {
    if (n < 1 || m < 2) throw Error("need n >= 1 and m >= 2");
    return lambda_n(m * n, g) * Rational(r_of(n, g)) - lambda_n(n, g) * Rational(r_of(m * n, g) * m);
}

DivisorClass viehweg_asymptotic(int n, int g) {
    // quadratic in m for m >= 2
    auto second = viehweg_class(n, 4, g) - viehweg_class(n, 3, g) * Rational(2) + viehweg_class(n, 2, g);
    return second * Rational(1, 2);
}

DivisorClass canonical_class(int g) { return DivisorClass::total(g, 13, -2); }

DivisorClass canonical_alpha_class(const Rational& alpha, int g) { return canonical_class(g) + delta_class(g) * alpha; }

Rational epsilon_of_m(int m) {
    if (m < 1) throw Error("m must be positive");
    Rational e(39, 200L * m - 30);
    e.canonicalize();
    return e;
}

DivisorClass moriwaki_class(int g) {
    std::vector<Rational> d(static_cast<std::size_t>(g / 2 + 1));
    d[0] = -g;
    for (int i = 1; i <= g / 2; ++i) d[static_cast<std::size_t>(i)] = -4L * i * (g - i);
    return DivisorClass::split(g, 8L * g + 4, d);
}

MoriwakiDecomposition moriwaki_decomposition(int g) {
    if (g < 3) throw Error("genus must be at least 3");
    MoriwakiDecomposition out;
    out.g = g;
    Rational inv(1, g);
    Rational four(4, g);
    four.canonicalize();
    Rational c = 2 - four;
    out.coefficients = {inv, c, c};
    for (int i = 2; i <= g / 2; ++i) {
        Rational q(4L * i * (g - i), g);
        q.canonicalize();
        out.coefficients.push_back(q - 1);
    }
    DivisorClass rhs = moriwaki_class(g) * inv + lambda_class(g).to_split() * c + delta_i_class(g, 1) * c;
    for (int i = 2; i <= g / 2; ++i) rhs = rhs + delta_i_class(g, i) * out.coefficients[static_cast<std::size_t>(i + 1)];
    DivisorClass lhs = (lambda_class(g) * Rational(10) - delta_class(g)).to_split() - delta_i_class(g, 1);
    out.identity_holds = lhs == rhs;
    out.all_positive = std::all_of(out.coefficients.begin(), out.coefficients.end(), [](const Rational& q) { return sign(q) > 0; });
    return out;
}

DivisorClass log_pullback(const Rational& alpha, int g) {
    return canonical_alpha_class(alpha, g).to_split() - delta_i_class(g, 1) * (9 - 11 * alpha);
}

nlohmann::json to_json(const DivisorClass& d) {
    nlohmann::json j{{"g", d.g}, {"lambda", to_string(d.lambda)}, {"text", d.str()}};
    if (d.is_split()) {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& q : d.delta()) v.push_back(to_string(q));
        j["delta_i"] = v;
    } else {
        j["delta"] = to_string(d.delta_total());
    }
    return j;
}

}  // namespace gitcurve
