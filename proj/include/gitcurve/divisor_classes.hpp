#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gitcurve/rational.hpp"

namespace gitcurve {

// lambda coefficient plus either a total delta coefficient or one per delta_i, i = 0..g/2
class DivisorClass {
public:
    int g = 0;
    Rational lambda;

    static DivisorClass total(int g, const Rational& lambda, const Rational& delta);
    static DivisorClass split(int g, const Rational& lambda, std::vector<Rational> delta);

    bool is_split() const { return split_; }
    const Rational& delta_total() const;
    const std::vector<Rational>& delta() const;
    Rational delta_i(int i) const;

    DivisorClass to_split() const;
    // error unless every delta_i coefficient agrees
    DivisorClass to_total() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Rational& c) const;
    bool operator==(const DivisorClass& o) const;

    std::string str() const;

private:
    bool split_ = false;
    Rational total_;
    std::vector<Rational> delta_;
    void check(const DivisorClass& o) const;
};

DivisorClass operator*(const Rational& c, const DivisorClass& d);
bool proportional(const DivisorClass& a, const DivisorClass& b);

long r_of(int n, int g);
DivisorClass lambda_class(int g);
DivisorClass delta_class(int g);
DivisorClass delta_i_class(int g, int i);
DivisorClass lambda_n(int n, int g);
DivisorClass viehweg_class(int n, int m, int g);
// leading coefficient of viehweg_class(n, m, g) in m
DivisorClass viehweg_asymptotic(int n, int g);

DivisorClass canonical_class(int g);
DivisorClass canonical_alpha_class(const Rational& alpha, int g);
Rational epsilon_of_m(int m);

DivisorClass moriwaki_class(int g);
struct MoriwakiDecomposition {
    int g = 0;
    // 1/g, 2-4/g (lambda), 2-4/g (delta_1), then delta_i for i = 2..g/2
    std::vector<Rational> coefficients;
    bool identity_holds = false;
    bool all_positive = false;
};
MoriwakiDecomposition moriwaki_decomposition(int g);

// K + alpha delta - (9 - 11 alpha) delta_1, the pullback of the pseudostable log canonical class
DivisorClass log_pullback(const Rational& alpha, int g);

nlohmann::json to_json(const DivisorClass& d);

}  // namespace gitcurve
