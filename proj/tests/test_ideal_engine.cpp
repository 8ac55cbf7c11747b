#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gitcurve/ideal_engine.hpp"

using namespace gitcurve;

namespace {

// value of a form on component p at (s, t), computed term by term
Rational evaluate_form(const std::vector<Monomial>& mons, const std::map<std::size_t, Rational>& form,
                       const ComponentParam& p, long s, long t, int n) {
    std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
    for (const auto& term : p.terms) {
        mpz_class v = 1;
        for (int i = 0; i < term.a; ++i) v *= s;
        for (int i = 0; i < term.b; ++i) v *= t;
        x[static_cast<std::size_t>(term.coordinate)] = term.coefficient * Rational(v);
    }
    Rational total = 0;
    for (const auto& [col, coef] : form) {
        Rational v = coef;
        const auto& m = mons[col];
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) v *= x[i];
        total += v;
    }
    return total;
}

std::vector<Configuration> full_configs() {
    return {build_closed_rosary_config(4), build_closed_rosary_config(5), build_closed_rosary_config(6),
            build_broken_bead_config(3), build_broken_bead_config(5)};
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("monomial text and order") {
    auto m = parse_monomial("x0^2*x3", 5);
    CHECK(monomial_string(m) == "x0^2*x3");
    CHECK(monomial_string(Monomial(3, 0)) == "1");
    CHECK_THROWS_AS(parse_monomial("x7", 5), Error);
    auto ord = make_order(OneParamSubgroup{{0, 0, 0}});
    // equal weight: x0 is the largest variable
    CHECK(ord.less(parse_monomial("x1^2", 3), parse_monomial("x0*x2", 3)));
    CHECK(ord.less(parse_monomial("x1*x2", 3), parse_monomial("x1^2", 3)));
    auto w = make_order(OneParamSubgroup{{0, 5, 1}});
    CHECK(w.less(parse_monomial("x0^2", 3), parse_monomial("x2^2", 3)));
    CHECK(monomials_of_degree(4, 3).size() == 20u);
}

TEST_CASE("kernel basis vanishes on the curve and its leading terms are the initial monomials") {
    std::mt19937 rng(5);
    for (const auto& c : full_configs()) {
        auto rho = canonical_1ps(c);
        auto ord = make_order(rho);
        for (int m = 2; m <= 3; ++m) {
            CAPTURE(family_name(c.family));
            CAPTURE(c.r);
            CAPTURE(m);
            auto slice = evaluate_slice(c, m, ord);
            auto basis = ideal_basis(c, m, ord);
            const int n = c.total_coordinates;
            CHECK(static_cast<long>(basis.size()) == binom(n + m - 1, m) - slice.rank);
            std::set<Monomial> leading;
            for (const auto& form : basis) {
                leading.insert(slice.monomials[form.rbegin()->first]);
                for (const auto& p : c.param.components)
                    for (int trial = 0; trial < 3; ++trial) {
                        long s = std::uniform_int_distribution<long>(-7, 7)(rng);
                        long t = std::uniform_int_distribution<long>(-7, 7)(rng);
                        CHECK(sign(evaluate_form(slice.monomials, form, p, s, t, n)) == 0);
                    }
            }
            auto init = initial_monomials(slice);
            CHECK(leading == std::set<Monomial>(init.begin(), init.end()));
        }
    }
}

TEST_CASE("index from the kernel route matches the engine") {
    for (const auto& c : full_configs()) {
        auto rho = canonical_1ps(c);
        for (int m = 2; m <= 3; ++m) {
            auto slice = evaluate_slice(c, m, make_order(rho));
            auto basis = ideal_basis(c, m, make_order(rho));
            std::set<std::size_t> lead;
            for (const auto& f : basis) lead.insert(f.rbegin()->first);
            long sum = 0, count = 0;
            for (std::size_t j = 0; j < slice.monomials.size(); ++j)
                if (!lead.count(j)) {
                    sum += make_order(rho).weight(slice.monomials[j]);
                    ++count;
                }
            long sumR = 0;
            for (long w : rho.weights) sumR += w;
            Rational mu = Rational(m * count * sumR, c.total_coordinates) - sum;
            mu.canonicalize();
            auto rep = hilbert_index(c, rho, m);
            CHECK(rep.mu == mu);
            CHECK(rep.weight_sum == sum);
            CHECK(rep.standard_count == count);
        }
    }
}

TEST_CASE("counts match the Hilbert polynomial") {
    for (int r : {4, 6}) {
        auto c = build_closed_rosary_config(r);
        auto rho = canonical_1ps(c);
        for (int m = 2; m <= 3; ++m) {
            auto rep = hilbert_index(c, rho, m);
            CHECK(rep.standard_count == hilbert_polynomial(r + 1, m));
            CHECK_FALSE(rep.count_deviates);
        }
    }
    for (int g = 5; g <= 8; ++g)
        for (int r = 1; r <= g - 3; ++r) {
            auto c = build_open_rosary_config(g, r);
            auto rep = hilbert_index(c, canonical_1ps(c), 2);
            CHECK(rep.standard_count == hilbert_polynomial(g, 2));
        }
}

TEST_CASE("open rosary block sums") {
    for (int r = 1; r <= 5; ++r) {
        auto c = build_open_rosary_config(r + 4, r);
        auto rho = canonical_1ps(c);
        auto r2 = hilbert_index(c, rho, 2), r3 = hilbert_index(c, rho, 3);
        bool even = r % 2 == 0;
        CHECK(r2.block_weight_sum == (even ? 28 * r + 4 : 28 * r - 9));
        CHECK(r3.block_weight_sum == (even ? 66 * r + 6 : 66 * r - 25));
    }
}

TEST_CASE("interpolation and chow sign") {
    CHECK(extrapolate_index(-1, -2, 4) == -3);
    CHECK(extrapolate_index(0, 0, 9) == 0);
    for (int m = 2; m <= 8; ++m) CHECK(extrapolate_index(-1, -2, m) == 1 - m);
    CHECK(chow_index_sign(-1, -2) == 0);
    CHECK(chow_index_sign(1, 3) == 1);
    CHECK(chow_index_sign(1, 1) == -1);
    for (const auto& c : full_configs()) {
        auto rho = canonical_1ps(c);
        if (c.family == Family::ClosedRosary && c.r % 2 == 1) continue;
        auto rs = index_series(c, rho, {2, 3, 4});
        CHECK(rs[2].mu == extrapolate_index(rs[0].mu, rs[1].mu, 4));
        REQUIRE(rs[0].chow_sign.has_value());
    }
}

TEST_CASE("point index and input errors") {
    OneParamSubgroup rho{{3, 1, 0, 2}};
    CHECK(point_index({0, 3}, rho) == point_index({3, 0}, rho));
    auto c = build_closed_rosary_config(4);
    CHECK_THROWS_AS(hilbert_index(c, OneParamSubgroup{{1, 2, 3}}, 2), Error);
    CHECK_THROWS_AS(hilbert_index(c, canonical_1ps(c), 1), Error);
    CHECK_THROWS_AS(evaluate_slice(c, 7, make_order(canonical_1ps(c)), 5), Error);
}
