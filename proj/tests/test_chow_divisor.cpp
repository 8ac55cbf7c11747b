#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gitcurve/chow_multiplicity.hpp"
#include "gitcurve/divisor_classes.hpp"

using namespace gitcurve;

namespace {

BranchData branch(std::vector<std::optional<long>> o) { return {"p", std::move(o)}; }

}  // namespace

TEST_CASE("branch bounds") {
    OneParamSubgroup rho{{5, 3, 1, 0, 0}};
    CHECK(branch_multiplicity_bound(branch({0, 2, 4, 5, 5}), rho) == 25);
    CHECK(branch_multiplicity_bound(branch({0, 1, 2, 3}), OneParamSubgroup{{3, 2, 1, 0}}) == 9);
    CHECK(branch_multiplicity_bound(branch({0, 1, 2}), OneParamSubgroup{{0, 0, 0}}) == 0);
    CHECK_THROWS_AS(branch_multiplicity_bound(branch({0, 1}), OneParamSubgroup{{0, 0, 0}}), Error);
    CHECK_THROWS_AS(branch_multiplicity_bound(branch({1, 1}), OneParamSubgroup{{0, 0}}), Error);
    CHECK(degenerate_multiplicity(1, 2, 4 * 5 - 10) == 40);
    CHECK(degenerate_multiplicity(1, 3, 4) == 24);
    CHECK(degenerate_multiplicity(1, 0, 4) == 0);
    CHECK_THROWS_AS(degenerate_multiplicity(1, -1, 4), Error);
    CHECK(chow_threshold(1, 3 * 5 - 4, 16, 9) == 24);
    CHECK(chow_threshold(1, 8, 4, 6) == Rational(16, 3));
    CHECK(chow_threshold(1, 5, 4, 0) == 0);
}

TEST_CASE("bounds are monotone and permutation invariant") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> d(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6;
        std::vector<std::optional<long>> o;
        std::vector<long> w;
        for (int i = 0; i < n; ++i) {
            o.push_back(i == 0 ? 0 : (d(rng) == 6 ? std::optional<long>() : d(rng)));
            w.push_back(d(rng));
        }
        auto base = branch_multiplicity_bound(branch(o), OneParamSubgroup{w});
        auto o2 = o;
        int k = 1 + static_cast<int>(rng() % 5);
        if (o2[static_cast<std::size_t>(k)]) *o2[static_cast<std::size_t>(k)] += 1;
        auto w2 = w;
        w2[rng() % 6] += 1;
        CHECK(branch_multiplicity_bound(branch(o2), OneParamSubgroup{w}) >= base);
        CHECK(branch_multiplicity_bound(branch(o), OneParamSubgroup{w2}) >= base);
        std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::optional<long>> po;
        std::vector<long> pw;
        for (auto i : perm) {
            po.push_back(o[i]);
            pw.push_back(w[i]);
        }
        CHECK(branch_multiplicity_bound(branch(po), OneParamSubgroup{pw}) == base);
    }
}

TEST_CASE("instability certificates") {
    auto a = certify_unstable(ChowCase::NonOrdinaryCusp);
    CHECK(a.lower_bound == 25);
    CHECK(a.threshold == 24);
    CHECK(certify_unstable(ChowCase::HigherTacnode).lower_bound == 18);
    CHECK(certify_unstable(ChowCase::MultipleComponent).threshold == 16);
    for (int g = 4; g <= 20; ++g) {
        auto c = certify_unstable(ChowCase::GenusOneTacnodeTail, g);
        CHECK(c.lower_bound == 36 + 16 * g - 40);
        CHECK(c.threshold == Rational(48 * g - 40, 3));
        CHECK(c.verdict == Verdict::Unstable);
        for (auto k : {ChowCase::NonOrdinaryCusp, ChowCase::HigherTacnode, ChowCase::MultipleComponent})
            CHECK(certify_unstable(k, g).verdict == Verdict::Unstable);
    }
    CHECK(certify_unstable(ChowCase::GenusOneTacnodeTail, 5).threshold == Rational(200, 3));
    CHECK_THROWS_AS(certify_unstable(ChowCase::HigherTacnode, 3), Error);
    CHECK_THROWS_AS(parse_chow_case("flat"), Error);
}

TEST_CASE("r and Hodge classes") {
    CHECK(r_of(1, 7) == 7);
    CHECK(r_of(2, 7) == 18);
    CHECK(r_of(5, 4) == 27);
    CHECK(lambda_n(2, 10) == DivisorClass::total(10, 13, -1));
    CHECK(lambda_n(3, 10) == DivisorClass::total(10, 37, -3));
    CHECK(lambda_n(1, 10) == lambda_class(10));
}

TEST_CASE("polarization rows expanded by hand") {
    // (m-1)(g-1)((6mn^2 - 2mn - 2n + 1) lambda - (m n^2 / 2) delta) for n >= 2
    for (int g = 3; g <= 12; ++g)
        for (int n = 2; n <= 4; ++n)
            for (int m = 2; m <= 12; ++m) {
                Rational f((m - 1L) * (g - 1L));
                Rational lam = f * (6L * m * n * n - 2L * m * n - 2L * n + 1);
                Rational del(-(long)m * n * n, 2);
                del.canonicalize();
                CHECK(viehweg_class(n, m, g) == DivisorClass::total(g, lam, f * del));
            }
    for (int g = 3; g <= 20; ++g)
        for (int m = 2; m <= 50; ++m) {
            Rational f((m - 1L) * (g - 1L));
            CHECK(viehweg_class(2, m, g) == DivisorClass::total(g, f * (20L * m - 3), f * (-2L * m)));
        }
    CHECK(proportional(viehweg_asymptotic(2, 9), DivisorClass::total(9, 10, -1)));
    CHECK(proportional(viehweg_asymptotic(1, 9), DivisorClass::total(9, 38, Rational(-9, 2))));
    CHECK(proportional(viehweg_class(2, 5, 9), DivisorClass::total(9, 10 - Rational(3, 10), -1)));
}

TEST_CASE("slopes, canonical class and epsilon") {
    CHECK(epsilon_of_m(10) == Rational(39, 1970));
    CHECK(epsilon_of_m(1) == Rational(39, 170));
    for (int m = 1; m < 60; ++m) {
        CHECK(epsilon_of_m(m) > epsilon_of_m(m + 1));
        CHECK(epsilon_of_m(m) > 0);
    }
    CHECK(proportional(canonical_alpha_class(Rational(7, 10), 8), DivisorClass::total(8, 10, -1)));
    CHECK_FALSE(proportional(canonical_alpha_class(Rational(1, 2), 8), DivisorClass::total(8, 10, -1)));
    CHECK(canonical_class(6) == DivisorClass::total(6, 13, -2));
}

TEST_CASE("Moriwaki decomposition") {
    for (int g = 3; g <= 30; ++g) {
        auto d = moriwaki_decomposition(g);
        CHECK(d.identity_holds);
        if (g >= 4) CHECK(d.all_positive);
        CHECK(d.coefficients.size() == static_cast<std::size_t>(3 + g / 2 - 1));
    }
    CHECK(moriwaki_decomposition(4).coefficients[3] == 3);
    CHECK_THROWS_AS(moriwaki_decomposition(2), Error);
}

TEST_CASE("class arithmetic") {
    auto a = DivisorClass::total(7, 3, -1), b = DivisorClass::total(7, Rational(1, 2), 4);
    CHECK((a + b) * 2 == a * 2 + b * 2);
    CHECK(a - a == DivisorClass::total(7, 0, 0));
    CHECK_THROWS_AS(a + delta_i_class(7, 1), Error);
    CHECK(a.to_split().to_total() == a);
    CHECK_THROWS_AS(delta_i_class(7, 1).to_total(), Error);
    CHECK(proportional(a, a * Rational(-5, 3)));
    CHECK_FALSE(proportional(a, b));
    CHECK(proportional(log_pullback(Rational(7, 10), 9),
                       (lambda_class(9) * 10 - delta_class(9)).to_split() - delta_i_class(9, 1)));
    CHECK(DivisorClass::total(5, 13, -2).str() == "13*lambda - 2*delta");
}
