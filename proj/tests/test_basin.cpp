#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gitcurve/basin.hpp"
#include "gitcurve/paper_check.hpp"
#include "gitcurve/stability.hpp"
#include "support.hpp"

using namespace gitcurve;

namespace {

std::vector<Rational> tac(long s) { return {Rational(4 * s), Rational(3 * s), Rational(2 * s)}; }

// C_0 - B_1 - C_1 - ... with each B_i a run of elliptic components; adjacent runs share a node
CurveGraph bridge_fixture(std::mt19937& rng, int bridges) {
    CurveGraph g;
    int prev = g.add_component(2, 0, "C");
    for (int i = 0; i < bridges; ++i) {
        int e = g.add_component(1, 0, "E");
        g.node(prev, e);
        prev = e;
        if (i + 1 < bridges && rng() % 2) continue;
        int c = g.add_component(2, 0, "C");
        g.node(prev, c);
        prev = c;
    }
    if (g.components.back().geometric_genus == 1) {
        int c = g.add_component(2, 0, "C");
        g.node(prev, c);
    }
    return g;
}

}  // namespace

TEST_CASE("open rosary versal weights alternate") {
    for (int g = 5; g <= 9; ++g)
        for (int r = 1; r <= g - 3; ++r) {
            auto c = build_open_rosary_config(g, r);
            auto rep = basin_membership(c, canonical_1ps(c));
            REQUIRE(static_cast<int>(rep.entries.size()) == r + 2);
            CHECK(rep.entries[0].versal.parameter_weights == std::vector<Rational>{-1});
            for (int i = 1; i <= r; ++i) CHECK(rep.entries[static_cast<std::size_t>(i)].versal.parameter_weights == tac(i % 2 ? 1 : -1));
            CHECK(rep.entries.back().versal.parameter_weights == std::vector<Rational>{r % 2 ? -1 : 1});
        }
}

TEST_CASE("closed rosary basin is a closed weak chain") {
    auto c = build_closed_rosary_config(6);
    auto rep = basin_membership(c, canonical_1ps(c));
    int smooth = 0;
    for (const auto& e : rep.entries) smooth += e.fate == Fate::Smoothable;
    CHECK(smooth == 3);
    CHECK(arithmetic_genus(rep.generic) == 7);
    CHECK(rep.partial.size() == 8u);
    auto w = find_weak_elliptic_chains(rep.generic);
    CHECK(std::any_of(w.begin(), w.end(), [](const ChainRecord& x) { return x.closed && x.length == 3; }));
}

TEST_CASE("broken bead node weight") {
    for (int r = 3; r <= 7; r += 2) {
        auto c = build_broken_bead_config(r);
        auto rep = basin_membership(c, canonical_1ps(c));
        CHECK(rep.entries[0].versal.parameter_weights == std::vector<Rational>{-2});
        CHECK(rep.entries[0].fate == Fate::Frozen);
    }
}

TEST_CASE("tacnodal tail versal weights include the cusp") {
    auto c = build_tacnodal_tail_config(6);
    auto rho = canonical_1ps(c);
    auto s = singularities(c);
    REQUIRE(s.size() == 3u);
    auto cusp = versal_weights(c, rho, s.back());
    CHECK(cusp.parameter_weights.size() == 2u);
    CHECK(cusp.parameter_weights[1] * 2 == cusp.parameter_weights[0] * 3);
}

TEST_CASE("trivial and incompatible actions are errors") {
    auto c = build_closed_rosary_config(4);
    OneParamSubgroup flat{std::vector<long>(12, 3)};
    CHECK_THROWS_AS(basin_membership(c, flat), Error);
    auto g = paper_fixtures().at("bridge_rep");
    auto gens = torus_generators(g);
    REQUIRE(gens.size() == 1u);
    CHECK_THROWS_AS(basin_membership(g, gens, {1, 1, 1}), Error);
    auto rep = basin_membership(g, gens, {-1});
    CHECK(rep.entries.size() == 3u);
    auto plus = basin_membership(g, gens, {1});
    CHECK(isomorphic(plus.generic, paper_fixtures().at("tacnodal_bridge")) == false);
}

TEST_CASE("smoothing preserves arithmetic genus") {
    std::mt19937 rng(77);
    for (const auto& g : testsupport::corpus(31, 300, 10)) {
        std::vector<std::size_t> xs;
        for (std::size_t i = 0; i < g.intersections.size(); ++i)
            if (rng() % 2) xs.push_back(i);
        std::vector<int> cusps;
        for (const auto& c : g.components)
            if (c.cusp_count && rng() % 2) cusps.push_back(c.id);
        auto h = smooth(g, xs, cusps);
        CHECK(arithmetic_genus(h) == arithmetic_genus(g));
        CHECK(h.intersections.size() == g.intersections.size() - xs.size());
        CHECK_NOTHROW(h.validate());
    }
}

TEST_CASE("pseudo-stabilization removes tacnodes and keeps genus") {
    for (const auto& g : testsupport::corpus(13, 200, 8)) {
        auto h = pseudo_stabilize(g);
        CHECK_FALSE(has_tacnodes(h));
        CHECK(arithmetic_genus(h) == arithmetic_genus(g));
    }
}

TEST_CASE("closed-orbit representatives on fixtures") {
    auto fx = paper_fixtures();
    for (const char* name : {"bridge", "bridge2", "bridge_rep", "tacnodal_bridge"}) {
        CAPTURE(name);
        auto rep = c_closed_orbit_rep(fx.at(name));
        CHECK(is_c_closed_orbit(rep));
        CHECK(isomorphic(c_closed_orbit_rep(rep), rep));
        CHECK(arithmetic_genus(rep) == arithmetic_genus(fx.at(name)));
    }
    for (const char* name : {"h_minorbit_ex1", "h_minorbit_ex2", "closed_weak_chain3", "closed_rosary_r4"}) {
        CAPTURE(name);
        auto rep = h_closed_orbit_rep(fx.at(name));
        CHECK(is_h_closed_orbit(rep));
        CHECK(isomorphic(h_closed_orbit_rep(rep), rep));
        CHECK(arithmetic_genus(rep) == arithmetic_genus(fx.at(name)));
    }
    auto cw = h_closed_orbit_rep(fx.at("closed_weak_chain3"));
    CHECK(isomorphic(cw, build_closed_rosary_config(6).graph));
    CHECK_THROWS_AS(c_closed_orbit_rep(fx.at("smooth")), Error);
    CHECK_THROWS_AS(h_closed_orbit_rep(fx.at("smooth")), Error);
    CHECK_THROWS_AS(c_closed_orbit_rep(fx.at("elliptic_tail")), Error);
    CHECK_FALSE(is_c_closed_orbit(fx.at("bridge")));
    CHECK(is_c_closed_orbit(fx.at("bridge_rep")));
    CHECK_FALSE(is_h_closed_orbit(fx.at("h_minorbit_ex1")));
    CHECK(is_h_closed_orbit(fx.at("closed_rosary_r4")));
}

TEST_CASE("replacement enumeration counts") {
    auto fx = paper_fixtures();
    CHECK(enumerate_c_replacements(fx.at("bridge")).size() == 2u);
    CHECK(enumerate_c_replacements(fx.at("bridge2")).size() == 4u);
    CHECK_THROWS_AS(enumerate_c_replacements(fx.at("bridge_rep")), Error);
    std::mt19937 rng(3);
    for (int n = 0; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            auto g = bridge_fixture(rng, n);
            CAPTURE(describe(g));
            REQUIRE(static_cast<int>(find_elliptic_bridges(g).size()) == n);
            auto all = enumerate_c_replacements(g);
            CHECK(all.size() == (1u << n));
            for (const auto& h : all) {
                CHECK(arithmetic_genus(h) == arithmetic_genus(g));
                CHECK(classify(h).c_semistable);
                CHECK(isomorphic(pseudo_stabilize(h), g));
            }
        }
}
