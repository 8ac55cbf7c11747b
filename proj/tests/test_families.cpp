#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gitcurve/families.hpp"
#include "gitcurve/stability.hpp"

using namespace gitcurve;

namespace {

std::vector<Configuration> all_configs() {
    std::vector<Configuration> out;
    for (int g = 4; g <= 9; ++g)
        for (int r = 1; r <= g - 2; ++r) out.push_back(build_open_rosary_config(g, r));
    for (int r = 3; r <= 9; ++r) out.push_back(build_closed_rosary_config(r));
    for (int r = 3; r <= 9; r += 2) out.push_back(build_broken_bead_config(r));
    for (int g = 4; g <= 8; ++g) out.push_back(build_tacnodal_tail_config(g));
    return out;
}

// coordinates of the terms with local order k at a branch point
std::set<int> order_k(const ComponentParam& p, End e, int k) {
    std::set<int> out;
    for (const auto& t : p.terms)
        if ((e == End::TZero ? t.b : t.a) == k) out.insert(t.coordinate);
    return out;
}

std::set<int> point_of(const Configuration& c, const BranchRef& br) {
    if (c.remainder && br.component == *c.remainder) return {c.remainder_points.at(br)};
    return order_k(*c.param.find(br.component), c.ends.at(br), 0);
}

// tangent direction: lowest positive local order coordinates
std::set<int> tangent_of(const Configuration& c, const BranchRef& br) {
    if (c.remainder && br.component == *c.remainder) return {-1};
    const auto& p = *c.param.find(br.component);
    for (int k = 1; k <= p.degree; ++k) {
        auto s = order_k(p, c.ends.at(br), k);
        if (!s.empty()) return s;
    }
    return {};
}

}  // namespace

TEST_CASE("branches of every intersection meet at one coordinate point") {
    for (const auto& c : all_configs()) {
        CAPTURE(family_name(c.family));
        CAPTURE(c.r);
        c.param.validate();
        c.graph.validate();
        for (const auto& x : c.graph.intersections) {
            auto pa = point_of(c, x.a), pb = point_of(c, x.b);
            REQUIRE(pa.size() == 1);
            CHECK(pa == pb);
            auto ta = tangent_of(c, x.a), tb = tangent_of(c, x.b);
            if (x.kind == Kind::Tacnode) CHECK(ta == tb);
            else CHECK(ta != tb);
        }
    }
}

TEST_CASE("parametrized coordinates are disjoint away from shared points") {
    for (const auto& c : all_configs()) {
        std::set<int> shared;
        for (const auto& x : c.graph.intersections) {
            for (int k : point_of(c, x.a)) shared.insert(k);
            if (x.kind == Kind::Tacnode)
                for (int k : tangent_of(c, x.a)) shared.insert(k);
        }
        std::map<int, int> owners;
        for (const auto& p : c.param.components)
            for (const auto& t : p.terms) ++owners[t.coordinate];
        for (const auto& [k, n] : owners)
            if (!shared.count(k)) CHECK(n == 1);
    }
}

TEST_CASE("canonical weights act by automorphisms with the expected local weights") {
    for (const auto& c : all_configs()) {
        auto rho = canonical_1ps(c);
        CHECK(static_cast<int>(rho.weights.size()) == c.total_coordinates);
        bool expectAut = !(c.family == Family::ClosedRosary && c.r % 2 == 1);
        if (expectAut) CHECK_NOTHROW(check_automorphism(c, rho));
        else CHECK_THROWS_AS(check_automorphism(c, rho), Error);
    }
    auto c = build_open_rosary_config(6, 3);
    auto rho = canonical_1ps(c);
    CHECK(rho.weights == std::vector<long>{2, 1, 0, 2, 3, 4, 2, 1, 0, 2, 2, 2, 2, 2, 2});
    // weight of the tangent to L1 at the node with D
    CHECK(branch_weight(c, rho, c.graph.intersections[0].b) == -1);
}

TEST_CASE("graph torus generators reproduce the canonical weights") {
    for (int g = 5; g <= 9; ++g)
        for (int r = 2; r <= g - 3; ++r) {
            auto c = build_open_rosary_config(g, r);
            auto gens = torus_generators(c);
            REQUIRE(gens.size() == 1);
            CHECK_NOTHROW(check_automorphism(c, gens[0]));
            auto rho = canonical_1ps(c);
            for (const auto& x : c.graph.intersections)
                for (auto br : {x.a, x.b}) CHECK(branch_weight(c, gens[0], br) == branch_weight(c, rho, br));
        }
    for (int r = 4; r <= 8; r += 2) {
        auto c = build_closed_rosary_config(r);
        auto gens = torus_generators(c);
        REQUIRE(gens.size() == 1);
        auto rho = canonical_1ps(c);
        for (const auto& x : c.graph.intersections)
            CHECK(abs(branch_weight(c, gens[0], x.a)) == abs(branch_weight(c, rho, x.a)));
    }
    CHECK(torus_generators(build_closed_rosary_config(5)).empty());
}

TEST_CASE("builders reject invalid parameters") {
    CHECK_THROWS_AS(build_open_rosary_config(3, 1), Error);
    CHECK_THROWS_AS(build_open_rosary_config(6, 5), Error);
    CHECK_THROWS_AS(build_closed_rosary_config(2), Error);
    CHECK_THROWS_AS(build_broken_bead_config(4), Error);
    auto c = build_closed_rosary_config(4);
    CHECK_THROWS_AS(check_automorphism(c, OneParamSubgroup{{1, 2}}), Error);
}

TEST_CASE("family genera") {
    for (const auto& c : all_configs()) CHECK(arithmetic_genus(c.graph) == c.genus);
}
