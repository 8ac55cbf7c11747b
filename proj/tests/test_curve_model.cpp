#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "gitcurve/basin.hpp"
#include "gitcurve/families.hpp"
#include "gitcurve/paper_check.hpp"
#include "gitcurve/stability.hpp"
#include "support.hpp"

using namespace gitcurve;

namespace {

CurveGraph chain(const std::vector<int>& genera, const std::string& links) {
    CurveGraph g;
    for (int x : genera) g.add_component(x);
    for (std::size_t i = 0; i < links.size(); ++i)
        g.join(links[i] == '=' ? Kind::Tacnode : Kind::Node, static_cast<int>(i), static_cast<int>(i + 1));
    return g;
}

CurveGraph relabel(const CurveGraph& g, std::mt19937& rng) {
    auto ids = g.ids();
    auto perm = ids;
    for (int& p : perm) p += 100;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto map = [&](int id) { return perm[static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin())]; };
    CurveGraph h;
    for (const auto& c : g.components) h.components.push_back({map(c.id), c.geometric_genus, c.cusp_count, c.label});
    std::shuffle(h.components.begin(), h.components.end(), rng);
    for (const auto& x : g.intersections) {
        Intersection y{x.kind, {map(x.a.component), x.a.slot}, {map(x.b.component), x.b.slot}};
        if (rng() % 2) std::swap(y.a, y.b);
        h.intersections.push_back(y);
    }
    std::shuffle(h.intersections.begin(), h.intersections.end(), rng);
    return h;
}

}  // namespace

TEST_CASE("rationals print in lowest terms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(parse_int_list("-1,2, 3") == std::vector<long>{-1, 2, 3});
}

TEST_CASE("arithmetic genus agrees with a direct count on the corpus") {
    for (const auto& g : testsupport::corpus(7, 300, 10)) {
        testsupport::Brute b(g);
        CHECK(arithmetic_genus(g) == b.genus((1u << b.n) - 1));
    }
}

TEST_CASE("json round trip and isomorphism under relabelling") {
    std::mt19937 rng(11);
    for (const auto& g : testsupport::corpus(3, 150, 9)) {
        auto h = graph_from_json(to_json(g));
        CHECK(to_json(h) == to_json(g));
        CHECK(isomorphic(g, relabel(g, rng)));
        auto k = g;
        k.components.front().geometric_genus += 1;
        CHECK_FALSE(isomorphic(g, k));
    }
    CHECK_FALSE(isomorphic(chain({2, 1, 2}, "-="), chain({2, 1, 2}, "--")));
    CHECK(isomorphic(chain({2, 1, 3}, "-="), chain({3, 1, 2}, "=-")));
}

TEST_CASE("read_graph reports parse errors with a line number") {
    auto path = std::filesystem::temp_directory_path() / "gitcurve_bad.json";
    std::ofstream(path) << "{\n  \"components\": [\n    {\"id\": 0,, }\n  ]\n}\n";
    try {
        read_graph(path.string());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("validation rejects reused slots and unknown components") {
    CurveGraph g = chain({2, 2}, "-");
    g.intersections.push_back(g.intersections.front());
    CHECK_THROWS_AS(g.validate(), Error);
    CurveGraph h = chain({2}, "");
    CHECK_THROWS_AS(h.node(0, 5), Error);
}

TEST_CASE("classification lattice on a random corpus") {
    auto graphs = testsupport::corpus(2024, 520, 12);
    for (const auto& [name, g] : paper_fixtures()) graphs.push_back(g);
    int checked = 0;
    for (const auto& g : graphs) {
        auto f = classify(g);
        testsupport::Brute b(g);
        CAPTURE(describe(g));
        // implications between the six notions
        CHECK((!f.dm_stable || !f.pseudostable || f.c_semistable));
        CHECK((!f.pseudostable || f.c_semistable));
        CHECK((!f.c_stable || f.c_semistable));
        CHECK((!f.c_stable || f.pseudostable));
        // a nodal elliptic curve is a closed elliptic chain; only possible in genus 2
        if (arithmetic_genus(g) >= 3) CHECK((!f.c_stable || f.h_stable));
        CHECK((!f.h_stable || f.h_semistable));
        CHECK((!f.h_semistable || f.c_semistable));
        CHECK(f.c_stable == (f.pseudostable && find_elliptic_bridges(g).empty()));
        // independent counts
        CHECK(static_cast<int>(find_elliptic_tails(g).size()) == b.count_genus_one(1, true));
        CHECK(static_cast<int>(find_elliptic_bridges(g).size()) == b.count_genus_one(2, true));
        bool ample = omega_ample(g);
        CHECK(f.pseudostable == (!b.has_tacnode() && ample && b.min_genus_one_points() >= 2));
        CHECK(f.c_semistable == (ample && b.min_genus_one_points() >= 2));
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("genus of rosaries and chains") {
    for (int r = 2; r <= 8; ++r) {
        std::string tac(static_cast<std::size_t>(r - 1), '=');
        CHECK(arithmetic_genus(chain(std::vector<int>(static_cast<std::size_t>(r), 0), tac)) == r - 1);
        if (r >= 3) CHECK(arithmetic_genus(build_closed_rosary_config(r).graph) == r + 1);
        CHECK(arithmetic_genus(chain(std::vector<int>(static_cast<std::size_t>(r), 1), tac)) == 2 * r - 1);
    }
    for (int g = 4; g <= 9; ++g)
        for (int r = 1; r <= g - 3; ++r) CHECK(arithmetic_genus(build_open_rosary_config(g, r).graph) == g);
    for (int r = 3; r <= 9; r += 2) CHECK(arithmetic_genus(build_broken_bead_config(r).graph) == r + 1);
}

TEST_CASE("table examples") {
    auto fx = paper_fixtures();
    auto f = classify(fx.at("smooth"));
    CHECK((f.dm_stable && f.pseudostable && f.c_semistable && f.c_stable && f.h_semistable && f.h_stable));
    f = classify(fx.at("elliptic_tail"));
    CHECK(f.dm_stable);
    CHECK_FALSE(f.pseudostable);
    CHECK_FALSE(f.c_semistable);
    f = classify(fx.at("cuspidal"));
    CHECK((!f.dm_stable && f.pseudostable && f.c_stable));
    f = classify(fx.at("tacnodal_tail"));
    CHECK_FALSE(f.c_semistable);
    f = classify(fx.at("bridge"));
    CHECK((f.c_semistable && !f.c_stable && !f.h_semistable));
    f = classify(fx.at("h_minorbit_ex1"));
    CHECK((f.h_semistable && !f.h_stable));
    f = classify(fx.at("closed_rosary_r5"));
    CHECK(f.h_stable);
    f = classify(fx.at("closed_rosary_r4"));
    CHECK((f.h_semistable && !f.h_stable));
    CHECK(find_elliptic_chains(fx.at("elliptic_chain2")).size() >= 1);
    auto w = find_weak_elliptic_chains(fx.at("closed_weak_chain3"));
    CHECK(std::any_of(w.begin(), w.end(), [](const ChainRecord& c) { return c.closed && c.length == 3; }));
}

TEST_CASE("rosary detection and automorphisms") {
    auto fx = paper_fixtures();
    auto rs = find_rosaries(fx.at("bridge_rep"));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].length == 2);
    CHECK_FALSE(rs[0].closed);
    auto cr = find_rosaries(fx.at("closed_rosary_r4"));
    REQUIRE(cr.size() == 1);
    CHECK(cr[0].closed);
    CHECK(cr[0].length == 4);
    // read both as a closed rosary with a broken bead and as an open rosary closed by a node
    auto bb = find_rosaries(fx.at("broken_bead_r3"));
    REQUIRE(bb.size() == 2);
    auto closed = std::find_if(bb.begin(), bb.end(), [](const RosaryRecord& r) { return r.closed; });
    auto open = std::find_if(bb.begin(), bb.end(), [](const RosaryRecord& r) { return !r.closed; });
    REQUIRE(closed != bb.end());
    REQUIRE(open != bb.end());
    CHECK(closed->broken_positions.size() == 1);
    CHECK(closed->length == 3);
    CHECK(open->closed_by_node);
    CHECK(open->length == 4);
    CHECK(has_infinite_automorphisms(fx.at("bridge_rep")).infinite);
    CHECK_FALSE(has_infinite_automorphisms(fx.at("bridge")).infinite);
    CHECK(has_infinite_automorphisms(fx.at("closed_rosary_r4")).infinite);
    CHECK_FALSE(has_infinite_automorphisms(fx.at("closed_rosary_r5")).infinite);
    CHECK(aut_torus_rank(fx.at("bridge_rep")) == 1);
    CHECK(aut_torus_rank(fx.at("closed_rosary_r4")) == 1);
    CHECK_THROWS_AS(aut_torus_rank(fx.at("h_minorbit_ex1")), Error);
}

TEST_CASE("shipped fixture files match the built-in fixtures") {
    for (const auto& [name, g] : paper_fixtures()) {
        auto path = std::filesystem::path(GITCURVE_FIXTURE_DIR) / (name + ".json");
        CAPTURE(name);
        REQUIRE(std::filesystem::exists(path));
        CHECK(isomorphic(read_graph(path.string()), g));
    }
}
