#include "gitcurve/paper_check.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "gitcurve/basin.hpp"
#include "gitcurve/chow_multiplicity.hpp"
#include "gitcurve/divisor_classes.hpp"
#include "gitcurve/families.hpp"
#include "gitcurve/ideal_engine.hpp"
#include "gitcurve/stability.hpp"

namespace gitcurve {

bool Manifest::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

namespace {

CurveGraph chain_graph(const std::vector<std::pair<int, std::string>>& comps, const std::string& links) {
    // links: one character per gap, '-' node, '=' tacnode
    CurveGraph g;
    for (const auto& [genus, label] : comps) g.add_component(genus, 0, label);
    for (std::size_t i = 0; i < links.size(); ++i)
        g.join(links[i] == '=' ? Kind::Tacnode : Kind::Node, static_cast<int>(i), static_cast<int>(i + 1));
    return g;
}

}  // namespace

std::map<std::string, CurveGraph> paper_fixtures() {
    std::map<std::string, CurveGraph> f;
    CurveGraph smooth;
    smooth.add_component(4, 0, "C");
    f["smooth"] = smooth;
    CurveGraph cusp;
    cusp.add_component(3, 1, "C");
    f["cuspidal"] = cusp;
    f["elliptic_tail"] = chain_graph({{3, "C"}, {1, "E"}}, "-");
    f["bridge"] = chain_graph({{2, "C1"}, {1, "E"}, {2, "C2"}}, "--");
    f["bridge2"] = chain_graph({{2, "C1"}, {1, "E1"}, {1, "E2"}, {2, "C2"}}, "---");
    f["bridge_rep"] = chain_graph({{2, "C1"}, {0, "L1"}, {0, "L2"}, {2, "C2"}}, "-=-");
    f["tacnodal_bridge"] = chain_graph({{2, "C1"}, {2, "C2"}}, "=");
    CurveGraph tail;
    int e = tail.add_component(0, 1, "E");
    int r = tail.add_component(0, 0, "R");
    int d = tail.add_component(3, 0, "D");
    tail.tacnode(e, r);
    tail.node(r, d);
    f["tacnodal_tail"] = tail;
    f["h_minorbit_ex1"] = chain_graph({{2, "C1"}, {1, "E1"}, {0, "P"}, {1, "E2"}, {2, "C2"}}, "-==-");
    f["h_minorbit_ex2"] = chain_graph({{2, "C1"}, {1, "E1"}, {1, "E2"}, {2, "C2"}}, "=-=");
    f["elliptic_chain2"] = chain_graph({{2, "C1"}, {1, "E1"}, {1, "E2"}, {2, "C2"}}, "-=-");
    CurveGraph closedChain;
    for (int i = 0; i < 3; ++i) closedChain.add_component(1, 0, "E");
    for (int i = 0; i < 3; ++i) closedChain.tacnode(i, (i + 1) % 3);
    f["closed_weak_chain3"] = closedChain;
    f["open_rosary_g6_r3"] = build_open_rosary_config(6, 3).graph;
    f["closed_rosary_r4"] = build_closed_rosary_config(4).graph;
    f["closed_rosary_r5"] = build_closed_rosary_config(5).graph;
    f["broken_bead_r3"] = build_broken_bead_config(3).graph;
    return f;
}

namespace {

class Checker {
public:
    explicit Checker(CheckItem& item) : item_(item) {}

    void expect(const std::string& name, const Rational& got, const Rational& want) {
        item_.outputs[name] = to_string(got);
        if (got != want) fail(name + ": expected " + to_string(want) + ", got " + to_string(got));
    }
    void expect(const std::string& name, long got, long want) {
        item_.outputs[name] = got;
        if (got != want) fail(name + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
    }
    void expect(const std::string& name, bool got, bool want) {
        item_.outputs[name] = got;
        if (got != want) fail(name + ": expected " + (want ? "true" : "false") + ", got " + (got ? "true" : "false"));
    }
    void record(const std::string& name, nlohmann::json v) { item_.outputs[name] = std::move(v); }
    void fail(const std::string& why) {
        if (item_.pass) item_.detail = why;
        item_.pass = false;
    }

private:
    CheckItem& item_;
};

using Runner = std::function<void(Checker&)>;

struct Spec {
    std::string description;
    Runner run;
};

void open_rosary(Checker& ck, int g, int r) {
    auto c = build_open_rosary_config(g, r);
    auto rho = canonical_1ps(c);
    auto rs = index_series(c, rho, {2, 3});
    bool even = r % 2 == 0;
    ck.expect("sum2", rs[0].weight_sum, Rational(even ? 28L * g - 28 : 28L * g - 41));
    ck.expect("average2", rs[0].average, Rational(even ? 28L * g - 28 : 28L * g - 42));
    ck.expect("sum3", rs[1].weight_sum, Rational(even ? 66L * g - 66 : 66L * g - 97));
    ck.expect("average3", rs[1].average, Rational(even ? 66L * g - 66 : 66L * g - 99));
    ck.expect("mu2", rs[0].mu, Rational(even ? 0 : -1));
    ck.expect("mu3", rs[1].mu, Rational(even ? 0 : -2));
}

void closed_rosary(Checker& ck, int r) {
    auto c = build_closed_rosary_config(r);
    auto rho = canonical_1ps(c);
    auto ord = make_order(rho);
    auto s2 = evaluate_slice(c, 2, ord);
    auto s3 = evaluate_slice(c, 3, ord);
    auto rs = index_series(c, rho, {2, 3});
    ck.expect("mu2", rs[0].mu, Rational(0));
    ck.expect("mu3", rs[1].mu, Rational(0));
    ck.expect("standard2", static_cast<long>(s2.rank), 7L * r);
    ck.expect("standard3", static_cast<long>(s3.rank), 11L * r);
    ck.expect("initial2", static_cast<long>(initial_monomials(s2).size()), (9L * r * r - 11L * r) / 2);
}

std::set<Monomial> parse_set(const std::vector<std::string>& xs, int n) {
    std::set<Monomial> out;
    for (const auto& x : xs) out.insert(parse_monomial(x, n));
    return out;
}

void broken_bead(Checker& ck, int r) {
    auto c = build_broken_bead_config(r);
    auto rho = canonical_1ps(c);
    auto rs = index_series(c, rho, {2, 3});
    ck.expect("sum2", rs[0].weight_sum, Rational(28L * r - 13));
    ck.expect("average2", rs[0].average, Rational(28L * r - 14));
    ck.expect("sum3", rs[1].weight_sum, Rational(66L * r - 31));
    ck.expect("average3", rs[1].average, Rational(66L * r - 33));
    ck.expect("mu2", rs[0].mu, Rational(-1));
    ck.expect("mu3", rs[1].mu, Rational(-2));
    for (int m = 2; m <= 6; ++m)
        ck.expect("extrapolated_mu" + std::to_string(m), extrapolate_index(rs[0].mu, rs[1].mu, m), Rational(1 - m));
    ck.expect("chow_sign", static_cast<long>(chow_index_sign(rs[0].mu, rs[1].mu)), 0L);
    if (r == 3) {
        auto want = parse_set({"x0^2", "x0*x3", "x0*x4", "x0*x5", "x0*x6", "x0*x7", "x0*x8", "x1*x3", "x1*x4",
                               "x1*x5", "x1*x7", "x2*x4", "x2*x5", "x2*x6", "x2*x7", "x2*x8", "x3*x5", "x3*x6",
                               "x3*x7", "x3*x8", "x4*x7", "x4*x8", "x5*x7", "x5*x8"},
                              c.total_coordinates);
        auto s = evaluate_slice(c, 2, make_order(rho));
        auto got = initial_monomials(s);
        std::set<Monomial> gotSet(got.begin(), got.end());
        ck.expect("initial2_count", static_cast<long>(gotSet.size()), static_cast<long>(want.size()));
        ck.expect("initial2_matches", gotSet == want, true);
    }
}

void interpolation(Checker& ck, const Configuration& c) {
    auto rho = canonical_1ps(c);
    auto rs = index_series(c, rho, {2, 3, 4});
    ck.expect("mu4", rs[2].mu, extrapolate_index(rs[0].mu, rs[1].mu, 4));
    ck.record("mu2", to_string(rs[0].mu));
    ck.record("mu3", to_string(rs[1].mu));
}

void certificate(Checker& ck, ChowCase k, int g, const Rational& bound, const Rational& threshold) {
    auto cert = certify_unstable(k, g);
    ck.expect("lower_bound", cert.lower_bound, bound);
    ck.expect("threshold", cert.threshold, threshold);
    ck.expect("unstable", cert.verdict == Verdict::Unstable, true);
}

std::vector<Rational> tac(long s) { return {Rational(4 * s), Rational(3 * s), Rational(2 * s)}; }

void expect_weights(Checker& ck, const std::string& name, const std::vector<Rational>& got, const std::vector<Rational>& want) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& q : got) j.push_back(to_string(q));
    ck.record(name, j);
    if (got != want) {
        std::string w;
        for (const auto& q : want) w += (w.empty() ? "" : ",") + to_string(q);
        ck.fail(name + ": expected (" + w + ")");
    }
}

void basin_open(Checker& ck, int g, int r) {
    auto c = build_open_rosary_config(g, r);
    auto rep = basin_membership(c, canonical_1ps(c));
    // intersections: a_0, a_1..a_r, a_{r+1}
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        const auto& v = rep.entries[i].versal;
        std::vector<Rational> want;
        if (i == 0) want = {Rational(-1)};
        else if (static_cast<int>(i) == r + 1) want = {Rational(r % 2 == 0 ? 1 : -1)};
        else want = tac(i % 2 == 1 ? 1 : -1);
        expect_weights(ck, v.ref.name, v.parameter_weights, want);
    }
}

void basin_broken(Checker& ck, int r) {
    auto c = build_broken_bead_config(r);
    auto rep = basin_membership(c, canonical_1ps(c));
    const auto& node = rep.entries.front().versal;
    expect_weights(ck, node.ref.name, node.parameter_weights, {Rational(-2)});
    // tacnodes in cyclic order starting next to the node
    auto g = c.graph;
    int cur = g.intersections[node.ref.intersection].b.component;
    std::size_t in = node.ref.intersection;
    long s = 1;
    for (int k = 0; k < r; ++k) {
        std::size_t out = in;
        for (std::size_t x = 0; x < g.intersections.size(); ++x)
            if (x != in && g.intersections[x].touches(cur)) out = x;
        if (g.intersections[out].kind != Kind::Tacnode) break;
        const auto& v = rep.entries[out].versal;
        expect_weights(ck, v.ref.name, v.parameter_weights, tac(s));
        s = -s;
        cur = g.intersections[out].other(cur);
        in = out;
    }
    auto gen = rep.generic;
    ck.record("generic", describe(gen));
    auto chains = find_elliptic_chains(gen);
    bool closedChain = std::any_of(chains.begin(), chains.end(),
                                   [&](const ChainRecord& ch) { return ch.closed && ch.length == (r + 1) / 2; });
    ck.expect("generic_is_closed_chain", closedChain, true);
}

void basin_closed(Checker& ck, int r) {
    auto c = build_closed_rosary_config(r);
    auto rep = basin_membership(c, canonical_1ps(c));
    // tacnode i joins bead i and bead i+1
    long first = sign(rep.entries[0].versal.parameter_weights[0]);
    for (int i = 0; i < r; ++i) {
        const auto& v = rep.entries[static_cast<std::size_t>(i)].versal;
        expect_weights(ck, v.ref.name, v.parameter_weights, tac(i % 2 == 0 ? first : -first));
    }
    auto gen = rep.generic;
    ck.record("generic", describe(gen));
    bool ok = static_cast<int>(gen.components.size()) == r / 2 &&
              std::all_of(gen.components.begin(), gen.components.end(), [](const Component& x) { return x.geometric_genus == 1; }) &&
              std::all_of(gen.intersections.begin(), gen.intersections.end(), [](const Intersection& x) { return x.kind == Kind::Tacnode; }) &&
              is_connected(gen) && arithmetic_genus(gen) == r + 1;
    ck.expect("generic_is_closed_weak_chain", ok, true);
}

void classify_fixture(Checker& ck, const std::string& name, StabilityFlags want) {
    auto g = paper_fixtures().at(name);
    auto f = classify(g);
    ck.expect("dm_stable", f.dm_stable, want.dm_stable);
    ck.expect("pseudostable", f.pseudostable, want.pseudostable);
    ck.expect("c_semistable", f.c_semistable, want.c_semistable);
    ck.expect("c_stable", f.c_stable, want.c_stable);
    ck.expect("h_semistable", f.h_semistable, want.h_semistable);
    ck.expect("h_stable", f.h_stable, want.h_stable);
}

StabilityFlags flags(bool dm, bool ps, bool cs, bool cst, bool hs, bool hst) { return {dm, ps, cs, cst, hs, hst}; }

void closed_orbit(Checker& ck, const std::string& fixture, bool hilbert, const CurveGraph& want) {
    auto g = paper_fixtures().at(fixture);
    auto rep = hilbert ? h_closed_orbit_rep(g) : c_closed_orbit_rep(g);
    ck.record("representative", describe(rep));
    ck.expect("matches_expected", isomorphic(rep, want), true);
    ck.expect("closed_orbit", hilbert ? is_h_closed_orbit(rep) : is_c_closed_orbit(rep), true);
    auto again = hilbert ? h_closed_orbit_rep(rep) : c_closed_orbit_rep(rep);
    ck.expect("idempotent", isomorphic(again, rep), true);
}

void replacements(Checker& ck, const std::string& fixture, const std::vector<CurveGraph>& want) {
    auto got = enumerate_c_replacements(paper_fixtures().at(fixture));
    nlohmann::json j = nlohmann::json::array();
    for (const auto& h : got) j.push_back(describe(h));
    ck.record("configurations", j);
    ck.expect("count", static_cast<long>(got.size()), static_cast<long>(want.size()));
    std::vector<bool> used(want.size(), false);
    for (const auto& h : got) {
        bool found = false;
        for (std::size_t i = 0; i < want.size() && !found; ++i)
            if (!used[i] && isomorphic(h, want[i])) used[i] = found = true;
        if (!found) ck.fail("unexpected configuration " + describe(h));
    }
}

std::map<std::string, Spec> registry() {
    std::map<std::string, Spec> reg;
    for (auto [g, r] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 4}, {8, 5}})
        reg["hs-o-ros/g" + std::to_string(g) + "-r" + std::to_string(r)] = {
            "open rosary of length " + std::to_string(r) + " in genus " + std::to_string(g),
            [g, r](Checker& ck) { open_rosary(ck, g, r); }};
    for (int r : {4, 6, 8})
        reg["hss-c-ros/r" + std::to_string(r)] = {"closed rosary of length " + std::to_string(r),
                                                  [r](Checker& ck) { closed_rosary(ck, r); }};
    for (int r : {3, 5, 7})
        reg["hs-cr-1br/r" + std::to_string(r)] = {"closed rosary of length " + std::to_string(r) + " with a broken bead",
                                                  [r](Checker& ck) { broken_bead(ck, r); }};
    for (int r : {4, 6, 8})
        reg["curveresult/closed-rosary-r" + std::to_string(r)] = {
            "degree-4 index against the quadratic interpolation",
            [r](Checker& ck) { interpolation(ck, build_closed_rosary_config(r)); }};
    for (int r : {3, 5, 7})
        reg["curveresult/broken-bead-r" + std::to_string(r)] = {
            "degree-4 index against the quadratic interpolation",
            [r](Checker& ck) { interpolation(ck, build_broken_bead_config(r)); }};
    reg["chow/non-ordinary-cusp"] = {"non-ordinary cusp", [](Checker& ck) {
                                         certificate(ck, ChowCase::NonOrdinaryCusp, 4, 25, 24);
                                     }};
    reg["chow/higher-tacnode"] = {"higher tacnode", [](Checker& ck) {
                                      certificate(ck, ChowCase::HigherTacnode, 4, 18, 16);
                                  }};
    reg["chow/multiple-component"] = {"multiple component", [](Checker& ck) {
                                          certificate(ck, ChowCase::MultipleComponent, 4, 18, 16);
                                      }};
    for (int g = 4; g <= 20; ++g) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%02d", g);
        reg[std::string("chow/genus-one-tacnode-tail/g") + buf] = {
            "elliptic tail with a tacnode in genus " + std::to_string(g), [g](Checker& ck) {
                Rational threshold = Rational(16L * g) - Rational(40, 3);
                certificate(ck, ChowCase::GenusOneTacnodeTail, g, Rational(36 + 16L * g - 40), threshold);
            }};
    }
    reg["basin/open-rosary/g6-r3"] = {"versal weights on an open rosary", [](Checker& ck) { basin_open(ck, 6, 3); }};
    reg["basin/open-rosary/g7-r4"] = {"versal weights on an open rosary", [](Checker& ck) { basin_open(ck, 7, 4); }};
    reg["basin/broken-bead/r3"] = {"versal weights on a broken bead rosary", [](Checker& ck) { basin_broken(ck, 3); }};
    reg["basin/broken-bead/r5"] = {"versal weights on a broken bead rosary", [](Checker& ck) { basin_broken(ck, 5); }};
    reg["basin/closed-rosary/r4"] = {"versal weights on a closed rosary", [](Checker& ck) { basin_closed(ck, 4); }};
    reg["basin/closed-rosary/r6"] = {"versal weights on a closed rosary", [](Checker& ck) { basin_closed(ck, 6); }};
    reg["divisor/lambda-2"] = {"second Hodge class", [](Checker& ck) {
                                   auto l = lambda_n(2, 10);
                                   ck.expect("lambda", l.lambda, Rational(13));
                                   ck.expect("delta", l.delta_total(), Rational(-1));
                               }};
    reg["divisor/viehweg"] = {"degree-2 polarization rows", [](Checker& ck) {
                                  for (int g = 3; g <= 20; ++g)
                                      for (int m = 2; m <= 50; ++m) {
                                          auto v = viehweg_class(2, m, g);
                                          Rational f((m - 1L) * (g - 1L));
                                          auto w = DivisorClass::total(g, f * (20L * m - 3), f * (-2L * m));
                                          if (!(v == w)) ck.fail("g=" + std::to_string(g) + " m=" + std::to_string(m) + ": " + v.str());
                                      }
                                  ck.record("sample", viehweg_class(2, 2, 3).str());
                              }};
    reg["divisor/viehweg-limit"] = {"asymptotic polarization classes", [](Checker& ck) {
                                        auto a = viehweg_asymptotic(2, 10);
                                        ck.expect("proportional_10l_d", proportional(a, DivisorClass::total(10, 10, -1)), true);
                                        auto b = viehweg_asymptotic(1, 10);
                                        ck.expect("n1_proportional", proportional(b, DivisorClass::total(10, 42, -5)), true);
                                    }};
    reg["divisor/epsilon"] = {"slope correction", [](Checker& ck) {
                                  ck.expect("epsilon10", epsilon_of_m(10), Rational(39, 1970));
                                  for (int m = 2; m <= 50; ++m) {
                                      Rational alpha = Rational(7, 10) - epsilon_of_m(m);
                                      auto k = canonical_alpha_class(alpha, 10);
                                      Rational slope = 10 - Rational(3, 2 * m);
                                      slope.canonicalize();
                                      if (!proportional(k, DivisorClass::total(10, slope, -1)))
                                          ck.fail("m=" + std::to_string(m) + ": " + k.str());
                                  }
                              }};
    reg["divisor/moriwaki"] = {"boundary decomposition of 10 lambda - delta - delta_1", [](Checker& ck) {
                                   for (int g = 4; g <= 30; ++g) {
                                       auto d = moriwaki_decomposition(g);
                                       if (!d.identity_holds) ck.fail("identity fails for g=" + std::to_string(g));
                                       if (!d.all_positive) ck.fail("non-positive coefficient for g=" + std::to_string(g));
                                   }
                                   ck.expect("g4_i2", moriwaki_decomposition(4).coefficients[3], Rational(3));
                               }};
    reg["divisor/log-pullback"] = {"pullback at alpha 7/10", [](Checker& ck) {
                                       auto k = log_pullback(Rational(7, 10), 10);
                                       auto w = (lambda_class(10) * Rational(10) - delta_class(10)).to_split() - delta_i_class(10, 1);
                                       ck.expect("proportional", proportional(k, w), true);
                                   }};
    reg["classify/smooth"] = {"smooth curve", [](Checker& ck) { classify_fixture(ck, "smooth", flags(1, 1, 1, 1, 1, 1)); }};
    reg["classify/bridge"] = {"elliptic bridge", [](Checker& ck) { classify_fixture(ck, "bridge", flags(1, 1, 1, 0, 0, 0)); }};
    reg["classify/tacnodal-tail"] = {"tacnodal elliptic tail",
                                     [](Checker& ck) { classify_fixture(ck, "tacnodal_tail", flags(0, 0, 0, 0, 0, 0)); }};
    reg["closed-orbit/c/bridge"] = {"length-two rosary replacement", [](Checker& ck) {
                                        closed_orbit(ck, "bridge", false, paper_fixtures().at("bridge_rep"));
                                    }};
    reg["closed-orbit/c/bridge2"] = {"two length-two rosaries", [](Checker& ck) {
                                         closed_orbit(ck, "bridge2", false,
                                                      chain_graph({{2, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {2, ""}}, "-=-=-"));
                                     }};
    reg["closed-orbit/h/ex1"] = {"weak chains around a tacnodal conic", [](Checker& ck) {
                                     closed_orbit(ck, "h_minorbit_ex1", true,
                                                  chain_graph({{2, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {2, ""}},
                                                              "-==-==-"));
                                 }};
    reg["closed-orbit/h/ex2"] = {"weak chains meeting at a node", [](Checker& ck) {
                                     closed_orbit(ck, "h_minorbit_ex2", true,
                                                  chain_graph({{2, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {0, ""}, {2, ""}},
                                                              "-==-==-"));
                                 }};
    reg["replacements/bridge"] = {"length-one bridge", [](Checker& ck) {
                                      replacements(ck, "bridge", {paper_fixtures().at("bridge"), paper_fixtures().at("tacnodal_bridge")});
                                  }};
    reg["replacements/bridge2"] = {"length-two bridge", [](Checker& ck) {
                                       replacements(ck, "bridge2",
                                                    {paper_fixtures().at("bridge2"),
                                                     chain_graph({{2, ""}, {1, ""}, {2, ""}}, "=-"),
                                                     chain_graph({{2, ""}, {1, ""}, {2, ""}}, "-="),
                                                     chain_graph({{2, ""}, {0, ""}, {2, ""}}, "==")});
                                   }};
    return reg;
}

bool selected(const std::string& id, const std::vector<std::string>& only) {
    if (only.empty()) return true;
    for (const auto& p : only)
        if (id.compare(0, p.size(), p) == 0) return true;
    return false;
}

}  // namespace

std::vector<std::string> paper_check_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, s] : registry()) ids.push_back(id);
    return ids;
}

CheckItem run_check_item(const std::string& id) {
    auto reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw Error("unknown check item '" + id + "'");
    CheckItem item;
    item.id = id;
    item.description = it->second.description;
    Checker ck(item);
    try {
        it->second.run(ck);
    } catch (const std::exception& e) {
        ck.fail(std::string("error: ") + e.what());
    }
    return item;
}

Manifest run_paper_check(const std::vector<std::string>& only, bool parallel) {
    Manifest m;
    m.only = only;
    std::vector<std::string> ids;
    for (const auto& id : paper_check_ids())
        if (selected(id, only)) ids.push_back(id);
    if (ids.empty()) throw Error("no check items match the selection");
    if (parallel) {
        std::vector<std::future<CheckItem>> fs;
        for (const auto& id : ids) fs.push_back(std::async(std::launch::async, run_check_item, id));
        for (auto& f : fs) m.items.push_back(f.get());
    } else {
        for (const auto& id : ids) m.items.push_back(run_check_item(id));
    }
    std::sort(m.items.begin(), m.items.end(), [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
    return m;
}

nlohmann::json to_json(const CheckItem& item) {
    nlohmann::json j{{"id", item.id}, {"description", item.description}, {"pass", item.pass}, {"outputs", item.outputs}};
    if (!item.pass) j["detail"] = item.detail;
    return j;
}

nlohmann::json to_json(const Manifest& m) {
    nlohmann::json items = nlohmann::json::array();
    long passed = 0;
    for (const auto& i : m.items) {
        items.push_back(to_json(i));
        passed += i.pass;
    }
    return {{"command", "paper-check"},
            {"parameters", {{"only", m.only}}},
            {"engine_version", kEngineVersion},
            {"items", items},
            {"passed", passed},
            {"failed", static_cast<long>(m.items.size()) - passed},
            {"all_pass", m.all_pass()}};
}

}  // namespace gitcurve
