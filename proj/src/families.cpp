#include "gitcurve/families.hpp"

#include <algorithm>
#include <deque>

#include "gitcurve/stability.hpp"

namespace gitcurve {

std::string family_name(Family f) {
    switch (f) {
        case Family::OpenRosary: return "open-rosary";
        case Family::ClosedRosary: return "closed-rosary";
        case Family::BrokenBead: return "broken-bead";
        case Family::TacnodalTail: return "tacnodal-tail";
    }
    return "unknown";
}

void Parametrization::validate() const {
    for (const auto& c : components) {
        if (c.terms.empty()) throw Error("component " + std::to_string(c.component) + " has no terms");
        for (const auto& t : c.terms) {
            if (t.a + t.b != c.degree)
                throw Error("component " + std::to_string(c.component) + " mixes term degrees");
            if (t.coordinate < 0 || t.coordinate >= num_coordinates)
                throw Error("coordinate index " + std::to_string(t.coordinate) + " out of range");
        }
    }
}

const ComponentParam* Parametrization::find(int component) const {
    for (const auto& c : components)
        if (c.component == component) return &c;
    return nullptr;
}

namespace {

ComponentParam conic(int id, std::initializer_list<std::pair<int, std::pair<int, int>>> terms) {
    ComponentParam p{id, 2, {}};
    for (const auto& [coord, ab] : terms) p.terms.push_back({coord, ab.first, ab.second, 1});
    return p;
}

// (s^3 t, s^4, s^2 t^2, s t^3, t^4) on x_k .. x_{k+4}
ComponentParam quartic(int id, int k) {
    return {id, 4, {{k, 3, 1, 1}, {k + 1, 4, 0, 1}, {k + 2, 2, 2, 1}, {k + 3, 1, 3, 1}, {k + 4, 0, 4, 1}}};
}

ComponentParam closing_quartic(int id, int r) {
    return {id, 4, {{0, 1, 3, 1}, {1, 0, 4, 1}, {3 * r - 3, 3, 1, 1}, {3 * r - 2, 4, 0, 1}, {3 * r - 1, 2, 2, 1}}};
}

// a's branch sits at s = 0, b's at t = 0
void link(Configuration& c, Kind k, int a, int b, std::string name) {
    int x = c.graph.join(k, a, b);
    const auto& in = c.graph.intersections[static_cast<std::size_t>(x)];
    c.ends[in.a] = End::SZero;
    c.ends[in.b] = End::TZero;
    c.point_names.push_back(std::move(name));
}

}  // namespace

Configuration build_open_rosary_config(int g, int r) {
    if (g < 4) throw Error("open rosary configuration needs g >= 4");
    if (r < 1 || r > g - 2) throw Error("open rosary needs 1 <= r <= g-2");
    Configuration c;
    c.family = Family::OpenRosary;
    c.mode = Mode::SplitWithD;
    c.genus = g;
    c.r = r;
    c.total_coordinates = 3 * g - 3;
    int d = c.graph.add_component(g - r - 1, 0, "D");
    for (int i = 1; i <= r + 1; ++i) c.graph.add_component(0, 0, "L" + std::to_string(i));
    {
        int x = c.graph.node(d, 1);
        const auto& in = c.graph.intersections[static_cast<std::size_t>(x)];
        c.remainder_points[in.a] = 0;
        c.ends[in.b] = End::TZero;
        c.point_names.push_back("a_0");
    }
    for (int i = 1; i <= r; ++i) link(c, Kind::Tacnode, i, i + 1, "a_" + std::to_string(i));
    {
        int x = c.graph.node(r + 1, d);
        const auto& in = c.graph.intersections[static_cast<std::size_t>(x)];
        c.ends[in.a] = End::SZero;
        c.remainder_points[in.b] = 3 * r;
        c.point_names.push_back("a_" + std::to_string(r + 1));
    }
    c.param.num_coordinates = 3 * r + 1;
    c.param.components.push_back(conic(1, {{0, {2, 0}}, {1, {1, 1}}, {2, {0, 2}}}));
    for (int j = 2; j <= r; ++j) c.param.components.push_back(quartic(j, 3 * j - 5));
    c.param.components.push_back(conic(r + 1, {{3 * r - 2, {1, 1}}, {3 * r - 1, {2, 0}}, {3 * r, {0, 2}}}));
    c.param.validate();
    c.remainder = d;
    c.remainder_genus = g - r - 1;
    c.remainder_coordinates = {0};
    for (int k = 3 * r; k < c.total_coordinates; ++k) c.remainder_coordinates.push_back(k);
    return c;
}

Configuration build_closed_rosary_config(int r) {
    if (r < 3) throw Error("closed rosary configuration needs r >= 3");
    Configuration c;
    c.family = Family::ClosedRosary;
    c.mode = Mode::FullyParametrized;
    c.genus = r + 1;
    c.r = r;
    c.total_coordinates = 3 * r;
    for (int i = 1; i <= r; ++i) c.graph.add_component(0, 0, "L" + std::to_string(i));
    for (int i = 0; i < r; ++i) link(c, Kind::Tacnode, i, (i + 1) % r, "a_" + std::to_string(i + 1));
    c.param.num_coordinates = 3 * r;
    for (int i = 1; i <= r - 1; ++i) c.param.components.push_back(quartic(i - 1, 3 * (i - 1)));
    c.param.components.push_back(closing_quartic(r - 1, r));
    c.param.validate();
    return c;
}

Configuration build_broken_bead_config(int r) {
    if (r < 3 || r % 2 == 0) throw Error("broken bead configuration needs odd r >= 3");
    Configuration c;
    c.family = Family::BrokenBead;
    c.mode = Mode::FullyParametrized;
    c.genus = r + 1;
    c.r = r;
    c.total_coordinates = 3 * r;
    c.graph.add_component(0, 0, "L1'");
    c.graph.add_component(0, 0, "L1''");
    for (int i = 2; i <= r; ++i) c.graph.add_component(0, 0, "L" + std::to_string(i));
    link(c, Kind::Node, 0, 1, "node");
    for (int i = 1; i <= r; ++i) link(c, Kind::Tacnode, i, (i + 1) % (r + 1), "a_" + std::to_string(i));
    c.param.num_coordinates = 3 * r;
    c.param.components.push_back(conic(0, {{0, {1, 1}}, {1, {2, 0}}, {2, {0, 2}}}));
    c.param.components.push_back(conic(1, {{2, {2, 0}}, {3, {1, 1}}, {4, {0, 2}}}));
    for (int i = 2; i <= r - 1; ++i) c.param.components.push_back(quartic(i, 3 * (i - 1)));
    c.param.components.push_back(closing_quartic(r, r));
    c.param.validate();
    return c;
}

Configuration build_tacnodal_tail_config(int g) {
    if (g < 4) throw Error("tacnodal tail configuration needs g >= 4");
    Configuration c;
    c.family = Family::TacnodalTail;
    c.mode = Mode::SplitWithD;
    c.genus = g;
    c.total_coordinates = 3 * g - 3;
    int e = c.graph.add_component(0, 1, "E");
    int rr = c.graph.add_component(0, 0, "R");
    int d = c.graph.add_component(g - 2, 0, "D");
    link(c, Kind::Tacnode, e, rr, "p");
    {
        int x = c.graph.node(rr, d);
        const auto& in = c.graph.intersections[static_cast<std::size_t>(x)];
        c.ends[in.a] = End::SZero;
        c.remainder_points[in.b] = 4;
        c.point_names.push_back("q");
    }
    c.cusp_ends[e] = End::TZero;
    c.param.num_coordinates = 5;
    c.param.components.push_back({e, 4, {{0, 4, 0, 1}, {1, 2, 2, 1}, {2, 1, 3, 1}, {3, 0, 4, 1}}});
    c.param.components.push_back(conic(rr, {{2, {1, 1}}, {3, {2, 0}}, {4, {0, 2}}}));
    c.param.validate();
    c.remainder = d;
    c.remainder_genus = g - 2;
    for (int k = 4; k < c.total_coordinates; ++k) c.remainder_coordinates.push_back(k);
    return c;
}

OneParamSubgroup canonical_1ps(const Configuration& c) {
    OneParamSubgroup rho;
    const int n = c.total_coordinates;
    switch (c.family) {
        case Family::OpenRosary: {
            static const long p[6] = {2, 1, 0, 2, 3, 4};
            for (int i = 0; i < n; ++i) rho.weights.push_back(i <= 3 * c.r ? p[i % 6] : 2);
            break;
        }
        case Family::ClosedRosary: {
            static const long p[6] = {3, 4, 2, 1, 0, 2};
            for (int i = 0; i < n; ++i) rho.weights.push_back(p[i % 6]);
            break;
        }
        case Family::BrokenBead: {
            static const long head[3] = {1, 0, 2};
            static const long p[6] = {1, 0, 2, 3, 4, 2};
            for (int i = 0; i < n; ++i) rho.weights.push_back(i < 3 ? head[i] : p[(i - 3) % 6]);
            break;
        }
        case Family::TacnodalTail: {
            static const long head[4] = {0, 2, 3, 4};
            for (int i = 0; i < n; ++i) rho.weights.push_back(i < 4 ? head[i] : 2);
            break;
        }
        default: throw Error("unknown family");
    }
    return rho;
}

namespace {

BranchRef end_on(const Intersection& x, int component) { return x.a.component == component ? x.a : x.b; }

}  // namespace

std::vector<GraphTorusGenerator> torus_generators(const CurveGraph& g) {
    std::vector<GraphTorusGenerator> out;
    for (const auto& r : find_rosaries(g)) {
        const auto n = r.beads.size();
        if (!r.closed && n >= 2) {
            GraphTorusGenerator gen;
            for (std::size_t j = 0; j < n; ++j) {
                long eps = (j % 2 == 0) ? -1 : 1;
                std::size_t inX = j == 0 ? r.attachments.front() : r.links[j - 1];
                std::size_t outX = j + 1 == n ? r.attachments.back() : r.links[j];
                gen.branch_weight[end_on(g.intersections[inX], r.beads[j])] = eps;
                gen.branch_weight[end_on(g.intersections[outX], r.beads[j])] = -eps;
            }
            gen.description = "open rosary of length " + std::to_string(n);
            out.push_back(gen);
        }
        if (r.closed && r.broken_positions.empty() && n % 2 == 0) {
            GraphTorusGenerator gen;
            for (std::size_t j = 0; j < n; ++j) {
                long eps = (j % 2 == 0) ? -1 : 1;
                std::size_t inX = r.links[(j + n - 1) % n];
                gen.branch_weight[end_on(g.intersections[inX], r.beads[j])] = eps;
                gen.branch_weight[end_on(g.intersections[r.links[j]], r.beads[j])] = -eps;
            }
            gen.description = "closed rosary of length " + std::to_string(n);
            out.push_back(gen);
        }
    }
    return out;
}

OneParamSubgroup coordinate_weights(const Configuration& c, const std::map<BranchRef, long>& bw) {
    const int n = c.total_coordinates;
    // edges: r_j = r_k + offset
    std::vector<std::vector<std::pair<int, long>>> adj(static_cast<std::size_t>(n));
    auto edge = [&](int k, int j, long off) {
        adj[static_cast<std::size_t>(k)].push_back({j, off});
        adj[static_cast<std::size_t>(j)].push_back({k, -off});
    };
    for (const auto& p : c.param.components) {
        std::optional<long> w;
        for (const auto& [br, weight] : bw) {
            if (br.component != p.component) continue;
            long wt = c.ends.at(br) == End::TZero ? weight : -weight;
            if (w && *w != wt) throw Error("branch weights on component " + std::to_string(p.component) + " disagree");
            w = wt;
        }
        long wt = w.value_or(0);
        const auto& base = p.terms.front();
        for (const auto& t : p.terms) edge(base.coordinate, t.coordinate, wt * (t.b - base.b));
    }
    if (c.remainder) {
        for (const auto& [br, weight] : bw)
            if (br.component == *c.remainder && weight != 0) throw Error("cannot act on the abstract remainder");
        for (int k : c.remainder_coordinates) edge(c.remainder_coordinates.front(), k, 0);
    }
    std::vector<std::optional<long>> val(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (val[static_cast<std::size_t>(s)]) continue;
        val[static_cast<std::size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int k = q.front();
            q.pop_front();
            for (auto [j, off] : adj[static_cast<std::size_t>(k)]) {
                long v = *val[static_cast<std::size_t>(k)] + off;
                auto& slot = val[static_cast<std::size_t>(j)];
                if (!slot) {
                    slot = v;
                    q.push_back(j);
                } else if (*slot != v) {
                    throw Error("branch weights are not induced by a diagonal action");
                }
            }
        }
    }
    OneParamSubgroup rho;
    for (auto& v : val) rho.weights.push_back(*v);
    long lo = *std::min_element(rho.weights.begin(), rho.weights.end());
    for (auto& v : rho.weights) v -= lo;
    return rho;
}

std::vector<OneParamSubgroup> torus_generators(const Configuration& c) {
    std::vector<OneParamSubgroup> out;
    for (const auto& gen : torus_generators(c.graph)) out.push_back(coordinate_weights(c, gen.branch_weight));
    return out;
}

namespace {

void check_length(const Configuration& c, const OneParamSubgroup& rho) {
    if (static_cast<int>(rho.weights.size()) != c.total_coordinates)
        throw Error("weight vector has " + std::to_string(rho.weights.size()) + " entries, expected " +
                    std::to_string(c.total_coordinates));
}

Rational local_weight(const Configuration& c, const OneParamSubgroup& rho, int component, End e) {
    const auto* p = c.param.find(component);
    if (!p) throw Error("component " + std::to_string(component) + " is not parametrized");
    auto local = [&](const Term& t) { return e == End::TZero ? t.b : t.a; };
    const Term* base = nullptr;
    for (const auto& t : p->terms)
        if (local(t) == 0) base = &t;
    if (!base) throw Error("branch point is not a coordinate point");
    std::optional<Rational> w;
    for (const auto& t : p->terms) {
        if (&t == base) continue;
        Rational q(rho.weights[static_cast<std::size_t>(t.coordinate)] - rho.weights[static_cast<std::size_t>(base->coordinate)],
                   local(t));
        q.canonicalize();
        if (w && *w != q) throw Error("rho is not an automorphism of component " + std::to_string(component));
        w = q;
    }
    return w.value_or(0);
}

}  // namespace

Rational branch_weight(const Configuration& c, const OneParamSubgroup& rho, const BranchRef& br) {
    check_length(c, rho);
    if (c.remainder && br.component == *c.remainder) {
        for (int k : c.remainder_coordinates)
            if (rho.weights[static_cast<std::size_t>(k)] != rho.weights[static_cast<std::size_t>(c.remainder_coordinates.front())])
                throw Error("rho is not an automorphism of the remainder D");
        return 0;
    }
    auto it = c.ends.find(br);
    if (it == c.ends.end()) throw Error("unknown branch");
    return local_weight(c, rho, br.component, it->second);
}

Rational cusp_weight(const Configuration& c, const OneParamSubgroup& rho, int component) {
    check_length(c, rho);
    auto it = c.cusp_ends.find(component);
    if (it == c.cusp_ends.end()) throw Error("component " + std::to_string(component) + " carries no cusp point");
    return local_weight(c, rho, component, it->second);
}

void check_automorphism(const Configuration& c, const OneParamSubgroup& rho) {
    check_length(c, rho);
    for (const auto& p : c.param.components) local_weight(c, rho, p.component, End::TZero);
    if (c.remainder) branch_weight(c, rho, BranchRef{*c.remainder, 0});
}

nlohmann::json to_json(const OneParamSubgroup& rho) { return rho.weights; }

nlohmann::json to_json(const Configuration& c) {
    nlohmann::json j;
    j["family"] = family_name(c.family);
    j["mode"] = c.mode == Mode::FullyParametrized ? "fully-parametrized" : "split";
    j["genus"] = c.genus;
    if (c.family != Family::TacnodalTail) j["r"] = c.r;
    j["coordinates"] = c.total_coordinates;
    j["graph"] = to_json(c.graph);
    j["points"] = c.point_names;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& p : c.param.components) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : p.terms)
            terms.push_back({{"x", t.coordinate}, {"s", t.a}, {"t", t.b}, {"coefficient", to_string(t.coefficient)}});
        comps.push_back({{"component", p.component}, {"degree", p.degree}, {"terms", terms}});
    }
    j["parametrization"] = {{"coordinates", c.param.num_coordinates}, {"components", comps}};
    if (c.remainder) {
        j["remainder"] = {{"component", *c.remainder},
                          {"genus", c.remainder_genus},
                          {"coordinates", c.remainder_coordinates}};
    }
    return j;
}

}  // namespace gitcurve
