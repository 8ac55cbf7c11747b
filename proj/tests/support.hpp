#pragma once

#include <random>
#include <vector>

#include "gitcurve/curve_graph.hpp"

namespace testsupport {

using gitcurve::CurveGraph;
using gitcurve::Kind;

// connected graph with n components; genus, cusps and extra edges drawn at random
inline CurveGraph random_graph(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> genus(0, 2), coin(0, 9), pick(0, n - 1);
    CurveGraph g;
    for (int i = 0; i < n; ++i) g.add_component(genus(rng), coin(rng) == 0 ? 1 : 0);
    auto kind = [&] { return coin(rng) < 3 ? Kind::Tacnode : Kind::Node; };
    for (int i = 1; i < n; ++i) g.join(kind(), std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < extra; ++k) g.join(kind(), pick(rng), pick(rng));
    return g;
}

// genus >= 2 corpus of the requested size
inline std::vector<CurveGraph> corpus(unsigned seed, int count, int max_components) {
    std::mt19937 rng(seed);
    std::vector<CurveGraph> out;
    while (static_cast<int>(out.size()) < count) {
        int n = std::uniform_int_distribution<int>(1, max_components)(rng);
        auto g = random_graph(rng, n);
        int pa = 1 - static_cast<int>(g.components.size());
        for (const auto& c : g.components) pa += c.geometric_genus + c.cusp_count;
        for (const auto& x : g.intersections) pa += x.kind == Kind::Node ? 1 : 2;
        if (pa >= 2) out.push_back(g);
    }
    return out;
}

struct Brute {
    const CurveGraph& g;
    int n;
    explicit Brute(const CurveGraph& graph) : g(graph), n(static_cast<int>(graph.components.size())) {}

    int idx(int id) const {
        for (int i = 0; i < n; ++i)
            if (g.components[static_cast<std::size_t>(i)].id == id) return i;
        return -1;
    }
    bool in(unsigned s, int id) const { return s >> idx(id) & 1u; }

    bool connected(unsigned s) const {
        if (!s) return false;
        unsigned seen = s & (~s + 1);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& x : g.intersections) {
                int a = idx(x.a.component), b = idx(x.b.component);
                if (!(s >> a & 1u) || !(s >> b & 1u)) continue;
                if ((seen >> a & 1u) != (seen >> b & 1u)) {
                    seen |= 1u << a | 1u << b;
                    grew = true;
                }
            }
        }
        return seen == s;
    }
    int genus(unsigned s) const {
        int pa = 1;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1u) pa += g.components[static_cast<std::size_t>(i)].geometric_genus + g.components[static_cast<std::size_t>(i)].cusp_count - 1;
        for (const auto& x : g.intersections)
            if (in(s, x.a.component) && in(s, x.b.component)) pa += x.kind == Kind::Node ? 1 : 2;
        return pa;
    }
    std::vector<std::size_t> boundary(unsigned s) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < g.intersections.size(); ++i)
            if (in(s, g.intersections[i].a.component) != in(s, g.intersections[i].b.component)) out.push_back(i);
        return out;
    }
    bool has_tacnode() const {
        for (const auto& x : g.intersections)
            if (x.kind == Kind::Tacnode) return true;
        return false;
    }
    // genus-one connected proper subcurves meeting the rest in k points, all nodes
    int count_genus_one(std::size_t k, bool nodes_only) const {
        int c = 0;
        unsigned full = (1u << n) - 1;
        for (unsigned s = 1; s < full; ++s) {
            if (!connected(s) || genus(s) != 1) continue;
            auto b = boundary(s);
            if (b.size() != k) continue;
            bool ok = true;
            if (nodes_only)
                for (auto x : b) ok = ok && g.intersections[x].kind == Kind::Node;
            c += ok;
        }
        return c;
    }
    int min_genus_one_points() const {
        int best = 1000;
        unsigned full = (1u << n) - 1;
        for (unsigned s = 1; s < full; ++s)
            if (connected(s) && genus(s) == 1) best = std::min(best, static_cast<int>(boundary(s).size()));
        return best;
    }
};

}  // namespace testsupport
