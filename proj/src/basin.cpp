#include "gitcurve/basin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gitcurve/stability.hpp"

namespace gitcurve {

namespace {

std::string intersection_name(const CurveGraph& g, std::size_t x) {
    const auto& in = g.intersections[x];
    return kind_name(in.kind) + "(" + std::to_string(in.a.component) + "," + std::to_string(in.b.component) + ")";
}

VersalWeights from_branches(const SingularityRef& ref, Kind k, const Rational& w1, const Rational& w2) {
    VersalWeights v{ref, {}};
    if (k == Kind::Node) {
        v.parameter_weights = {w1 + w2};
    } else {
        if (w1 != w2) throw Error("incompatible action at " + ref.name + ": branch weights differ");
        v.parameter_weights = {4 * w1, 3 * w1, 2 * w1};
    }
    return v;
}

VersalWeights cusp_versal(const SingularityRef& ref, const Rational& u) { return {ref, {4 * u, 6 * u}}; }

bool all_positive(const VersalWeights& v) {
    return std::all_of(v.parameter_weights.begin(), v.parameter_weights.end(), [](const Rational& q) { return sign(q) > 0; });
}

bool all_zero(const std::vector<BasinEntry>& es) {
    for (const auto& e : es)
        for (const auto& q : e.versal.parameter_weights)
            if (sign(q) != 0) return false;
    return true;
}

BasinReport assemble(const CurveGraph& g, std::vector<VersalWeights> vs) {
    BasinReport rep;
    for (auto& v : vs) rep.entries.push_back({v, all_positive(v) ? Fate::Smoothable : Fate::Frozen});
    if (all_zero(rep.entries)) throw Error("rho acts trivially on every versal parameter");
    std::vector<const BasinEntry*> sm;
    for (const auto& e : rep.entries)
        if (e.fate == Fate::Smoothable) sm.push_back(&e);
    auto build = [&](std::uint64_t mask) {
        std::vector<std::size_t> xs;
        std::vector<int> cs;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sm.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& ref = sm[i]->versal.ref;
            if (ref.kind == SingularityKind::Cusp) cs.push_back(ref.component);
            else xs.push_back(ref.intersection);
            names.push_back(ref.name);
        }
        return std::make_pair(smooth(g, xs, cs), names);
    };
    std::uint64_t full = sm.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sm.size()) - 1;
    rep.generic = build(full).first;
    if (sm.size() > 10) {
        rep.partial_truncated = true;
        return rep;
    }
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        auto [h, names] = build(mask);
        rep.partial.push_back(std::move(h));
        rep.partial_names.push_back(std::move(names));
    }
    return rep;
}

BranchRef far_end(const Intersection& x, int component) { return x.a.component == component ? x.b : x.a; }

void add_intersection(CurveGraph& g, Kind k, BranchRef a, BranchRef b) { g.intersections.push_back({k, a, b}); }

BranchRef fresh(CurveGraph& g, int id) { return {id, g.next_slot(id)}; }

void erase_intersections(CurveGraph& g, std::vector<std::size_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) g.intersections.erase(g.intersections.begin() + static_cast<long>(*it));
}

std::vector<std::size_t> incident(const CurveGraph& g, int id) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.intersections.size(); ++i)
        if (g.intersections[i].touches(id)) out.push_back(i);
    return out;
}

// outer branch of each boundary intersection of a subcurve
std::vector<std::pair<Kind, BranchRef>> outer_ends(const CurveGraph& g, const ComponentSet& sub) {
    std::vector<std::pair<Kind, BranchRef>> out;
    for (std::size_t x : boundary(g, sub)) {
        const auto& in = g.intersections[x];
        out.push_back({in.kind, contains(sub, in.a.component) ? in.b : in.a});
    }
    return out;
}

}  // namespace

std::vector<SingularityRef> singularities(const Configuration& c) {
    std::vector<SingularityRef> out;
    for (std::size_t i = 0; i < c.graph.intersections.size(); ++i) {
        SingularityRef s;
        s.kind = c.graph.intersections[i].kind == Kind::Node ? SingularityKind::Node : SingularityKind::Tacnode;
        s.intersection = i;
        s.name = i < c.point_names.size() ? c.point_names[i] : intersection_name(c.graph, i);
        out.push_back(s);
    }
    for (const auto& [comp, e] : c.cusp_ends) {
        (void)e;
        SingularityRef s;
        s.kind = SingularityKind::Cusp;
        s.component = comp;
        s.name = "cusp(" + std::to_string(comp) + ")";
        out.push_back(s);
    }
    return out;
}

VersalWeights versal_weights(const Configuration& c, const OneParamSubgroup& rho, const SingularityRef& s) {
    if (s.kind == SingularityKind::Cusp) return cusp_versal(s, cusp_weight(c, rho, s.component));
    const auto& x = c.graph.intersections.at(s.intersection);
    return from_branches(s, x.kind, branch_weight(c, rho, x.a), branch_weight(c, rho, x.b));
}

BasinReport basin_membership(const Configuration& c, const OneParamSubgroup& rho) {
    check_automorphism(c, rho);
    std::vector<VersalWeights> vs;
    for (const auto& s : singularities(c)) vs.push_back(versal_weights(c, rho, s));
    return assemble(c.graph, vs);
}

std::vector<VersalWeights> versal_weights(const CurveGraph& g, const std::vector<GraphTorusGenerator>& gens,
                                          const std::vector<long>& exponents) {
    if (exponents.size() != gens.size())
        throw Error("expected " + std::to_string(gens.size()) + " exponents, got " + std::to_string(exponents.size()));
    auto weight = [&](const BranchRef& br) {
        Rational w = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto it = gens[i].branch_weight.find(br);
            if (it != gens[i].branch_weight.end()) w += Rational(it->second * exponents[i]);
        }
        return w;
    };
    std::vector<VersalWeights> out;
    for (std::size_t i = 0; i < g.intersections.size(); ++i) {
        const auto& x = g.intersections[i];
        SingularityRef s;
        s.kind = x.kind == Kind::Node ? SingularityKind::Node : SingularityKind::Tacnode;
        s.intersection = i;
        s.name = intersection_name(g, i);
        out.push_back(from_branches(s, x.kind, weight(x.a), weight(x.b)));
    }
    for (const auto& c : g.components)
        for (int k = 0; k < c.cusp_count; ++k) {
            SingularityRef s;
            s.kind = SingularityKind::Cusp;
            s.component = c.id;
            s.name = "cusp(" + std::to_string(c.id) + ")";
            out.push_back(cusp_versal(s, 0));
        }
    return out;
}

BasinReport basin_membership(const CurveGraph& g, const std::vector<GraphTorusGenerator>& gens,
                             const std::vector<long>& exponents) {
    return assemble(g, versal_weights(g, gens, exponents));
}

CurveGraph smooth(const CurveGraph& g, const std::vector<std::size_t>& xs, const std::vector<int>& cusps) {
    std::set<std::size_t> chosen(xs.begin(), xs.end());
    for (std::size_t x : chosen)
        if (x >= g.intersections.size()) throw Error("intersection index out of range");
    std::map<int, int> parent;
    for (int id : g.ids()) parent[id] = id;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (std::size_t x : chosen) {
        int a = find(g.intersections[x].a.component), b = find(g.intersections[x].b.component);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, Component> merged;
    std::map<int, int> members;
    for (const auto& c : g.components) {
        int root = find(c.id);
        auto [it, fresh_root] = merged.try_emplace(root, Component{root, 0, 0, {}});
        it->second.geometric_genus += c.geometric_genus;
        it->second.cusp_count += c.cusp_count;
        if (!c.label.empty()) it->second.label += (it->second.label.empty() ? "" : "+") + c.label;
        ++members[root];
    }
    for (std::size_t x : chosen) merged[find(g.intersections[x].a.component)].geometric_genus += delta(g.intersections[x].kind);
    for (auto& [root, c] : merged) c.geometric_genus -= members[root] - 1;
    for (int id : cusps) {
        auto& c = merged.at(find(id));
        if (c.cusp_count == 0) throw Error("component " + std::to_string(id) + " has no cusp to smooth");
        --c.cusp_count;
        ++c.geometric_genus;
    }
    CurveGraph h;
    for (auto& [root, c] : merged) h.components.push_back(c);
    std::map<int, int> slots;
    for (std::size_t i = 0; i < g.intersections.size(); ++i) {
        if (chosen.count(i)) continue;
        const auto& x = g.intersections[i];
        int a = find(x.a.component), b = find(x.b.component);
        h.intersections.push_back({x.kind, {a, slots[a]++}, {b, slots[b]++}});
    }
    for (const auto& m : g.marks) h.marks.push_back({find(m.component), m.label});
    return h;
}

CurveGraph contract_unstable_rational(const CurveGraph& g) {
    CurveGraph h = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : h.components) {
            if (!is_smooth_rational(h, c.id)) continue;
            if (std::any_of(h.marks.begin(), h.marks.end(), [&](const Mark& m) { return m.component == c.id; })) continue;
            auto inc = incident(h, c.id);
            bool nodal = std::all_of(inc.begin(), inc.end(), [&](std::size_t x) {
                return h.intersections[x].kind == Kind::Node && !h.intersections[x].is_self();
            });
            if (!nodal || inc.size() > 2 || h.components.size() == 1) continue;
            int id = c.id;
            std::vector<BranchRef> outer;
            for (std::size_t x : inc) outer.push_back(far_end(h.intersections[x], id));
            erase_intersections(h, inc);
            h.remove_components({id});
            if (outer.size() == 2) add_intersection(h, Kind::Node, outer[0], outer[1]);
            changed = true;
            break;
        }
    }
    return h;
}

CurveGraph pseudo_stabilize(const CurveGraph& g) {
    CurveGraph h = g;
    std::vector<std::size_t> tacs;
    for (std::size_t i = 0; i < h.intersections.size(); ++i)
        if (h.intersections[i].kind == Kind::Tacnode) tacs.push_back(i);
    std::vector<Intersection> old;
    for (std::size_t x : tacs) old.push_back(h.intersections[x]);
    erase_intersections(h, tacs);
    for (const auto& x : old) {
        int e = h.add_component(1, 0, "E");
        add_intersection(h, Kind::Node, x.a, {e, 0});
        add_intersection(h, Kind::Node, {e, 1}, x.b);
    }
    return contract_unstable_rational(h);
}

namespace {

// replace a subcurve with k chained copies of a tacnodal rosary, attached at its two boundary points
void replace_with_rosaries(CurveGraph& h, const ComponentSet& sub, int copies, int beads) {
    auto ends = outer_ends(h, sub);
    if (ends.size() != 2) throw Error("subcurve does not have two boundary points");
    auto bd = boundary(h, sub);
    erase_intersections(h, bd);
    h.remove_components(sub);
    std::vector<int> first, last;
    int prev = -1;
    for (int k = 0; k < copies; ++k) {
        int head = -1, cur = -1;
        for (int b = 0; b < beads; ++b) {
            int id = h.add_component(0, 0, "L");
            if (cur >= 0) add_intersection(h, Kind::Tacnode, fresh(h, cur), fresh(h, id));
            else head = id;
            cur = id;
        }
        if (prev >= 0) add_intersection(h, Kind::Node, fresh(h, prev), fresh(h, head));
        else first.push_back(head);
        prev = cur;
    }
    add_intersection(h, Kind::Node, ends[0].second, fresh(h, first.front()));
    add_intersection(h, Kind::Node, fresh(h, prev), ends[1].second);
}

// bead sets of maximal chains of length-three open rosaries joined end to end by nodes
std::vector<ComponentSet> rosary3_chains(const CurveGraph& g) {
    std::vector<ComponentSet> sets;
    for (const auto& r : find_rosaries(g))
        if (!r.closed && r.length == 3) sets.push_back(make_set(r.beads));
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < sets.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < sets.size() && !merged; ++j)
                for (const auto& x : g.intersections) {
                    bool ab = contains(sets[i], x.a.component) && contains(sets[j], x.b.component);
                    bool ba = contains(sets[j], x.a.component) && contains(sets[i], x.b.component);
                    if (x.kind == Kind::Node && (ab || ba)) {
                        ComponentSet u = sets[i];
                        u.insert(u.end(), sets[j].begin(), sets[j].end());
                        sets[i] = make_set(u);
                        sets.erase(sets.begin() + static_cast<long>(j));
                        merged = true;
                        break;
                    }
                }
    }
    return sets;
}

bool in_rosary_chain(const std::vector<ComponentSet>& chains, const ComponentSet& sub) {
    return std::any_of(chains.begin(), chains.end(), [&](const ComponentSet& c) { return subset_of(sub, c); });
}

bool pure_closed_rosary(const CurveGraph& g, int* length) {
    for (const auto& r : find_rosaries(g))
        if (r.closed && r.broken_positions.empty()) {
            if (length) *length = r.length;
            return true;
        }
    return false;
}

}  // namespace

bool is_c_closed_orbit(const CurveGraph& g) {
    auto f = classify(g);
    if (!f.c_semistable) return false;
    if (f.c_stable) return true;
    auto rs = find_rosaries(g);
    for (std::size_t i = 0; i < g.intersections.size(); ++i) {
        if (g.intersections[i].kind != Kind::Tacnode) continue;
        bool covered = false;
        for (const auto& r : rs)
            if (!r.closed && std::find(r.links.begin(), r.links.end(), i) != r.links.end()) covered = true;
        if (!covered) return false;
    }
    std::set<int> paired;
    for (const auto& r : rs)
        if (!r.closed && r.length == 2) paired.insert(r.beads.begin(), r.beads.end());
    for (const auto& r : rs) {
        // a cycle of 2-rosaries also reads as a closed rosary with every bead broken
        bool split = std::all_of(r.beads.begin(), r.beads.end(), [&](int b) { return paired.count(b) > 0; });
        if (r.closed ? !split : r.length != 2) return false;
    }
    for (const auto& b : find_elliptic_bridges(g)) {
        bool match = false;
        for (const auto& r : rs)
            if (make_set(r.beads) == b) match = true;
        if (!match) return false;
    }
    return true;
}

bool is_h_closed_orbit(const CurveGraph& g) {
    auto f = classify(g);
    if (!f.h_semistable) return false;
    if (f.h_stable) return true;
    int len = 0;
    if (pure_closed_rosary(g, &len) && len % 2 == 0) return true;
    auto chains = rosary3_chains(g);
    for (const auto& w : find_weak_elliptic_chains(g))
        if (!in_rosary_chain(chains, w.support)) return false;
    return true;
}

CurveGraph c_closed_orbit_rep(const CurveGraph& g) {
    auto f = classify(g);
    if (!f.c_semistable || f.c_stable) throw Error("c-stable or unstable input");
    CurveGraph h = pseudo_stabilize(g);
    auto bridges = find_elliptic_bridges(h);
    for (std::size_t i = 0; i < bridges.size(); ++i)
        for (std::size_t j = i + 1; j < bridges.size(); ++j)
            if (overlaps(bridges[i], bridges[j])) throw Error("elliptic bridges overlap");
    for (const auto& b : bridges) replace_with_rosaries(h, b, 1, 2);
    return h;
}

CurveGraph h_closed_orbit_rep(const CurveGraph& g) {
    auto f = classify(g);
    if (!f.h_semistable || f.h_stable) throw Error("h-stable or not h-semistable input");
    if (is_h_closed_orbit(g)) return g;
    auto weak = find_weak_elliptic_chains(g);
    for (const auto& w : weak) {
        if (!w.closed) continue;
        CurveGraph h;
        int n = 2 * w.length;
        for (int i = 0; i < n; ++i) h.add_component(0, 0, "L");
        for (int i = 0; i < n; ++i) h.tacnode(i, (i + 1) % n);
        return h;
    }
    auto chains = rosary3_chains(g);
    std::vector<const ChainRecord*> cand;
    for (const auto& w : weak)
        if (!in_rosary_chain(chains, w.support)) cand.push_back(&w);
    std::sort(cand.begin(), cand.end(), [](const ChainRecord* a, const ChainRecord* b) {
        if (a->support.size() != b->support.size()) return a->support.size() > b->support.size();
        return a->support < b->support;
    });
    std::vector<const ChainRecord*> chosen;
    for (const auto* c : cand) {
        bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const ChainRecord* d) { return overlaps(c->support, d->support); });
        if (!clash) chosen.push_back(c);
    }
    CurveGraph h = g;
    for (const auto* c : chosen) {
        // attachments become nodes
        for (std::size_t x : boundary(h, c->support)) h.intersections[x].kind = Kind::Node;
        replace_with_rosaries(h, c->support, c->length, 3);
    }
    return contract_unstable_rational(h);
}

std::vector<CurveGraph> enumerate_c_replacements(const CurveGraph& g) {
    auto f = classify(g);
    if (!f.pseudostable) throw Error("input is not pseudostable");
    auto bridges = find_elliptic_bridges(g);
    for (std::size_t i = 0; i < bridges.size(); ++i)
        for (std::size_t j = i + 1; j < bridges.size(); ++j)
            if (overlaps(bridges[i], bridges[j])) throw Error("elliptic bridges overlap");
    if (bridges.size() > 16) throw Error("too many elliptic bridges");
    auto which = [&](int id) {
        for (std::size_t i = 0; i < bridges.size(); ++i)
            if (contains(bridges[i], id)) return static_cast<int>(i);
        return -1;
    };
    std::vector<CurveGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bridges.size()); ++mask) {
        auto picked = [&](int b) { return b >= 0 && (mask >> b & 1); };
        CurveGraph h = g;
        std::vector<std::size_t> between;
        for (std::size_t i = 0; i < h.intersections.size(); ++i) {
            const auto& x = h.intersections[i];
            int ba = which(x.a.component), bb = which(x.b.component);
            if (x.kind == Kind::Node && ba != bb && picked(ba) && picked(bb)) between.push_back(i);
        }
        std::vector<Intersection> old;
        for (std::size_t x : between) old.push_back(h.intersections[x]);
        erase_intersections(h, between);
        for (const auto& x : old) {
            int p = h.add_component(0, 0, "P");
            add_intersection(h, Kind::Node, x.a, {p, 0});
            add_intersection(h, Kind::Node, {p, 1}, x.b);
        }
        for (std::size_t b = 0; b < bridges.size(); ++b) {
            if (!picked(static_cast<int>(b))) continue;
            auto ends = outer_ends(h, bridges[b]);
            if (ends.size() != 2) throw Error("elliptic bridge without two boundary points");
            erase_intersections(h, boundary(h, bridges[b]));
            h.remove_components(bridges[b]);
            add_intersection(h, Kind::Tacnode, ends[0].second, ends[1].second);
        }
        out.push_back(std::move(h));
    }
    return out;
}

nlohmann::json to_json(const BasinReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& q : e.versal.parameter_weights) w.push_back(to_string(q));
        static const char* kinds[] = {"node", "tacnode", "cusp"};
        entries.push_back({{"singularity", e.versal.ref.name},
                           {"kind", kinds[static_cast<int>(e.versal.ref.kind)]},
                           {"weights", w},
                           {"fate", e.fate == Fate::Smoothable ? "smoothable" : "frozen"}});
    }
    nlohmann::json j{{"entries", entries}, {"generic", to_json(r.generic)}, {"generic_summary", describe(r.generic)}};
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < r.partial.size(); ++i)
        parts.push_back({{"smoothed", r.partial_names[i]}, {"curve", describe(r.partial[i])}});
    j["sublattice"] = parts;
    j["sublattice_truncated"] = r.partial_truncated;
    return j;
}

}  // namespace gitcurve
