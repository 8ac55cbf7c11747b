#include "gitcurve/stability.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "gitcurve/basin.hpp"

namespace gitcurve {

namespace {

struct Piece {
    Mask mask;
    std::size_t x1, x2;
};

std::vector<Piece> two_ended_pieces(const SubcurveIndex& I) {
    std::vector<Piece> out;
    for (Mask m : I.connected_subsets()) {
        if (I.genus(m) != 1) continue;
        auto b = I.boundary(m);
        if (b.size() == 2) out.push_back({m, b[0], b[1]});
    }
    return out;
}

bool end_inside(const SubcurveIndex& I, std::size_t x, bool second, Mask m) {
    return m >> I.end_index(x, second) & 1;
}

// component of x whose end lies outside m (x must be a boundary intersection)
std::size_t outer_end(const SubcurveIndex& I, std::size_t x, Mask m) {
    return end_inside(I, x, false, m) ? I.end_index(x, true) : I.end_index(x, false);
}

// omega_{C'}(p+q) ample on the chain support; p and q sit at the ends of the
// attachment intersections lying inside the support
bool chain_ample(const SubcurveIndex& I, Mask u, const std::vector<std::size_t>& attachments,
                 std::optional<std::size_t> closing) {
    const auto& g = I.graph();
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (!(u >> i & 1)) continue;
        const auto& c = g.components[i];
        int pa = c.geometric_genus + c.cusp_count;
        int contact = 0, marks = 0;
        for (std::size_t x = 0; x < g.intersections.size(); ++x) {
            std::size_t a = I.end_index(x, false), b = I.end_index(x, true);
            bool isAttachment = std::find(attachments.begin(), attachments.end(), x) != attachments.end();
            if (isAttachment || (closing && *closing == x)) {
                marks += (a == i && (u >> a & 1)) + (b == i && (u >> b & 1));
                continue;
            }
            if (!(u >> a & 1) || !(u >> b & 1)) continue;
            if (a == i && b == i) pa += delta(g.intersections[x].kind);
            else if (a == i || b == i) contact += delta(g.intersections[x].kind);
        }
        if (2 * pa - 2 + contact + marks <= 0) return false;
    }
    return true;
}

struct ChainSearch {
    const SubcurveIndex& I;
    std::vector<Piece> pieces;
    std::map<std::tuple<bool, bool, std::vector<ComponentSet>, std::vector<std::size_t>>, ChainRecord> found;

    Kind kind(std::size_t x) const { return I.graph().intersections[x].kind; }

    void record(const std::vector<Mask>& seq, Mask u, std::vector<std::size_t> att, bool closed) {
        bool weak;
        if (closed) {
            weak = kind(att[0]) == Kind::Tacnode;
        } else {
            int nodes = (kind(att[0]) == Kind::Node) + (kind(att[1]) == Kind::Node);
            if (nodes == 0) return;
            weak = nodes == 1;
        }
        if (!chain_ample(I, u, att, closed ? std::optional<std::size_t>(att[0]) : std::nullopt)) return;
        ChainRecord rec;
        rec.closed = closed;
        rec.weak = weak;
        rec.length = static_cast<int>(seq.size());
        for (Mask m : seq) rec.links.push_back(I.ids(m));
        rec.attachments = att;
        rec.support = I.ids(u);
        if (rec.links.back() < rec.links.front()) {
            std::reverse(rec.links.begin(), rec.links.end());
            std::reverse(rec.attachments.begin(), rec.attachments.end());
        }
        auto sortedLinks = rec.links;
        std::sort(sortedLinks.begin(), sortedLinks.end());
        std::vector<std::size_t> keyAtt;
        if (!(closed && weak)) {
            keyAtt = att;
            std::sort(keyAtt.begin(), keyAtt.end());
        }
        found.emplace(std::make_tuple(closed, weak, sortedLinks, keyAtt), rec);
    }

    void walk(std::vector<Mask>& seq, Mask u, std::size_t xp, std::size_t y) {
        bool xpOut = !(end_inside(I, xp, false, u) && end_inside(I, xp, true, u));
        bool yOut = !(end_inside(I, y, false, u) && end_inside(I, y, true, u));
        if (y == xp) {
            if (seq.size() >= 2) record(seq, u, {xp}, true);
            return;
        }
        if (xpOut && yOut) record(seq, u, {xp, y}, false);
        if (kind(y) != Kind::Tacnode || !yOut) return;
        std::size_t next = outer_end(I, y, u);
        for (const auto& p : pieces) {
            if (!(p.mask >> next & 1) || (p.mask & u)) continue;
            std::size_t other;
            if (p.x1 == y) other = p.x2;
            else if (p.x2 == y) other = p.x1;
            else continue;
            seq.push_back(p.mask);
            walk(seq, u | p.mask, xp, other);
            seq.pop_back();
        }
    }

    void run() {
        for (const auto& p : pieces) {
            for (int side = 0; side < 2; ++side) {
                std::size_t xp = side ? p.x2 : p.x1, y = side ? p.x1 : p.x2;
                std::vector<Mask> seq{p.mask};
                walk(seq, p.mask, xp, y);
            }
        }
        // closed chains of length one: cutting one intersection leaves a genus-one curve
        const auto& g = I.graph();
        for (std::size_t x = 0; x < g.intersections.size(); ++x) {
            SubcurveIndex cut(g, 63, x);
            if (!cut.connected(cut.all()) || cut.genus(cut.all()) != 1) continue;
            std::vector<Mask> seq{cut.all()};
            ChainSearch sub{cut, {}, {}};
            sub.record(seq, cut.all(), {x}, true);
            for (auto& kv : sub.found) found.insert(kv);
        }
    }
};

std::vector<ChainRecord> all_chains(const CurveGraph& g, std::size_t cap) {
    SubcurveIndex I(g, cap);
    ChainSearch s{I, two_ended_pieces(I), {}};
    s.run();
    std::vector<ChainRecord> out;
    for (auto& [k, v] : s.found) out.push_back(v);
    return out;
}

}  // namespace

std::vector<ComponentSet> genus_one_subcurves(const CurveGraph& g, std::size_t cap) {
    SubcurveIndex I(g, cap);
    std::vector<ComponentSet> out;
    for (Mask m : I.connected_subsets())
        if (I.genus(m) == 1) out.push_back(I.ids(m));
    std::sort(out.begin(), out.end());
    return out;
}

static std::vector<ComponentSet> attached_genus_one(const CurveGraph& g, std::size_t cap, std::size_t nodes) {
    SubcurveIndex I(g, cap);
    std::vector<ComponentSet> out;
    for (Mask m : I.connected_subsets()) {
        if (I.genus(m) != 1) continue;
        auto b = I.boundary(m);
        if (b.size() != nodes) continue;
        bool allNodes = std::all_of(b.begin(), b.end(), [&](std::size_t x) { return g.intersections[x].kind == Kind::Node; });
        if (allNodes) out.push_back(I.ids(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ComponentSet> find_elliptic_tails(const CurveGraph& g, std::size_t cap) {
    return attached_genus_one(g, cap, 1);
}

std::vector<ComponentSet> find_elliptic_bridges(const CurveGraph& g, std::size_t cap) {
    return attached_genus_one(g, cap, 2);
}

std::vector<ChainRecord> find_elliptic_chains(const CurveGraph& g, std::size_t cap) {
    auto all = all_chains(g, cap);
    std::erase_if(all, [](const ChainRecord& c) { return c.weak; });
    return all;
}

std::vector<ChainRecord> find_weak_elliptic_chains(const CurveGraph& g, std::size_t cap) {
    auto all = all_chains(g, cap);
    std::erase_if(all, [](const ChainRecord& c) { return !c.weak; });
    return all;
}

namespace {

std::vector<std::size_t> incident(const CurveGraph& g, int id) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.intersections.size(); ++x)
        if (g.intersections[x].touches(id)) out.push_back(x);
    return out;
}

bool is_bead(const CurveGraph& g, int id) { return is_smooth_rational(g, id) && incident(g, id).size() == 2; }

}  // namespace

std::vector<RosaryRecord> find_rosaries(const CurveGraph& g) {
    std::map<std::pair<bool, ComponentSet>, RosaryRecord> found;
    for (const auto& c : g.components) {
        if (!is_bead(g, c.id)) continue;
        auto inc = incident(g, c.id);
        for (std::size_t xp : inc) {
            if (g.intersections[xp].kind != Kind::Node) continue;
            RosaryRecord rec;
            rec.beads = {c.id};
            int cur = c.id;
            std::size_t in = xp;
            bool ok = false;
            while (true) {
                auto ci = incident(g, cur);
                std::size_t out = ci[0] == in ? ci[1] : ci[0];
                const auto& x = g.intersections[out];
                if (x.kind == Kind::Node) {
                    if (out == xp) {
                        rec.closed_by_node = true;
                        rec.attachments = {xp};
                    } else {
                        rec.attachments = {xp, out};
                    }
                    ok = true;
                    break;
                }
                int next = x.other(cur);
                if (!is_bead(g, next) || std::find(rec.beads.begin(), rec.beads.end(), next) != rec.beads.end())
                    break;
                rec.beads.push_back(next);
                rec.links.push_back(out);
                in = out;
                cur = next;
            }
            if (!ok) continue;
            if (rec.closed_by_node && rec.beads.size() < 2) continue;
            rec.length = static_cast<int>(rec.beads.size());
            if (rec.beads.back() < rec.beads.front()) {
                std::reverse(rec.beads.begin(), rec.beads.end());
                std::reverse(rec.links.begin(), rec.links.end());
                std::reverse(rec.attachments.begin(), rec.attachments.end());
            }
            found.emplace(std::make_pair(false, make_set(rec.beads)), rec);
        }
    }

    // closed rosaries, possibly with broken beads
    bool allBeads = !g.components.empty() &&
                    std::all_of(g.components.begin(), g.components.end(), [&](const Component& c) { return is_bead(g, c.id); });
    if (allBeads && g.components.size() >= 2 && is_connected(g)) {
        auto ids = g.ids();
        RosaryRecord rec;
        rec.closed = true;
        int cur = ids.front();
        std::size_t in = incident(g, cur)[0];
        do {
            auto ci = incident(g, cur);
            std::size_t out = ci[0] == in ? ci[1] : ci[0];
            rec.beads.push_back(cur);
            rec.links.push_back(out);
            cur = g.intersections[out].other(cur);
            in = out;
        } while (cur != ids.front() && rec.beads.size() <= ids.size());
        std::size_t n = rec.links.size();
        bool cycle = cur == ids.front() && n == ids.size();
        int nodes = 0;
        bool adjacentNodes = false, anyTac = false;
        for (std::size_t i = 0; cycle && i < n; ++i) {
            bool isNode = g.intersections[rec.links[i]].kind == Kind::Node;
            bool nextNode = g.intersections[rec.links[(i + 1) % n]].kind == Kind::Node;
            if (isNode) {
                ++nodes;
                rec.broken_positions.push_back(static_cast<int>(i));
            } else {
                anyTac = true;
            }
            if (isNode && nextNode) adjacentNodes = true;
        }
        if (cycle && anyTac && !adjacentNodes) {
            rec.length = static_cast<int>(n) - nodes;
            found.emplace(std::make_pair(true, make_set(rec.beads)), rec);
        }
    }
    std::vector<RosaryRecord> out;
    for (auto& [k, v] : found) out.push_back(v);
    return out;
}

bool has_tacnodes(const CurveGraph& g) {
    return std::any_of(g.intersections.begin(), g.intersections.end(),
                       [](const Intersection& x) { return x.kind == Kind::Tacnode; });
}

bool has_cusps(const CurveGraph& g) {
    return std::any_of(g.components.begin(), g.components.end(), [](const Component& c) { return c.cusp_count > 0; });
}

bool omega_ample(const CurveGraph& g) {
    for (const auto& c : g.components) {
        int pa = component_arithmetic_genus(g, c.id);
        int contact = 0;
        for (const auto& x : g.intersections)
            if (x.touches(c.id) && !x.is_self()) contact += delta(x.kind);
        if (2 * pa - 2 + contact <= 0) return false;
    }
    return true;
}

Classification classify_report(const CurveGraph& g, std::size_t cap) {
    g.validate();
    if (!is_connected(g)) throw Error("disconnected");
    int genus = arithmetic_genus(g);
    if (genus < 2) throw Error("arithmetic genus " + std::to_string(genus) + " < 2");

    Classification rep;
    SubcurveIndex I(g, cap);
    bool ample = omega_ample(g);
    bool tac = has_tacnodes(g), cusp = has_cusps(g);
    int minPoints = 1000, minMult = 1000;
    for (Mask m : I.connected_subsets()) {
        if (m == I.all() || I.genus(m) != 1) continue;
        auto b = I.boundary(m);
        int mult = 0;
        for (auto x : b) mult += delta(g.intersections[x].kind);
        minPoints = std::min(minPoints, static_cast<int>(b.size()));
        minMult = std::min(minMult, mult);
    }
    rep.tails = find_elliptic_tails(g, cap);
    rep.bridges = find_elliptic_bridges(g, cap);
    auto chains = all_chains(g, cap);
    for (auto& c : chains) (c.weak ? rep.weak_chains : rep.chains).push_back(c);

    auto& f = rep.flags;
    f.dm_stable = !tac && !cusp && ample;
    f.pseudostable = !tac && ample && minPoints >= 2;
    f.c_semistable = ample && minPoints >= 2;
    f.c_stable = f.c_semistable && !tac && minPoints >= 3;
    f.h_semistable = f.c_semistable && minMult >= 3 && rep.chains.empty();
    f.h_stable = f.h_semistable && rep.weak_chains.empty();

    if (!ample) rep.reasons.push_back("canonical sheaf not ample (genus-0 component with contact < 3)");
    if (tac) rep.reasons.push_back("has tacnodes");
    if (cusp) rep.reasons.push_back("has cusps");
    if (minPoints < 2) rep.reasons.push_back("genus-one subcurve meets the rest in one point");
    if (!rep.bridges.empty()) rep.reasons.push_back("has elliptic bridges");
    if (!rep.chains.empty()) rep.reasons.push_back("admits elliptic chains");
    if (!rep.weak_chains.empty()) rep.reasons.push_back("admits weak elliptic chains");
    return rep;
}

StabilityFlags classify(const CurveGraph& g, std::size_t cap) { return classify_report(g, cap).flags; }

AutomorphismWitness has_infinite_automorphisms(const CurveGraph& g) {
    if (arithmetic_genus(g) < 4) throw Error("genus below 4");
    if (!classify(g).c_semistable) throw Error("curve is not c-semistable");
    AutomorphismWitness w;
    for (const auto& r : find_rosaries(g)) {
        if (!r.closed && r.length >= 2) {
            w.infinite = true;
            w.witness = "open rosary of length " + std::to_string(r.length) + " on components";
            for (int b : r.beads) w.witness += " " + std::to_string(b);
            return w;
        }
        if (r.closed && r.broken_positions.empty() && (r.length + 1) % 2 == 1) {
            w.infinite = true;
            w.witness = "closed rosary of length " + std::to_string(r.length) + " and odd genus";
            return w;
        }
    }
    w.witness = "no open rosary of length >= 2 and no closed rosary of odd genus";
    return w;
}

int aut_torus_rank(const CurveGraph& g) {
    if (!is_c_closed_orbit(g) && !is_h_closed_orbit(g)) throw Error("not a closed-orbit curve");
    int rank = 0;
    for (const auto& r : find_rosaries(g)) {
        if (!r.closed && r.length >= 2) ++rank;
        if (r.closed && r.broken_positions.empty() && r.length % 2 == 0) ++rank;
    }
    return rank;
}

nlohmann::json to_json(const StabilityFlags& f) {
    return {{"dm_stable", f.dm_stable},       {"pseudostable", f.pseudostable}, {"c_semistable", f.c_semistable},
            {"c_stable", f.c_stable},         {"h_semistable", f.h_semistable}, {"h_stable", f.h_stable}};
}

nlohmann::json to_json(const ChainRecord& c) {
    return {{"closed", c.closed}, {"weak", c.weak},       {"length", c.length},
            {"links", c.links},   {"support", c.support}, {"attachments", c.attachments}};
}

nlohmann::json to_json(const RosaryRecord& r) {
    return {{"closed", r.closed}, {"closed_by_node", r.closed_by_node}, {"length", r.length},
            {"beads", r.beads},   {"broken_positions", r.broken_positions}};
}

}  // namespace gitcurve
