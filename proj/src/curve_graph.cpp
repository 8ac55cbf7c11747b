#include "gitcurve/curve_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace gitcurve {

int delta(Kind k) { return k == Kind::Node ? 1 : 2; }

std::string kind_name(Kind k) { return k == Kind::Node ? "node" : "tacnode"; }

int CurveGraph::add_component(int genus, int cusps, std::string label) {
    if (genus < 0 || cusps < 0) throw Error("negative genus or cusp count");
    Component c;
    c.id = next_id();
    c.geometric_genus = genus;
    c.cusp_count = cusps;
    c.label = std::move(label);
    components.push_back(c);
    return c.id;
}

int CurveGraph::next_id() const {
    int m = -1;
    for (const auto& c : components) m = std::max(m, c.id);
    return m + 1;
}

int CurveGraph::next_slot(int id) const {
    int m = -1;
    for (const auto& x : intersections) {
        if (x.a.component == id) m = std::max(m, x.a.slot);
        if (x.b.component == id) m = std::max(m, x.b.slot);
    }
    return m + 1;
}

int CurveGraph::join(Kind k, int a, int b) {
    if (!has(a) || !has(b)) throw Error("unknown component in intersection");
    Intersection x;
    x.kind = k;
    x.a = {a, next_slot(a)};
    x.b = {b, a == b ? x.a.slot + 1 : next_slot(b)};
    intersections.push_back(x);
    return static_cast<int>(intersections.size()) - 1;
}

int CurveGraph::node(int a, int b) { return join(Kind::Node, a, b); }
int CurveGraph::tacnode(int a, int b) { return join(Kind::Tacnode, a, b); }

bool CurveGraph::has(int id) const {
    return std::any_of(components.begin(), components.end(), [&](const Component& c) { return c.id == id; });
}

std::size_t CurveGraph::index_of(int id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id) return i;
    throw Error("unknown component id " + std::to_string(id));
}

const Component& CurveGraph::component(int id) const { return components[index_of(id)]; }
Component& CurveGraph::component(int id) { return components[index_of(id)]; }

std::vector<int> CurveGraph::ids() const {
    std::vector<int> out;
    for (const auto& c : components) out.push_back(c.id);
    std::sort(out.begin(), out.end());
    return out;
}

void CurveGraph::remove_components(const ComponentSet& ids) {
    std::erase_if(components, [&](const Component& c) { return contains(ids, c.id); });
    std::erase_if(intersections, [&](const Intersection& x) {
        return contains(ids, x.a.component) || contains(ids, x.b.component);
    });
    std::erase_if(marks, [&](const Mark& m) { return contains(ids, m.component); });
}

void CurveGraph::validate() const {
    if (components.empty()) throw Error("curve has no components");
    std::set<int> seen;
    for (const auto& c : components) {
        if (!seen.insert(c.id).second) throw Error("duplicate component id " + std::to_string(c.id));
        if (c.geometric_genus < 0 || c.cusp_count < 0)
            throw Error("negative genus or cusp count on component " + std::to_string(c.id));
    }
    std::set<BranchRef> used;
    for (const auto& x : intersections) {
        for (const auto& e : {x.a, x.b}) {
            if (!seen.count(e.component))
                throw Error("intersection references unknown component " + std::to_string(e.component));
            if (!used.insert(e).second)
                throw Error("branch slot (" + std::to_string(e.component) + "," + std::to_string(e.slot) +
                            ") used twice");
        }
    }
    for (const auto& m : marks)
        if (!seen.count(m.component)) throw Error("mark on unknown component " + std::to_string(m.component));
}

ComponentSet make_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool contains(const ComponentSet& s, int id) { return std::binary_search(s.begin(), s.end(), id); }

bool overlaps(const ComponentSet& a, const ComponentSet& b) {
    return std::any_of(a.begin(), a.end(), [&](int id) { return contains(b, id); });
}

bool subset_of(const ComponentSet& a, const ComponentSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_connected(const CurveGraph& g, const ComponentSet& sub) {
    if (sub.empty()) return false;
    std::set<int> reached{sub.front()};
    std::vector<int> stack{sub.front()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& x : g.intersections) {
            if (!x.touches(v)) continue;
            int w = x.other(v);
            if (contains(sub, w) && reached.insert(w).second) stack.push_back(w);
        }
    }
    return reached.size() == sub.size();
}

bool is_connected(const CurveGraph& g) { return is_connected(g, g.ids()); }

int subcurve_genus(const CurveGraph& g, const ComponentSet& sub) {
    if (!is_connected(g, sub)) throw Error("disconnected");
    int total = 0;
    for (int id : sub) {
        const auto& c = g.component(id);
        total += c.geometric_genus + c.cusp_count;
    }
    for (const auto& x : g.intersections)
        if (contains(sub, x.a.component) && contains(sub, x.b.component)) total += delta(x.kind);
    return total - (static_cast<int>(sub.size()) - 1);
}

int arithmetic_genus(const CurveGraph& g) { return subcurve_genus(g, g.ids()); }

std::vector<std::size_t> boundary(const CurveGraph& g, const ComponentSet& sub) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.intersections.size(); ++i) {
        const auto& x = g.intersections[i];
        if (contains(sub, x.a.component) != contains(sub, x.b.component)) out.push_back(i);
    }
    return out;
}

static void check_proper(const CurveGraph& g, const ComponentSet& sub) {
    if (sub.empty()) throw Error("empty subcurve");
    for (int id : sub)
        if (!g.has(id)) throw Error("unknown component id " + std::to_string(id));
    if (sub.size() >= g.components.size()) throw Error("subcurve is not proper");
    if (!is_connected(g, sub)) throw Error("subcurve is disconnected");
}

int contact_multiplicity(const CurveGraph& g, const ComponentSet& sub) {
    check_proper(g, sub);
    int total = 0;
    for (auto i : boundary(g, sub)) total += delta(g.intersections[i].kind);
    return total;
}

int contact_points(const CurveGraph& g, const ComponentSet& sub) {
    check_proper(g, sub);
    return static_cast<int>(boundary(g, sub).size());
}

int component_arithmetic_genus(const CurveGraph& g, int id) {
    const auto& c = g.component(id);
    int total = c.geometric_genus + c.cusp_count;
    for (const auto& x : g.intersections)
        if (x.a.component == id && x.b.component == id) total += delta(x.kind);
    return total;
}

bool is_smooth_rational(const CurveGraph& g, int id) { return component_arithmetic_genus(g, id) == 0; }

nlohmann::json to_json(const CurveGraph& g) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& c : g.components) {
        nlohmann::json cj = {{"id", c.id}, {"genus", c.geometric_genus}, {"cusps", c.cusp_count}};
        if (!c.label.empty()) cj["label"] = c.label;
        j["components"].push_back(cj);
    }
    j["intersections"] = nlohmann::json::array();
    for (const auto& x : g.intersections) {
        j["intersections"].push_back(
            {{"kind", kind_name(x.kind)},
             {"ends", {{x.a.component, x.a.slot}, {x.b.component, x.b.slot}}}});
    }
    j["marks"] = nlohmann::json::array();
    for (const auto& m : g.marks) j["marks"].push_back({m.component, m.label});
    return j;
}

static BranchRef end_from_json(const nlohmann::json& e) {
    if (!e.is_array() || e.size() != 2) throw Error("intersection end must be [id, slot]");
    return {e[0].get<int>(), e[1].get<int>()};
}

CurveGraph graph_from_json(const nlohmann::json& j) {
    CurveGraph g;
    try {
        for (const auto& cj : j.at("components")) {
            Component c;
            c.id = cj.at("id").get<int>();
            c.geometric_genus = cj.value("genus", 0);
            c.cusp_count = cj.value("cusps", 0);
            c.label = cj.value("label", std::string{});
            g.components.push_back(c);
        }
        if (j.contains("intersections")) {
            for (const auto& xj : j.at("intersections")) {
                Intersection x;
                auto kind = xj.at("kind").get<std::string>();
                if (kind == "node") x.kind = Kind::Node;
                else if (kind == "tacnode") x.kind = Kind::Tacnode;
                else throw Error("unknown intersection kind '" + kind + "'");
                const auto& ends = xj.at("ends");
                if (!ends.is_array() || ends.size() != 2) throw Error("intersection needs two ends");
                x.a = end_from_json(ends[0]);
                x.b = end_from_json(ends[1]);
                g.intersections.push_back(x);
            }
        }
        if (j.contains("marks")) {
            for (const auto& mj : j.at("marks")) {
                if (!mj.is_array() || mj.size() != 2) throw Error("mark must be [id, label]");
                g.marks.push_back({mj[0].get<int>(), mj[1].get<std::string>()});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed graph document: ") + e.what());
    }
    g.validate();
    return g;
}

CurveGraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
        throw Error(path + ":" + std::to_string(line) + ": " + e.what());
    }
    try {
        return graph_from_json(j);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string describe(const CurveGraph& g) {
    std::ostringstream os;
    os << g.components.size() << " components [";
    bool first = true;
    for (const auto& c : g.components) {
        if (!first) os << ", ";
        first = false;
        os << c.id << ":g" << c.geometric_genus;
        if (c.cusp_count) os << "+" << c.cusp_count << "cusp";
        if (!c.label.empty()) os << "(" << c.label << ")";
    }
    os << "], intersections [";
    first = true;
    for (const auto& x : g.intersections) {
        if (!first) os << ", ";
        first = false;
        os << x.a.component << (x.kind == Kind::Node ? "-" : "=") << x.b.component;
    }
    os << "]";
    return os.str();
}

namespace {

struct Shape {
    std::size_t n = 0;
    std::vector<std::tuple<int, int, int, int, int>> label;  // genus, cusps, marks, self nodes, self tacnodes
    std::vector<std::vector<int>> nodes;
    std::vector<std::vector<int>> tacs;
};

Shape shape_of(const CurveGraph& g) {
    Shape s;
    s.n = g.components.size();
    s.nodes.assign(s.n, std::vector<int>(s.n, 0));
    s.tacs.assign(s.n, std::vector<int>(s.n, 0));
    std::vector<int> marks(s.n, 0), sn(s.n, 0), st(s.n, 0);
    for (const auto& m : g.marks) ++marks[g.index_of(m.component)];
    for (const auto& x : g.intersections) {
        auto i = g.index_of(x.a.component), j = g.index_of(x.b.component);
        if (i == j) {
            ++(x.kind == Kind::Node ? sn : st)[i];
            continue;
        }
        auto& m = x.kind == Kind::Node ? s.nodes : s.tacs;
        ++m[i][j];
        ++m[j][i];
    }
    for (std::size_t i = 0; i < s.n; ++i) {
        const auto& c = g.components[i];
        s.label.emplace_back(c.geometric_genus, c.cusp_count, marks[i], sn[i], st[i]);
    }
    return s;
}

// joint colour refinement over both graphs
void refine(const Shape& a, const Shape& b, std::vector<int>& ca, std::vector<int>& cb) {
    using Sig = std::pair<int, std::vector<std::tuple<int, int, int>>>;
    auto signature = [](const Shape& s, const std::vector<int>& col, std::size_t i) {
        std::vector<std::tuple<int, int, int>> nb;
        for (std::size_t j = 0; j < s.n; ++j)
            if (s.nodes[i][j] || s.tacs[i][j]) nb.emplace_back(col[j], s.nodes[i][j], s.tacs[i][j]);
        std::sort(nb.begin(), nb.end());
        return Sig{col[i], nb};
    };
    {
        std::map<std::tuple<int, int, int, int, int>, int> ids;
        for (auto& l : a.label) ids.emplace(l, 0);
        for (auto& l : b.label) ids.emplace(l, 0);
        int k = 0;
        for (auto& [l, v] : ids) v = k++;
        ca.resize(a.n);
        cb.resize(b.n);
        for (std::size_t i = 0; i < a.n; ++i) ca[i] = ids[a.label[i]];
        for (std::size_t i = 0; i < b.n; ++i) cb[i] = ids[b.label[i]];
    }
    for (std::size_t round = 0; round <= a.n; ++round) {
        std::vector<Sig> sa, sb;
        for (std::size_t i = 0; i < a.n; ++i) sa.push_back(signature(a, ca, i));
        for (std::size_t i = 0; i < b.n; ++i) sb.push_back(signature(b, cb, i));
        std::map<Sig, int> ids;
        for (auto& s : sa) ids.emplace(s, 0);
        for (auto& s : sb) ids.emplace(s, 0);
        int k = 0;
        for (auto& [s, v] : ids) v = k++;
        std::vector<int> na(a.n), nb(b.n);
        for (std::size_t i = 0; i < a.n; ++i) na[i] = ids[sa[i]];
        for (std::size_t i = 0; i < b.n; ++i) nb[i] = ids[sb[i]];
        bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size() &&
                      std::set<int>(nb.begin(), nb.end()).size() == std::set<int>(cb.begin(), cb.end()).size();
        ca = na;
        cb = nb;
        if (stable) break;
    }
}

bool extend(const Shape& a, const Shape& b, const std::vector<int>& ca, const std::vector<int>& cb,
            const std::vector<std::size_t>& order, std::size_t k, std::vector<int>& map, std::vector<bool>& used) {
    if (k == order.size()) return true;
    std::size_t i = order[k];
    for (std::size_t j = 0; j < b.n; ++j) {
        if (used[j] || cb[j] != ca[i]) continue;
        bool ok = true;
        for (std::size_t t = 0; t < k && ok; ++t) {
            std::size_t i2 = order[t];
            std::size_t j2 = static_cast<std::size_t>(map[i2]);
            ok = a.nodes[i][i2] == b.nodes[j][j2] && a.tacs[i][i2] == b.tacs[j][j2];
        }
        if (!ok) continue;
        map[i] = static_cast<int>(j);
        used[j] = true;
        if (extend(a, b, ca, cb, order, k + 1, map, used)) return true;
        used[j] = false;
        map[i] = -1;
    }
    return false;
}

}  // namespace

bool isomorphic(const CurveGraph& ga, const CurveGraph& gb) {
    if (ga.components.size() != gb.components.size()) return false;
    if (ga.intersections.size() != gb.intersections.size()) return false;
    if (ga.marks.size() != gb.marks.size()) return false;
    Shape a = shape_of(ga), b = shape_of(gb);
    std::vector<int> ca, cb;
    refine(a, b, ca, cb);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    // visit vertices connected-first so partial checks bite early
    std::vector<std::size_t> order;
    std::vector<bool> placed(a.n, false);
    for (std::size_t start = 0; start < a.n; ++start) {
        if (placed[start]) continue;
        std::vector<std::size_t> queue{start};
        placed[start] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            auto v = queue[q];
            order.push_back(v);
            for (std::size_t w = 0; w < a.n; ++w)
                if (!placed[w] && (a.nodes[v][w] || a.tacs[v][w])) {
                    placed[w] = true;
                    queue.push_back(w);
                }
        }
    }
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    return extend(a, b, ca, cb, order, 0, map, used);
}

}  // namespace gitcurve
