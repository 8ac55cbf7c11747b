#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gitcurve/rational.hpp"

namespace gitcurve {

enum class Kind { Node, Tacnode };

int delta(Kind k);
std::string kind_name(Kind k);

struct Component {
    int id = 0;
    int geometric_genus = 0;
    int cusp_count = 0;
    std::string label;
};

struct BranchRef {
    int component = 0;
    int slot = 0;
    bool operator==(const BranchRef&) const = default;
    auto operator<=>(const BranchRef&) const = default;
};

struct Intersection {
    Kind kind = Kind::Node;
    BranchRef a;
    BranchRef b;
    bool is_self() const { return a.component == b.component; }
    bool touches(int id) const { return a.component == id || b.component == id; }
    int other(int id) const { return a.component == id ? b.component : a.component; }
};

struct Mark {
    int component = 0;
    std::string label;
};

// sorted component ids
using ComponentSet = std::vector<int>;

class CurveGraph {
public:
    std::vector<Component> components;
    std::vector<Intersection> intersections;
    std::vector<Mark> marks;

    int add_component(int genus, int cusps = 0, std::string label = {});
    int node(int a, int b);
    int tacnode(int a, int b);
    int join(Kind k, int a, int b);
    int next_slot(int id) const;
    int next_id() const;

    bool has(int id) const;
    const Component& component(int id) const;
    Component& component(int id);
    std::size_t index_of(int id) const;
    std::vector<int> ids() const;

    void remove_components(const ComponentSet& ids);
    void validate() const;
};

bool is_connected(const CurveGraph& g);
bool is_connected(const CurveGraph& g, const ComponentSet& sub);
int arithmetic_genus(const CurveGraph& g);
// genus of a connected subcurve using only intersections internal to it
int subcurve_genus(const CurveGraph& g, const ComponentSet& sub);
int contact_multiplicity(const CurveGraph& g, const ComponentSet& sub);
int contact_points(const CurveGraph& g, const ComponentSet& sub);
std::vector<std::size_t> boundary(const CurveGraph& g, const ComponentSet& sub);
// genus + cusps + self-intersection deltas
int component_arithmetic_genus(const CurveGraph& g, int id);
bool is_smooth_rational(const CurveGraph& g, int id);

nlohmann::json to_json(const CurveGraph& g);
CurveGraph graph_from_json(const nlohmann::json& j);
CurveGraph read_graph(const std::string& path);
std::string describe(const CurveGraph& g);

bool isomorphic(const CurveGraph& a, const CurveGraph& b);

ComponentSet make_set(std::vector<int> ids);
bool contains(const ComponentSet& s, int id);
bool overlaps(const ComponentSet& a, const ComponentSet& b);
bool subset_of(const ComponentSet& a, const ComponentSet& b);

}  // namespace gitcurve
