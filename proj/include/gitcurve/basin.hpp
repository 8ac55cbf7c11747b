#pragma once

#include <string>
#include <vector>

#include "gitcurve/curve_graph.hpp"
#include "gitcurve/families.hpp"

namespace gitcurve {

enum class SingularityKind { Node, Tacnode, Cusp };

struct SingularityRef {
    SingularityKind kind = SingularityKind::Node;
    std::size_t intersection = 0;  // for nodes and tacnodes
    int component = 0;             // for cusps
    std::string name;
};

struct VersalWeights {
    SingularityRef ref;
    // node: c0; tacnode: (c0, c1, c2); cusp: (a, b)
    std::vector<Rational> parameter_weights;
};

enum class Fate { Smoothable, Frozen };

struct BasinEntry {
    VersalWeights versal;
    Fate fate = Fate::Frozen;
};

struct BasinReport {
    std::vector<BasinEntry> entries;
    CurveGraph generic;
    std::vector<CurveGraph> partial;                   // one per subset of smoothable singularities
    std::vector<std::vector<std::string>> partial_names;
    bool partial_truncated = false;
};

std::vector<SingularityRef> singularities(const Configuration& c);
VersalWeights versal_weights(const Configuration& c, const OneParamSubgroup& rho, const SingularityRef& s);
BasinReport basin_membership(const Configuration& c, const OneParamSubgroup& rho);

// graph level: rho = prod generators[i]^exponents[i]
std::vector<VersalWeights> versal_weights(const CurveGraph& g, const std::vector<GraphTorusGenerator>& gens,
                                          const std::vector<long>& exponents);
BasinReport basin_membership(const CurveGraph& g, const std::vector<GraphTorusGenerator>& gens,
                             const std::vector<long>& exponents);

// smooth the listed intersections and cusps (component ids, one cusp each)
CurveGraph smooth(const CurveGraph& g, const std::vector<std::size_t>& intersections, const std::vector<int>& cusps);

// tacnodes become elliptic bridges, then rational components with fewer than three
// points are contracted
CurveGraph pseudo_stabilize(const CurveGraph& g);
CurveGraph contract_unstable_rational(const CurveGraph& g);

bool is_c_closed_orbit(const CurveGraph& g);
bool is_h_closed_orbit(const CurveGraph& g);
CurveGraph c_closed_orbit_rep(const CurveGraph& g);
CurveGraph h_closed_orbit_rep(const CurveGraph& g);
std::vector<CurveGraph> enumerate_c_replacements(const CurveGraph& g);

nlohmann::json to_json(const BasinReport& r);

}  // namespace gitcurve
