#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitcurve/curve_graph.hpp"
#include "gitcurve/rational.hpp"

namespace gitcurve {

enum class Family { OpenRosary, ClosedRosary, BrokenBead, TacnodalTail };
enum class Mode { FullyParametrized, SplitWithD };

std::string family_name(Family f);

// point [1:0] is TZero, [0:1] is SZero
enum class End { TZero, SZero };

struct Term {
    int coordinate = 0;
    int a = 0;  // exponent of s
    int b = 0;  // exponent of t
    Rational coefficient = 1;
};

struct ComponentParam {
    int component = 0;
    int degree = 0;
    std::vector<Term> terms;
};

struct Parametrization {
    int num_coordinates = 0;
    std::vector<ComponentParam> components;
    void validate() const;
    const ComponentParam* find(int component) const;
};

struct OneParamSubgroup {
    std::vector<long> weights;
    bool operator==(const OneParamSubgroup&) const = default;
};

struct Configuration {
    Family family = Family::OpenRosary;
    Mode mode = Mode::FullyParametrized;
    int genus = 0;
    int r = 0;
    int total_coordinates = 0;
    CurveGraph graph;
    Parametrization param;
    std::map<BranchRef, End> ends;
    std::map<int, End> cusp_ends;
    std::vector<std::string> point_names;    // one per intersection
    // split mode: the abstract remainder D
    std::optional<int> remainder;
    int remainder_genus = 0;
    std::vector<int> remainder_coordinates;
    std::map<BranchRef, int> remainder_points;
};

Configuration build_open_rosary_config(int g, int r);
Configuration build_closed_rosary_config(int r);
Configuration build_broken_bead_config(int r);
// elliptic tail E (one cusp) meeting a conic R at a tacnode; R meets D at a node
Configuration build_tacnodal_tail_config(int g);

OneParamSubgroup canonical_1ps(const Configuration& c);

// per-branch weight of the local parameter at each rosary end
struct GraphTorusGenerator {
    std::map<BranchRef, long> branch_weight;
    std::string description;
};

std::vector<GraphTorusGenerator> torus_generators(const CurveGraph& g);
std::vector<OneParamSubgroup> torus_generators(const Configuration& c);
// coordinate weights inducing the given branch weights (error if none exist)
OneParamSubgroup coordinate_weights(const Configuration& c, const std::map<BranchRef, long>& branch_weight);

// local parameter weight of rho at a branch; error if rho does not preserve the component
Rational branch_weight(const Configuration& c, const OneParamSubgroup& rho, const BranchRef& br);
Rational cusp_weight(const Configuration& c, const OneParamSubgroup& rho, int component);
void check_automorphism(const Configuration& c, const OneParamSubgroup& rho);

nlohmann::json to_json(const Configuration& c);
nlohmann::json to_json(const OneParamSubgroup& rho);

}  // namespace gitcurve
