#pragma once

#include <string>
#include <vector>

#include "gitcurve/curve_graph.hpp"
#include "gitcurve/subcurves.hpp"

namespace gitcurve {

struct StabilityFlags {
    bool dm_stable = false;
    bool pseudostable = false;
    bool c_semistable = false;
    bool c_stable = false;
    bool h_semistable = false;
    bool h_stable = false;
};

struct ChainRecord {
    bool closed = false;
    bool weak = false;
    int length = 0;
    std::vector<ComponentSet> links;          // E_1, ..., E_r in chain order
    std::vector<std::size_t> attachments;     // intersections at p and q (one entry if closed)
    ComponentSet support;
};

struct RosaryRecord {
    bool closed = false;
    bool closed_by_node = false;              // open rosary with p and q glued at a node
    int length = 0;                           // beads after mending broken beads
    std::vector<int> beads;                   // in order along the rosary
    std::vector<std::size_t> links;           // intersections between consecutive beads
    std::vector<std::size_t> attachments;     // end nodes of an open rosary
    std::vector<int> broken_positions;        // closed: indices into links that are nodes
};

struct Classification {
    StabilityFlags flags;
    std::vector<std::string> reasons;         // why each failing flag failed
    std::vector<ComponentSet> tails;
    std::vector<ComponentSet> bridges;
    std::vector<ChainRecord> chains;
    std::vector<ChainRecord> weak_chains;
};

struct AutomorphismWitness {
    bool infinite = false;
    std::string witness;
};

std::vector<ComponentSet> genus_one_subcurves(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
std::vector<ComponentSet> find_elliptic_tails(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
std::vector<ComponentSet> find_elliptic_bridges(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
std::vector<ChainRecord> find_elliptic_chains(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
std::vector<ChainRecord> find_weak_elliptic_chains(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
std::vector<RosaryRecord> find_rosaries(const CurveGraph& g);

// omega ampleness: each genus-0 component meets the rest with weighted contact >= 3
bool omega_ample(const CurveGraph& g);
bool has_tacnodes(const CurveGraph& g);
bool has_cusps(const CurveGraph& g);

Classification classify_report(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);
StabilityFlags classify(const CurveGraph& g, std::size_t cap = kDefaultComponentCap);

AutomorphismWitness has_infinite_automorphisms(const CurveGraph& g);
int aut_torus_rank(const CurveGraph& g);

nlohmann::json to_json(const StabilityFlags& f);
nlohmann::json to_json(const ChainRecord& c);
nlohmann::json to_json(const RosaryRecord& r);

}  // namespace gitcurve
