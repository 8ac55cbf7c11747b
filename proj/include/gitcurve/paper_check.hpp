#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "gitcurve/curve_graph.hpp"

namespace gitcurve {

inline constexpr const char* kEngineVersion = "gitcurve 1.0.0";

struct CheckItem {
    std::string id;
    std::string description;
    nlohmann::json outputs = nlohmann::json::object();
    bool pass = true;
    std::string detail;  // first mismatch, empty on success
};

struct Manifest {
    std::vector<std::string> only;
    std::vector<CheckItem> items;
    bool all_pass() const;
};

// named graph fixtures for the worked examples
std::map<std::string, CurveGraph> paper_fixtures();

std::vector<std::string> paper_check_ids();
// prefixes select items; empty selects all
Manifest run_paper_check(const std::vector<std::string>& only = {}, bool parallel = true);
CheckItem run_check_item(const std::string& id);

nlohmann::json to_json(const CheckItem& item);
nlohmann::json to_json(const Manifest& m);

}  // namespace gitcurve
