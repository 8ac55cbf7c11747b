#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitcurve/families.hpp"
#include "gitcurve/rational.hpp"

namespace gitcurve {

struct BranchData {
    std::string label;
    std::vector<std::optional<long>> orders;  // nullopt: coordinate vanishes identically on the branch
    void validate() const;
};

enum class Verdict { Unstable, Inconclusive };

struct MultiplicityCertificate {
    std::string name;
    Rational lower_bound;
    Rational threshold;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, Rational>> contributions;
};

enum class ChowCase { NonOrdinaryCusp, HigherTacnode, MultipleComponent, GenusOneTacnodeTail };

ChowCase parse_chow_case(const std::string& s);
std::string chow_case_name(ChowCase c);

// orders beyond the given list count as the last listed finite order
long branch_balance(const BranchData& b, const OneParamSubgroup& rho);
Rational branch_multiplicity_bound(const BranchData& b, const OneParamSubgroup& rho);
long degenerate_multiplicity(int dim, long r0, long deg);
Rational chow_threshold(int dim, long N, long deg, long weight_sum);

MultiplicityCertificate make_certificate(std::string name, std::vector<std::pair<std::string, Rational>> parts,
                                         const Rational& threshold);
MultiplicityCertificate certify_unstable(ChowCase c, int g = 4);

nlohmann::json to_json(const MultiplicityCertificate& c);

}  // namespace gitcurve
