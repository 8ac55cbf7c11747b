#include "gitcurve/chow_multiplicity.hpp"

#include <algorithm>

namespace gitcurve {

void BranchData::validate() const {
    bool zero = false;
    for (const auto& o : orders) {
        if (o && *o < 0) throw Error("negative vanishing order on branch " + label);
        if (o && *o == 0) zero = true;
    }
    if (!zero) throw Error("branch " + label + " has no coordinate of order 0");
}

ChowCase parse_chow_case(const std::string& s) {
    if (s == "non-ordinary-cusp") return ChowCase::NonOrdinaryCusp;
    if (s == "higher-tacnode") return ChowCase::HigherTacnode;
    if (s == "multiple-component") return ChowCase::MultipleComponent;
    if (s == "genus-one-tacnode-tail") return ChowCase::GenusOneTacnodeTail;
    throw Error("unknown case '" + s + "'");
}

std::string chow_case_name(ChowCase c) {
    switch (c) {
        case ChowCase::NonOrdinaryCusp: return "non-ordinary-cusp";
        case ChowCase::HigherTacnode: return "higher-tacnode";
        case ChowCase::MultipleComponent: return "multiple-component";
        case ChowCase::GenusOneTacnodeTail: return "genus-one-tacnode-tail";
    }
    return "unknown";
}

long branch_balance(const BranchData& b, const OneParamSubgroup& rho) {
    if (b.orders.size() != rho.weights.size())
        throw Error("branch " + b.label + " has " + std::to_string(b.orders.size()) + " orders but rho has " +
                    std::to_string(rho.weights.size()) + " weights");
    b.validate();
    std::optional<long> a;
    for (std::size_t i = 0; i < b.orders.size(); ++i) {
        if (!b.orders[i]) continue;
        long v = *b.orders[i] + rho.weights[i];
        a = a ? std::min(*a, v) : v;
    }
    return *a;
}

Rational branch_multiplicity_bound(const BranchData& b, const OneParamSubgroup& rho) {
    long a = branch_balance(b, rho);
    if (a < 0) a = 0;
    return Rational(a * a);
}

long degenerate_multiplicity(int dim, long r0, long deg) {
    if (dim < 0 || r0 < 0 || deg < 0) throw Error("negative input");
    return (dim + 1) * r0 * deg;
}

Rational chow_threshold(int dim, long N, long deg, long weight_sum) {
    if (N < 1) throw Error("N must be at least 1");
    Rational q(static_cast<long>(dim + 1) * deg * weight_sum, N + 1);
    q.canonicalize();
    return q;
}

MultiplicityCertificate make_certificate(std::string name, std::vector<std::pair<std::string, Rational>> parts,
                                         const Rational& threshold) {
    MultiplicityCertificate c;
    c.name = std::move(name);
    c.lower_bound = 0;
    for (const auto& p : parts) c.lower_bound += p.second;
    c.contributions = std::move(parts);
    c.threshold = threshold;
    c.verdict = c.lower_bound > c.threshold ? Verdict::Unstable : Verdict::Inconclusive;
    return c;
}

namespace {

// a branch in P^{3g-4} with the given leading orders and weights; remaining coordinates have order `tail`
std::pair<BranchData, OneParamSubgroup> padded(const std::string& label, std::vector<long> orders, std::vector<long> weights,
                                               long tail, long tail_weight, long n) {
    BranchData b{label, {}};
    for (long o : orders) b.orders.push_back(o);
    OneParamSubgroup rho{weights};
    while (static_cast<long>(b.orders.size()) < n) b.orders.push_back(tail);
    while (static_cast<long>(rho.weights.size()) < n) rho.weights.push_back(tail_weight);
    return {b, rho};
}

long weight_sum(const OneParamSubgroup& rho) {
    long s = 0;
    for (long w : rho.weights) s += w;
    return s;
}

}  // namespace

MultiplicityCertificate certify_unstable(ChowCase k, int g) {
    if (g < 4) throw Error("genus must be at least 4");
    const long n = 3L * g - 3;  // number of coordinates
    const long deg = 4L * g - 4;
    switch (k) {
        case ChowCase::NonOrdinaryCusp: {
            auto [b, rho] = padded("cusp", {0, 2, 4}, {5, 3, 1}, 5, 0, n);
            return make_certificate(chow_case_name(k), {{"cusp", branch_multiplicity_bound(b, rho)}},
                                    chow_threshold(1, n - 1, deg, weight_sum(rho)));
        }
        case ChowCase::HigherTacnode: {
            auto [b, rho] = padded("branch", {0, 1, 2}, {3, 2, 1}, 3, 0, n);
            auto e = branch_multiplicity_bound(b, rho);
            return make_certificate(chow_case_name(k), {{"branch 1", e}, {"branch 2", e}},
                                    chow_threshold(1, n - 1, deg, weight_sum(rho)));
        }
        case ChowCase::MultipleComponent: {
            auto [b, rho] = padded("smooth point", {0, 1, 2}, {3, 2, 1}, 3, 0, n);
            auto e = branch_multiplicity_bound(b, rho);
            return make_certificate(chow_case_name(k), {{"component of multiplicity 2", 2 * e}},
                                    chow_threshold(1, n - 1, deg, weight_sum(rho)));
        }
        case ChowCase::GenusOneTacnodeTail: {
            const std::optional<long> inf;
            OneParamSubgroup rho{{0, 2, 3, 4}};
            while (static_cast<long>(rho.weights.size()) < n) rho.weights.push_back(2);
            auto branch = [&](std::string label, std::vector<std::optional<long>> head) {
                BranchData b{std::move(label), std::move(head)};
                while (static_cast<long>(b.orders.size()) < n) b.orders.push_back(inf);
                return b;
            };
            // E: (s^4, s^2t^2, st^3, t^4) at p = [0:1]
            auto ep = branch("E at p", {4, 2, 1, 0});
            // R: (uv, u^2, v^2) on x2, x3, x4; p at v = 0, q at u = 0
            auto rp = branch("R at p", {inf, inf, 1, 0, 2});
            auto rq = branch("R at q", {inf, inf, 1, 2, 0});
            long d = degenerate_multiplicity(1, 2, 4L * g - 10);
            return make_certificate(chow_case_name(k),
                                    {{"E at p", branch_multiplicity_bound(ep, rho)},
                                     {"R at p", branch_multiplicity_bound(rp, rho)},
                                     {"R at q", branch_multiplicity_bound(rq, rho)},
                                     {"D", Rational(d)}},
                                    chow_threshold(1, n - 1, deg, weight_sum(rho)));
        }
    }
    throw Error("unknown case");
}

nlohmann::json to_json(const MultiplicityCertificate& c) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [k, v] : c.contributions) parts.push_back({{"part", k}, {"bound", to_string(v)}});
    return {{"case", c.name},
            {"lower_bound", to_string(c.lower_bound)},
            {"threshold", to_string(c.threshold)},
            {"verdict", c.verdict == Verdict::Unstable ? "unstable" : "inconclusive"},
            {"contributions", parts}};
}

}  // namespace gitcurve
