#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gitcurve/curve_graph.hpp"

namespace gitcurve {

inline constexpr std::size_t kDefaultComponentCap = 24;

using Mask = std::uint64_t;

// Bitmask view of a curve graph; an optional intersection can be cut
// (treated as two smooth points) for closed-chain searches.
class SubcurveIndex {
public:
    explicit SubcurveIndex(const CurveGraph& g, std::size_t cap = kDefaultComponentCap,
                           std::optional<std::size_t> cut = std::nullopt);

    std::size_t size() const { return n_; }
    Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
    Mask bit_of(int id) const;
    ComponentSet ids(Mask m) const;
    Mask mask(const ComponentSet& s) const;

    bool connected(Mask m) const;
    int genus(Mask m) const;
    std::vector<std::size_t> boundary(Mask m) const;
    bool internal(std::size_t x, Mask m) const;
    bool is_cut(std::size_t x) const { return cut_ && *cut_ == x; }

    // every connected subset, each exactly once, ascending by mask
    std::vector<Mask> connected_subsets() const;

    const CurveGraph& graph() const { return *g_; }
    std::size_t end_index(std::size_t x, bool second) const;

private:
    const CurveGraph* g_;
    std::size_t n_;
    std::optional<std::size_t> cut_;
    std::vector<int> gc_;
    std::vector<Mask> adj_;
    std::vector<std::size_t> ea_, eb_;
};

}  // namespace gitcurve
