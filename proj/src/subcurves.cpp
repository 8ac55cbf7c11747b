#include "gitcurve/subcurves.hpp"

#include <algorithm>
#include <bit>

namespace gitcurve {

SubcurveIndex::SubcurveIndex(const CurveGraph& g, std::size_t cap, std::optional<std::size_t> cut)
    : g_(&g), n_(g.components.size()), cut_(cut) {
    if (n_ > cap || n_ > 63)
        throw Error("curve has " + std::to_string(n_) + " components; exhaustive subcurve cap is " +
                    std::to_string(std::min<std::size_t>(cap, 63)));
    adj_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) gc_.push_back(g.components[i].geometric_genus + g.components[i].cusp_count);
    for (std::size_t x = 0; x < g.intersections.size(); ++x) {
        const auto& in = g.intersections[x];
        auto a = g.index_of(in.a.component), b = g.index_of(in.b.component);
        ea_.push_back(a);
        eb_.push_back(b);
        if (is_cut(x)) continue;
        adj_[a] |= Mask{1} << b;
        adj_[b] |= Mask{1} << a;
    }
}

std::size_t SubcurveIndex::end_index(std::size_t x, bool second) const { return second ? eb_[x] : ea_[x]; }

Mask SubcurveIndex::bit_of(int id) const { return Mask{1} << g_->index_of(id); }

ComponentSet SubcurveIndex::ids(Mask m) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (m >> i & 1) out.push_back(g_->components[i].id);
    return make_set(out);
}

Mask SubcurveIndex::mask(const ComponentSet& s) const {
    Mask m = 0;
    for (int id : s) m |= bit_of(id);
    return m;
}

bool SubcurveIndex::connected(Mask m) const {
    if (!m) return false;
    Mask seen = m & (~m + 1);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= m & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == m;
}

int SubcurveIndex::genus(Mask m) const {
    int total = 0;
    for (Mask f = m; f; f &= f - 1) total += gc_[std::countr_zero(f)];
    for (std::size_t x = 0; x < ea_.size(); ++x)
        if (internal(x, m)) total += delta(g_->intersections[x].kind);
    return total - std::popcount(m) + 1;
}

bool SubcurveIndex::internal(std::size_t x, Mask m) const {
    return !is_cut(x) && (m >> ea_[x] & 1) && (m >> eb_[x] & 1);
}

std::vector<std::size_t> SubcurveIndex::boundary(Mask m) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < ea_.size(); ++x) {
        if (is_cut(x)) continue;
        if ((m >> ea_[x] & 1) != (m >> eb_[x] & 1)) out.push_back(x);
    }
    return out;
}

namespace {

void grow(const std::vector<Mask>& adj, std::size_t v, Mask s, Mask ext, Mask nbhd, std::vector<Mask>& out) {
    out.push_back(s);
    while (ext) {
        std::size_t w = static_cast<std::size_t>(std::countr_zero(ext));
        ext &= ext - 1;
        Mask higher = ~((Mask{2} << v) - 1);
        Mask fresh = adj[w] & ~s & ~nbhd & higher;
        grow(adj, v, s | (Mask{1} << w), ext | fresh, nbhd | adj[w], out);
    }
}

}  // namespace

std::vector<Mask> SubcurveIndex::connected_subsets() const {
    std::vector<Mask> out;
    for (std::size_t v = 0; v < n_; ++v) {
        Mask s = Mask{1} << v;
        Mask higher = ~((Mask{2} << v) - 1);
        grow(adj_, v, s, adj_[v] & higher, adj_[v] | s, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gitcurve
