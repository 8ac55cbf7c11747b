#include "gitcurve/ideal_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace gitcurve {

std::string monomial_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (m[i] > 1) os << "^" << m[i];
    }
    if (first) os << "1";
    return os.str();
}

Monomial parse_monomial(const std::string& text, int n) {
    Monomial m(static_cast<std::size_t>(n), 0);
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty() || factor[0] != 'x') throw Error("bad monomial factor '" + factor + "'");
        auto caret = factor.find('^');
        int idx = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        if (idx < 0 || idx >= n) throw Error("variable index out of range in '" + text + "'");
        m[static_cast<std::size_t>(idx)] += e;
    }
    return m;
}

long MonomialOrder::weight(const Monomial& m) const {
    long w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * weights.weights[i];
    return w;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = precedence.empty() ? k : static_cast<std::size_t>(precedence[k]);
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MonomialOrder make_order(const OneParamSubgroup& rho) { return MonomialOrder{rho, {}}; }

int default_max_degree() {
    if (const char* env = std::getenv("GIT_CURVE_MAX_DEGREE")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw Error(std::string("GIT_CURVE_MAX_DEGREE must be a positive integer, got '") + env + "'");
    }
    return 5;
}

std::vector<Monomial> monomials_of_degree(int n, int m) {
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            cur[static_cast<std::size_t>(i)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(i)] = e;
            self(self, i + 1, left - e);
        }
        cur[static_cast<std::size_t>(i)] = 0;
    };
    if (n > 0) rec(rec, 0, m);
    return out;
}

namespace {

struct Evaluator {
    struct Slot {
        bool present = false;
        int b = 0;
        Rational coef;
    };
    std::vector<std::vector<Slot>> table;  // per component, per coordinate
    std::vector<int> offset;
    int rows = 0;

    Evaluator(const Parametrization& p, int m) {
        for (const auto& c : p.components) {
            std::vector<Slot> t(static_cast<std::size_t>(p.num_coordinates));
            for (const auto& term : c.terms) {
                auto& s = t[static_cast<std::size_t>(term.coordinate)];
                if (s.present) throw Error("coordinate appears twice on one component");
                s = {true, term.b, term.coefficient};
            }
            table.push_back(std::move(t));
            offset.push_back(rows);
            rows += m * c.degree + 1;
        }
    }

    // sparse column: (row, value)
    std::vector<std::pair<int, Rational>> column(const Monomial& mono) const {
        std::vector<std::pair<int, Rational>> out;
        for (std::size_t k = 0; k < table.size(); ++k) {
            Rational coef = 1;
            int b = 0;
            bool zero = false;
            for (std::size_t i = 0; i < mono.size() && !zero; ++i) {
                if (!mono[i]) continue;
                const auto& s = table[k][i];
                if (!s.present) {
                    zero = true;
                    break;
                }
                for (int e = 0; e < mono[i]; ++e) coef *= s.coef;
                b += s.b * mono[i];
            }
            if (!zero && coef != 0) out.emplace_back(offset[k] + b, coef);
        }
        return out;
    }
};

void check_order(const Configuration& c, const MonomialOrder& ord) {
    if (static_cast<int>(ord.weights.weights.size()) != c.param.num_coordinates)
        throw Error("order has " + std::to_string(ord.weights.weights.size()) + " weights for " +
                    std::to_string(c.param.num_coordinates) + " coordinates");
    if (!ord.precedence.empty()) {
        auto p = ord.precedence;
        std::sort(p.begin(), p.end());
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != static_cast<int>(i)) throw Error("precedence is not a permutation");
        if (p.size() != ord.weights.weights.size()) throw Error("precedence has wrong length");
    }
}

std::vector<Monomial> sorted_monomials(int n, int m, const MonomialOrder& ord) {
    auto mons = monomials_of_degree(n, m);
    std::stable_sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return mons;
}

}  // namespace

IdealSlice evaluate_slice(const Configuration& c, int m, const MonomialOrder& ord, int max_degree) {
    if (m < 1) throw Error("degree must be positive");
    if (m > max_degree)
        throw Error("degree " + std::to_string(m) + " exceeds the cap " + std::to_string(max_degree));
    c.param.validate();
    check_order(c, ord);
    IdealSlice s;
    s.degree = m;
    s.num_coordinates = c.param.num_coordinates;
    s.order = ord;
    s.monomials = sorted_monomials(s.num_coordinates, m, ord);
    s.standard.assign(s.monomials.size(), false);

    Evaluator ev(c.param, m);
    const auto R = static_cast<std::size_t>(ev.rows);
    std::vector<std::vector<Rational>> basis;
    std::vector<std::size_t> pivots;
    std::vector<Rational> v(R);
    for (std::size_t col = 0; col < s.monomials.size(); ++col) {
        auto sparse = ev.column(s.monomials[col]);
        if (sparse.empty()) continue;
        for (auto& x : v) x = 0;
        for (auto& [row, val] : sparse) v[static_cast<std::size_t>(row)] = val;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (sgn(v[pivots[j]]) == 0) continue;
            Rational f = v[pivots[j]];
            const auto& bj = basis[j];
            for (std::size_t i = 0; i < R; ++i)
                if (sgn(bj[i]) != 0) v[i] -= f * bj[i];
        }
        std::size_t p = R;
        for (std::size_t i = 0; i < R; ++i)
            if (sgn(v[i]) != 0) {
                p = i;
                break;
            }
        if (p == R) continue;
        Rational inv = 1 / v[p];
        for (auto& x : v)
            if (sgn(x) != 0) x *= inv;
        for (auto& bj : basis) {
            if (sgn(bj[p]) == 0) continue;
            Rational f = bj[p];
            for (std::size_t i = 0; i < R; ++i)
                if (sgn(v[i]) != 0) bj[i] -= f * v[i];
        }
        basis.push_back(v);
        pivots.push_back(p);
        s.standard[col] = true;
    }
    s.rank = static_cast<int>(basis.size());
    return s;
}

std::vector<Monomial> initial_monomials(const IdealSlice& s) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        if (!s.standard[i]) out.push_back(s.monomials[i]);
    return out;
}

std::vector<Monomial> standard_monomials(const IdealSlice& s) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        if (s.standard[i]) out.push_back(s.monomials[i]);
    return out;
}

std::vector<std::map<std::size_t, Rational>> ideal_basis(const Configuration& c, int m, const MonomialOrder& ord) {
    check_order(c, ord);
    auto mons = sorted_monomials(c.param.num_coordinates, m, ord);
    Evaluator ev(c.param, m);
    const std::size_t R = static_cast<std::size_t>(ev.rows), M = mons.size();
    std::vector<std::vector<Rational>> A(R, std::vector<Rational>(M));
    for (std::size_t j = 0; j < M; ++j)
        for (auto& [row, val] : ev.column(mons[j])) A[static_cast<std::size_t>(row)][j] = val;
    // Gauss-Jordan, columns ascending
    std::vector<std::size_t> pivotCol;
    std::size_t row = 0;
    for (std::size_t j = 0; j < M && row < R; ++j) {
        std::size_t p = row;
        while (p < R && sgn(A[p][j]) == 0) ++p;
        if (p == R) continue;
        std::swap(A[p], A[row]);
        Rational inv = 1 / A[row][j];
        for (auto& x : A[row]) x *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || sgn(A[i][j]) == 0) continue;
            Rational f = A[i][j];
            for (std::size_t k = j; k < M; ++k) A[i][k] -= f * A[row][k];
        }
        pivotCol.push_back(j);
        ++row;
    }
    std::vector<bool> isPivot(M, false);
    for (auto j : pivotCol) isPivot[j] = true;
    std::vector<std::map<std::size_t, Rational>> out;
    for (std::size_t f = M; f-- > 0;) {
        if (isPivot[f]) continue;
        std::map<std::size_t, Rational> vec;
        vec[f] = 1;
        for (std::size_t r = 0; r < pivotCol.size(); ++r)
            if (sgn(A[r][f]) != 0) vec[pivotCol[r]] = -A[r][f];
        out.push_back(std::move(vec));
    }
    return out;
}

long hilbert_polynomial(int g, int m) { return static_cast<long>(4 * g - 4) * m + 1 - g; }

IndexReport hilbert_index(const Configuration& c, const OneParamSubgroup& rho, int m, int max_degree) {
    if (m < 2) throw Error("hilbert_index needs m >= 2");
    if (static_cast<int>(rho.weights.size()) != c.total_coordinates)
        throw Error("weight vector has " + std::to_string(rho.weights.size()) + " entries, expected " +
                    std::to_string(c.total_coordinates));
    IndexReport rep;
    rep.m = m;
    const int N1 = c.total_coordinates;
    long sumR = std::accumulate(rho.weights.begin(), rho.weights.end(), 0L);

    OneParamSubgroup block;
    if (c.mode == Mode::SplitWithD) {
        if (c.family != Family::OpenRosary) throw Error("split-mode index is only defined for the open rosary family");
        block.weights.assign(rho.weights.begin(), rho.weights.begin() + c.param.num_coordinates);
    } else {
        block = rho;
    }
    auto slice = evaluate_slice(c, m, make_order(block), max_degree);
    Rational blockSum = 0;
    long blockCount = 0;
    for (std::size_t i = 0; i < slice.monomials.size(); ++i) {
        if (!slice.standard[i]) continue;
        blockSum += slice.order.weight(slice.monomials[i]);
        ++blockCount;
    }
    rep.block_weight_sum = blockSum;
    rep.block_count = blockCount;
    rep.weight_sum = blockSum;
    rep.standard_count = blockCount;
    if (c.mode == Mode::SplitWithD) {
        long wd = rho.weights[static_cast<std::size_t>(c.remainder_coordinates.front())];
        for (int k : c.remainder_coordinates)
            if (rho.weights[static_cast<std::size_t>(k)] != wd)
                throw Error("split-mode index needs a uniform weight on the D coordinates");
        long dCount = static_cast<long>(4 * m - 1) * c.remainder_genus - 1;
        rep.weight_sum += Rational(m * wd * dCount);
        rep.standard_count += dCount;
    }
    rep.expected_count = hilbert_polynomial(c.genus, m);
    rep.count_deviates = rep.standard_count != rep.expected_count;
    rep.average = Rational(static_cast<long>(m) * rep.expected_count * sumR, N1);
    rep.average.canonicalize();
    rep.mu = rep.average - rep.weight_sum;
    return rep;
}

std::vector<IndexReport> index_series(const Configuration& c, const OneParamSubgroup& rho, const std::vector<int>& degrees,
                                      int max_degree) {
    std::vector<IndexReport> out;
    for (int m : degrees) out.push_back(hilbert_index(c, rho, m, max_degree));
    const IndexReport *r2 = nullptr, *r3 = nullptr;
    for (const auto& r : out) {
        if (r.m == 2) r2 = &r;
        if (r.m == 3) r3 = &r;
    }
    if (r2 && r3) {
        int s = chow_index_sign(r2->mu, r3->mu);
        for (auto& r : out) r.chow_sign = s;
    }
    return out;
}

Rational extrapolate_index(const Rational& mu2, const Rational& mu3, int m) {
    if (m < 2) throw Error("extrapolation needs m >= 2");
    Rational half(m, 2);
    half.canonicalize();
    Rational out = Rational(m - 1) * (Rational(3 - m) * mu2 + (half - 1) * mu3);
    out.canonicalize();
    return out;
}

int chow_index_sign(const Rational& mu2, const Rational& mu3) { return sgn(Rational(mu3 - 2 * mu2)); }

Rational point_index(const std::vector<int>& support, const OneParamSubgroup& rho) {
    if (support.empty()) throw Error("empty support");
    const auto n = static_cast<long>(rho.weights.size());
    Rational avg(std::accumulate(rho.weights.begin(), rho.weights.end(), 0L), n);
    avg.canonicalize();
    std::optional<Rational> best;
    for (int i : support) {
        if (i < 0 || i >= n) throw Error("support index out of range");
        Rational v = avg - rho.weights[static_cast<std::size_t>(i)];
        if (!best || v > *best) best = v;
    }
    return *best;
}

nlohmann::json to_json(const IndexReport& r) {
    nlohmann::json j = {{"m", r.m},
                        {"weight_sum", to_string(r.weight_sum)},
                        {"average", to_string(r.average)},
                        {"mu", to_string(r.mu)},
                        {"standard_count", r.standard_count},
                        {"expected_count", r.expected_count},
                        {"count_deviates", r.count_deviates}};
    if (r.chow_sign) j["chow_sign"] = *r.chow_sign;
    return j;
}

}  // namespace gitcurve
