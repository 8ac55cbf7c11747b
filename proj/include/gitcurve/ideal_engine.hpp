#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitcurve/families.hpp"
#include "gitcurve/rational.hpp"

namespace gitcurve {

using Monomial = std::vector<int>;

std::string monomial_string(const Monomial& m);
Monomial parse_monomial(const std::string& text, int num_coordinates);

struct MonomialOrder {
    OneParamSubgroup weights;
    std::vector<int> precedence;  // precedence[0] is the largest variable; empty means x_0 > x_1 > ...

    long weight(const Monomial& m) const;
    // true iff a < b
    bool less(const Monomial& a, const Monomial& b) const;
};

MonomialOrder make_order(const OneParamSubgroup& rho);

struct IdealSlice {
    int degree = 0;
    int num_coordinates = 0;
    MonomialOrder order;
    std::vector<Monomial> monomials;  // ascending in the order
    std::vector<bool> standard;       // parallel to monomials
    int rank = 0;                     // dimension of the image, i.e. number of standard monomials
};

int default_max_degree();

std::vector<Monomial> monomials_of_degree(int n, int m);
IdealSlice evaluate_slice(const Configuration& c, int m, const MonomialOrder& ord, int max_degree = default_max_degree());
std::vector<Monomial> initial_monomials(const IdealSlice& s);
std::vector<Monomial> standard_monomials(const IdealSlice& s);

// reduced echelon basis of I_m with columns in descending order (dense elimination)
std::vector<std::map<std::size_t, Rational>> ideal_basis(const Configuration& c, int m, const MonomialOrder& ord);

struct IndexReport {
    int m = 0;
    Rational weight_sum;
    Rational average;
    Rational mu;
    std::optional<int> chow_sign;
    long standard_count = 0;
    long expected_count = 0;
    bool count_deviates = false;
    Rational block_weight_sum;  // split mode: rosary block part
    long block_count = 0;
};

long hilbert_polynomial(int g, int m);
IndexReport hilbert_index(const Configuration& c, const OneParamSubgroup& rho, int m,
                          int max_degree = default_max_degree());
// reports for several degrees; chow_sign is filled when degrees 2 and 3 are both present
std::vector<IndexReport> index_series(const Configuration& c, const OneParamSubgroup& rho, const std::vector<int>& degrees,
                                      int max_degree = default_max_degree());

Rational extrapolate_index(const Rational& mu2, const Rational& mu3, int m);
int chow_index_sign(const Rational& mu2, const Rational& mu3);
Rational point_index(const std::vector<int>& support, const OneParamSubgroup& rho);

nlohmann::json to_json(const IndexReport& r);

}  // namespace gitcurve
