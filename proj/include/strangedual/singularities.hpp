#pragma once

#include <array>
#include <string>
#include <vector>

#include "strangedual/intpoly.hpp"
#include "strangedual/numeric.hpp"

#include "json.hpp"

namespace strangedual::sing {

// Weights of the variables and the degree h of a weighted-homogeneous
// polynomial.
struct WeightSystem {
    std::vector<int> weights;
    int h = 0;
    bool operator==(const WeightSystem&) const = default;
};

// One of the fourteen exceptional unimodal singularities: weight system,
// Dolgachev triple, Gabrielov triple, and Arnold's strange dual.
struct SingularityRecord {
    std::string name;
    WeightSystem ws;
    std::array<int, 3> dolgachev{};
    std::array<int, 3> gabrielov{};
    std::string dual;

    // Numeric part of the name (the Milnor number).
    int subscript() const;
};

// The fourteen records, in the conventional order (E12 first, U12 last).
const std::vector<SingularityRecord>& table();

// Lookup by name; throws std::out_of_range for unknown names.
const SingularityRecord& record(const std::string& name);

// The record dual to the named one.  Involutive.
const SingularityRecord& strange_dual(const std::string& name);

// Sum of the Gabrielov triple.
int milnor_number(const SingularityRecord& r);

// prod_i (h / a_i - 1), evaluated exactly over the rationals.  Equals the
// Milnor number for every weighted-homogeneous isolated singularity.
Rat milnor_product(const WeightSystem& ws);

// Sum of the weights minus h.
int gorenstein_parameter(const std::vector<int>& weights, int h);

// Power series with integral coefficients: denominator(0) must be +-1.
struct RationalSeries {
    IntPoly numerator;
    IntPoly denominator;
};

// Hilbert series (1 - t^h) / prod_i (1 - t^{a_i}) of the graded hypersurface
// ring with the given weights and degree.
RationalSeries hilbert_series(const std::vector<int>& weights, int h);

// Coefficients c_0 .. c_n of the series expansion.
std::vector<Int> series_coeffs(const RationalSeries& s, std::size_t n);

// Element of the rank-one abelian group L on generators x1, x2, x3, c with
// relations p_i * x_i = c, written in the unique normal form
// ell * c + sum a_i * x_i with 0 <= a_i < p_i.
struct LElement {
    long ell = 0;
    std::array<long, 3> arm{};
    bool operator==(const LElement&) const = default;
};

// Normal form of x_coeffs . (x1,x2,x3) + c_coeff * c.  Each p_i must be >= 2.
LElement l_normal_form(const std::array<long, 3>& x_coeffs, long c_coeff,
                       const std::array<int, 3>& p);

// Normal form of the dualizing element c - x1 - x2 - x3.
LElement dualizing_element(const std::array<int, 3>& p);

// The table as a JSON array of {name, weights, h, dolgachev, gabrielov, dual}.
nlohmann::ordered_json table_json();

}  // namespace strangedual::sing
