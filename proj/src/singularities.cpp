#include "strangedual/singularities.hpp"

#include <stdexcept>

namespace strangedual::sing {

int SingularityRecord::subscript() const {
    return std::stoi(name.substr(1));
}

const std::vector<SingularityRecord>& table() {
    static const std::vector<SingularityRecord> rows = {
        {"E12", {{6, 14, 21}, 42}, {2, 3, 7}, {2, 3, 7}, "E12"},
        {"E13", {{4, 10, 15}, 30}, {2, 4, 5}, {2, 3, 8}, "Z11"},
        {"Z11", {{6, 8, 15}, 30}, {2, 3, 8}, {2, 4, 5}, "E13"},
        {"E14", {{3, 8, 12}, 24}, {3, 3, 4}, {2, 3, 9}, "Q10"},
        {"Q10", {{6, 8, 9}, 24}, {2, 3, 9}, {3, 3, 4}, "E14"},
        {"Z12", {{4, 6, 11}, 22}, {2, 4, 6}, {2, 4, 6}, "Z12"},
        {"W12", {{4, 5, 10}, 20}, {2, 5, 5}, {2, 5, 5}, "W12"},
        {"Z13", {{3, 5, 9}, 18}, {3, 3, 5}, {2, 4, 7}, "Q11"},
        {"Q11", {{4, 6, 7}, 18}, {2, 4, 7}, {3, 3, 5}, "Z13"},
        {"W13", {{3, 4, 8}, 16}, {3, 4, 4}, {2, 5, 6}, "S11"},
        {"S11", {{4, 5, 6}, 16}, {2, 5, 6}, {3, 4, 4}, "W13"},
        {"Q12", {{3, 5, 6}, 15}, {3, 3, 6}, {3, 3, 6}, "Q12"},
        {"S12", {{3, 4, 5}, 13}, {3, 4, 5}, {3, 4, 5}, "S12"},
        {"U12", {{3, 4, 4}, 12}, {4, 4, 4}, {4, 4, 4}, "U12"},
    };
    return rows;
}

const SingularityRecord& record(const std::string& name) {
    for (const auto& r : table())
        if (r.name == name) return r;
    throw std::out_of_range("unknown singularity: " + name);
}

const SingularityRecord& strange_dual(const std::string& name) {
    return record(record(name).dual);
}

int milnor_number(const SingularityRecord& r) {
    return r.gabrielov[0] + r.gabrielov[1] + r.gabrielov[2];
}

Rat milnor_product(const WeightSystem& ws) {
    Rat prod = 1;
    for (int a : ws.weights) {
        Rat f(ws.h, a);
        f.canonicalize();
        prod *= f - 1;
    }
    return prod;
}

int gorenstein_parameter(const std::vector<int>& weights, int h) {
    if (weights.empty()) throw std::invalid_argument("gorenstein_parameter: no weights");
    int s = 0;
    for (int w : weights) s += w;
    return s - h;
}

RationalSeries hilbert_series(const std::vector<int>& weights, int h) {
    for (int w : weights)
        if (w <= 0) throw std::domain_error("hilbert_series: weights must be positive");
    IntPoly num = IntPoly::constant(1) - IntPoly::monomial(1, static_cast<std::size_t>(h));
    IntPoly den = IntPoly::constant(1);
    for (int w : weights)
        den = den * (IntPoly::constant(1) - IntPoly::monomial(1, static_cast<std::size_t>(w)));
    return {num, den};
}

std::vector<Int> series_coeffs(const RationalSeries& s, std::size_t n) {
    const Int d0 = s.denominator.coeff(0);
    if (d0 != 1 && d0 != -1)
        throw std::invalid_argument("series_coeffs: denominator constant term must be +-1");
    std::vector<Int> c(n + 1);
    for (std::size_t e = 0; e <= n; ++e) {
        Int acc = s.numerator.coeff(e);
        for (std::size_t k = 1; k <= e; ++k) acc -= s.denominator.coeff(k) * c[e - k];
        c[e] = d0 == 1 ? acc : -acc;
    }
    return c;
}

LElement l_normal_form(const std::array<long, 3>& x_coeffs, long c_coeff,
                       const std::array<int, 3>& p) {
    LElement e;
    e.ell = c_coeff;
    for (int i = 0; i < 3; ++i) {
        if (p[i] < 2) throw std::domain_error("l_normal_form: orders must be >= 2");
        long a = x_coeffs[i] % p[i];
        if (a < 0) a += p[i];
        e.arm[i] = a;
        e.ell += (x_coeffs[i] - a) / p[i];  // carry via p_i * x_i = c
    }
    return e;
}

LElement dualizing_element(const std::array<int, 3>& p) {
    return l_normal_form({-1, -1, -1}, 1, p);
}

nlohmann::ordered_json table_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : table()) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["weights"] = r.ws.weights;
        row["h"] = r.ws.h;
        row["dolgachev"] = r.dolgachev;
        row["gabrielov"] = r.gabrielov;
        row["dual"] = r.dual;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace strangedual::sing
