#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strangedual/numeric.hpp"

namespace strangedual {

// Integer polynomial, coefficients stored lowest degree first.  The leading
// coefficient is nonzero unless the polynomial is zero (empty coefficient
// vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    // c * t^deg
    static IntPoly monomial(Int c, std::size_t deg);
    static IntPoly constant(Int c) { return monomial(std::move(c), 0); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Coefficient of t^k (zero beyond the degree).
    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;

    bool operator==(const IntPoly& o) const = default;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;

    // Quotient when the division is exact, absent otherwise.  Requires a
    // nonzero divisor.
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    // Human-readable rendering, e.g. "t^2 - t + 1".
    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
};

}  // namespace strangedual
