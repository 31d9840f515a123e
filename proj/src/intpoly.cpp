#include "strangedual/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace strangedual {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int c, std::size_t deg) {
    std::vector<Int> v(deg + 1);
    v[deg] = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) - o.coeff(k);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) return std::nullopt;

    std::vector<Int> rem = c_;
    std::vector<Int> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
    const Int& lead = divisor.c_.back();
    for (std::size_t qk = quot.size(); qk-- > 0;) {
        const Int& top = rem[qk + divisor.c_.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[qk] = q;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j)
            rem[qk + j] -= q * divisor.c_[j];
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) {
            os << var;
            if (k >= 2) os << '^' << k;
        }
    }
    return os.str();
}

}  // namespace strangedual
