#include "qtcomb/polynomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "qtcomb/checked.hpp"

namespace qtcomb {

namespace {

void append_power(std::ostringstream& out, char var, int exp, bool& leading) {
    if (exp == 0) return;
    if (!leading) out << '*';
    out << var;
    if (exp > 1) out << '^' << exp;
    leading = false;
}

}  // namespace

Polynomial::Polynomial(Coeff constant) {
    add_term({}, constant);
}

Polynomial::Polynomial(Coeff coeff, Monomial m) {
    add_term(m, coeff);
}

Polynomial Polynomial::q(int exp) {
    return {1, Monomial{exp, 0, 0}};
}

Polynomial Polynomial::t(int exp) {
    return {1, Monomial{0, exp, 0}};
}

Polynomial Polynomial::z(int exp) {
    return {1, Monomial{0, 0, exp}};
}

Polynomial::Coeff Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coeff c) {
    if (m.q < 0 || m.t < 0 || m.z < 0)
        throw std::invalid_argument("negative exponent in polynomial term");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        if (c == std::numeric_limits<Coeff>::min())
            throw std::overflow_error("polynomial coefficient overflow in negation");
        add_term(m, -c);
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r -= *this;
    return r;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial r;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            r.add_term(Monomial{ma.q + mb.q, ma.t + mb.t, ma.z + mb.z}, checked_mul(ca, cb));
    return r;
}

Polynomial Polynomial::substitute_q(Coeff value) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        r.add_term(Monomial{0, m.t, m.z}, checked_mul(c, checked_pow(value, m.q)));
    return r;
}

Polynomial Polynomial::substitute_z(Coeff value) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        r.add_term(Monomial{m.q, m.t, 0}, checked_mul(c, checked_pow(value, m.z)));
    return r;
}

Polynomial::Coeff Polynomial::coefficient_sum() const {
    Coeff total = 0;
    for (const auto& [m, c] : terms_) total = checked_add(total, c);
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        auto mag = c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        bool leading = true;
        if (mag != 1 || (m.q == 0 && m.t == 0 && m.z == 0)) {
            out << mag;
            leading = false;
        }
        append_power(out, 'q', m.q, leading);
        append_power(out, 't', m.t, leading);
        append_power(out, 'z', m.z, leading);
    }
    return out.str();
}

Polynomial t_analog(int n) {
    if (n < 0) throw std::invalid_argument("t_analog: n must be nonnegative");
    Polynomial r;
    for (int i = 0; i < n; ++i) r.add_term(Monomial{0, i, 0}, 1);
    return r;
}

Polynomial q_analog(int n) {
    if (n < 0) throw std::invalid_argument("q_analog: n must be nonnegative");
    Polynomial r;
    for (int i = 0; i < n; ++i) r.add_term(Monomial{i, 0, 0}, 1);
    return r;
}

Polynomial t_factorial(int n) {
    if (n < 0) throw std::invalid_argument("t_factorial: n must be nonnegative");
    Polynomial r{1};
    for (int i = 1; i <= n; ++i) r = r * t_analog(i);
    return r;
}

}  // namespace qtcomb
