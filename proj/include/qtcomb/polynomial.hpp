#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace qtcomb {

// Exponent triple of a single term. Ordering is lexicographic on
// (q, t, z); this is the canonical term order used everywhere
// (serialization, printing, iteration).
struct Monomial {
    int q = 0;
    int t = 0;
    int z = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial in the variables q, t, z with integer coefficients.
// Zero coefficients are never stored, so equality is structural.
// Coefficient arithmetic is checked and throws std::overflow_error
// rather than wrapping.
class Polynomial {
  public:
    using Coeff = std::int64_t;
    using TermMap = std::map<Monomial, Coeff>;

    Polynomial() = default;
    Polynomial(Coeff constant);  // NOLINT: implicit by design, 0 and 1 read naturally
    Polynomial(Coeff coeff, Monomial m);

    static Polynomial q(int exp = 1);
    static Polynomial t(int exp = 1);
    static Polynomial z(int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(const Monomial& m) const;

    // Accumulates c * m, keeping canonical form.
    void add_term(const Monomial& m, Coeff c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Evaluates q at an integer value and recollects terms in t, z.
    Polynomial substitute_q(Coeff value) const;

    // Evaluates z at an integer value and recollects terms in q, t.
    Polynomial substitute_z(Coeff value) const;

    // Sum of all coefficients, i.e. the evaluation at q = t = z = 1.
    Coeff coefficient_sum() const;

    // Human-readable form, terms in canonical order, e.g. "q*t^2 + 2*z - 1".
    std::string str() const;

  private:
    TermMap terms_;
};

// [n]_t = 1 + t + ... + t^(n-1), with [0]_t = 0.
Polynomial t_analog(int n);

// [n]_q, same shape in the variable q.
Polynomial q_analog(int n);

// [n]_t! = [n]_t [n-1]_t ... [1]_t, with [0]_t! = 1.
Polynomial t_factorial(int n);

}  // namespace qtcomb
