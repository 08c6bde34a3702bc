#pragma once

// Truncated power series in q with sym_coeff coefficients, dense in the
// q-exponent 0..order (inclusive). Arithmetic between series of different
// orders is a contract violation, never an implicit min.

#include <cstdint>
#include <optional>
#include <vector>

#include "qspin/symcoeff.hpp"

namespace qspin {

class qseries {
public:
    // Zero series of the given order.
    explicit qseries(int order);

    static qseries zero(int order) { return qseries(order); }
    static qseries one(int order);
    // c * q^k, or zero when k > order.
    static qseries term(const sym_coeff& c, int k, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<sym_coeff>& coeffs() const noexcept { return coeffs_; }

    // Throws index_out_of_order unless 0 <= k <= order.
    const sym_coeff& coeff(int k) const;
    void set_coeff(int k, sym_coeff c);
    void add_to_coeff(int k, const sym_coeff& c);

    bool is_zero() const noexcept;
    // True when every coefficient is a plain integer.
    bool is_symbol_free() const noexcept;
    // Smallest q-exponent with a nonzero coefficient.
    std::optional<int> valuation() const noexcept;

    qseries operator-() const;
    qseries& operator+=(const qseries& y);
    qseries& operator-=(const qseries& y);
    friend qseries operator+(qseries x, const qseries& y) { return x += y; }
    friend qseries operator-(qseries x, const qseries& y) { return x -= y; }
    friend qseries operator*(const qseries& x, const qseries& y);
    qseries& operator*=(const qseries& y) { return *this = *this * y; }

    // Coefficient-wise scaling.
    qseries scaled(const sym_coeff& c) const;
    // Multiplication by q^k, keeping the order.
    qseries shifted(int k) const;
    // Same coefficients at a different order (padded with zeros or cut).
    qseries with_order(int order) const;
    // Coefficient-wise s -> -s.
    qseries reflect(symbol s) const;
    // Multiplication by (1 - c q^e), e >= 0, in O(order) coefficient updates.
    qseries times_binomial(const sym_coeff& c, int e) const;

    friend bool operator==(const qseries&, const qseries&) = default;

private:
    std::vector<sym_coeff> coeffs_;
};

struct series_comparison {
    bool equal = true;
    std::optional<int> first_mismatch; // smallest differing q-exponent
};

// Throws order_mismatch for series of different orders.
series_comparison series_eq(const qseries& x, const qseries& y);

// y with x * y = 1. Requires the constant term to be the integer +1 or -1;
// otherwise throws non_unit_constant_term.
qseries reciprocal(const qseries& x);

// The single term c * q^v of a q-Pochhammer argument; c must be +-1 times a
// monomial, v >= 0.
class poch_base {
public:
    poch_base(sym_coeff coefficient, int q_valuation);

    // sign * q^v with no symbols.
    static poch_base q_power(int sign, int q_valuation);
    // sign * s^e * q^v.
    static poch_base symbolic(int sign, symbol s, int exponent, int q_valuation);

    const sym_coeff& coefficient() const noexcept { return coefficient_; }
    int q_valuation() const noexcept { return q_valuation_; }

    poch_base operator*(const poch_base& other) const;

private:
    sym_coeff coefficient_;
    int q_valuation_;
};

// prod_{i=0}^{n-1} (1 - base * q^{step*i}) truncated at order.
qseries poch_finite(const poch_base& base, int n, int step, int order);

// prod_{i>=0} (1 - base * q^{step*i}); needs base valuation >= 1
// (zero_valuation_base otherwise). Factors beyond the order are skipped.
qseries poch_infinite(const poch_base& base, int step, int order);

// Fully binds every coefficient and folds the resulting q-powers back into
// the grading; terms pushed beyond the order are dropped. The result is
// symbol-free. Errors propagate from substitute().
qseries specialize(const qseries& x, const bindings& b);

} // namespace qspin
