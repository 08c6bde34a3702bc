#pragma once

// Exact sparse Laurent polynomials in the closed symbol set {a, z, b, rho}
// with arbitrary-precision integer coefficients. This is the coefficient ring
// of every q-series in the library; q itself is not a symbol here.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qspin {

enum class symbol : std::uint8_t { a, z, b, rho };

inline constexpr std::size_t symbol_count = 4;
inline constexpr std::array<symbol, symbol_count> all_symbols{symbol::a, symbol::z, symbol::b,
                                                               symbol::rho};

std::string_view symbol_name(symbol s) noexcept;
std::optional<symbol> parse_symbol(std::string_view name) noexcept;

// Dense exponent vector over the fixed symbol set. A zero slot means the
// symbol is absent, so the representation is canonical by construction.
struct monomial {
    std::array<std::int32_t, symbol_count> exponents{};

    static monomial of(symbol s, std::int32_t e = 1) noexcept
    {
        monomial m;
        m.exponents[static_cast<std::size_t>(s)] = e;
        return m;
    }

    std::int32_t operator[](symbol s) const noexcept
    {
        return exponents[static_cast<std::size_t>(s)];
    }

    bool is_one() const noexcept
    {
        for (auto e : exponents)
            if (e != 0)
                return false;
        return true;
    }

    friend monomial operator*(const monomial& x, const monomial& y) noexcept
    {
        monomial r;
        for (std::size_t i = 0; i < symbol_count; ++i)
            r.exponents[i] = x.exponents[i] + y.exponents[i];
        return r;
    }

    // Lexicographic on (a, z, b, rho).
    friend auto operator<=>(const monomial&, const monomial&) = default;
};

std::string to_string(const monomial& m);

class sym_coeff {
public:
    using term = std::pair<monomial, mpz_class>;

    sym_coeff() = default;
    sym_coeff(long value); // NOLINT: integers embed implicitly
    explicit sym_coeff(const mpz_class& value);

    static sym_coeff from_term(const monomial& m, const mpz_class& c);
    static sym_coeff variable(symbol s, std::int32_t exponent = 1);
    // Sorts, merges like monomials and drops zero coefficients.
    static sym_coeff from_terms(std::vector<term> terms);

    const std::vector<term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // The integer value when no symbol occurs, otherwise nullopt.
    std::optional<mpz_class> as_integer() const;
    bool is_integer() const noexcept;
    // True for +-1 times a single monomial.
    bool is_signed_monomial() const noexcept;
    bool is_canonical() const noexcept;

    // Image under s -> -s: flips the sign of every term with odd exponent of s.
    sym_coeff reflect(symbol s) const;

    sym_coeff operator-() const;
    sym_coeff& operator+=(const sym_coeff& y);
    sym_coeff& operator-=(const sym_coeff& y);
    sym_coeff& operator*=(const sym_coeff& y);

    friend sym_coeff operator+(sym_coeff x, const sym_coeff& y) { return x += y; }
    friend sym_coeff operator-(sym_coeff x, const sym_coeff& y) { return x -= y; }
    friend sym_coeff operator*(const sym_coeff& x, const sym_coeff& y);
    friend bool operator==(const sym_coeff&, const sym_coeff&) = default;

    // sum_i x_i * y_i gathered into a single canonicalization pass.
    static sym_coeff
    sum_of_products(std::span<const std::pair<const sym_coeff*, const sym_coeff*>> pairs);

private:
    std::vector<term> terms_; // sorted by monomial, no zero coefficient
};

std::string to_string(const sym_coeff& x);

struct binding {
    int sign = 1;   // +1 or -1
    int qpower = 0; // >= 0
};

// Symbol -> sign * q^qpower assignments.
class bindings {
public:
    bindings() = default;

    bindings& bind(symbol s, int sign, int qpower);
    const std::optional<binding>& operator[](symbol s) const noexcept
    {
        return slots_[static_cast<std::size_t>(s)];
    }

private:
    std::array<std::optional<binding>, symbol_count> slots_{};
};

// One (q-exponent shift, integer) pair per distinct q-power of the image.
using q_image = std::vector<std::pair<std::int64_t, mpz_class>>;

// Image of x under the bindings; sorted by shift, merged, zeros removed.
// Throws unbound_symbol or negative_valuation.
q_image substitute(const sym_coeff& x, const bindings& b);

} // namespace qspin
