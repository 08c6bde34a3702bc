#include <doctest.h>

#include <random>

#include "qspin/error.hpp"
#include "qspin/qseries.hpp"

using namespace qspin;

namespace {

const sym_coeff a = sym_coeff::variable(symbol::a);
const sym_coeff z = sym_coeff::variable(symbol::z);
const sym_coeff rho = sym_coeff::variable(symbol::rho);

// Symbol-free series from its integer coefficients.
qseries ints(std::initializer_list<long> cs, int order)
{
    qseries s(order);
    int k = 0;
    for (long c : cs)
        s.set_coeff(k++, c);
    return s;
}

errc code_of(auto&& f)
{
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("no qspin::error thrown");
    return errc::invalid_argument;
}

// Naive integer product of (1 - q^k) over k in [from, N] with the given step.
std::vector<long> naive_product(int from, int step, int order)
{
    std::vector<long> p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = 1;
    for (int k = from; k <= order; k += step)
        for (int i = order; i >= k; --i)
            p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - k)];
    return p;
}

qseries random_unit_series(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> val(-3, 3), e(0, 2), pick(0, 3);
    qseries s(order);
    s.set_coeff(0, pick(rng) % 2 ? 1 : -1);
    for (int k = 1; k <= order; ++k) {
        sym_coeff c = val(rng);
        if (pick(rng) == 0)
            c += sym_coeff::from_term(monomial::of(symbol::z, e(rng)) * monomial::of(symbol::a, e(rng)),
                                      val(rng));
        s.set_coeff(k, c);
    }
    return s;
}

} // namespace

TEST_CASE("add and subtract")
{
    CHECK(ints({1, 1}, 2) + ints({0, 1}, 2) == ints({1, 2, 0}, 2));
    const auto x = qseries::term(z, 1, 3) + qseries::one(3);
    CHECK((x - x).is_zero());
    CHECK(code_of([] { (void)(qseries(5) + qseries(6)); }) == errc::order_mismatch);
    CHECK(code_of([] { (void)(qseries(5) * qseries(6)); }) == errc::order_mismatch);
}

TEST_CASE("multiply")
{
    CHECK(ints({1, -1}, 3) * ints({1, 1, 1, 1}, 3) == qseries::one(3));
    const auto za = z * a;
    CHECK((qseries::one(4) - qseries::term(za, 0, 4)) * qseries::one(4) ==
          qseries::one(4) - qseries::term(za, 0, 4));

    // (1 - rho)(1 - rho q) at order 1
    const auto f0 = qseries::one(1) - qseries::term(rho, 0, 1);
    const auto f1 = qseries::one(1) - qseries::term(rho, 1, 1);
    const auto p = f0 * f1;
    CHECK(p.coeff(0) == sym_coeff(1) - rho);
    CHECK(p.coeff(1) == rho * rho - rho);
}

TEST_CASE("reciprocal")
{
    CHECK(reciprocal(ints({1, -1}, 4)) == ints({1, 1, 1, 1, 1}, 4));
    CHECK(reciprocal(ints({1, 0, 1}, 5)) == ints({1, 0, -1, 0, 1, 0}, 5));

    const auto za = z * a;
    const auto inv = reciprocal(qseries::one(6) - qseries::term(za, 1, 6));
    sym_coeff power = 1;
    for (int k = 0; k <= 6; ++k, power *= za)
        CHECK(inv.coeff(k) == power);

    CHECK(code_of([] { (void)reciprocal(ints({2, 1}, 3)); }) == errc::non_unit_constant_term);
    CHECK(code_of([] { (void)reciprocal(ints({0, 1}, 3)); }) == errc::non_unit_constant_term);
    CHECK(code_of([&] { (void)reciprocal(qseries::term(sym_coeff(1) + z, 0, 3)); }) ==
          errc::non_unit_constant_term);
    CHECK(reciprocal(ints({-1, 1}, 3)) == ints({-1, -1, -1, -1}, 3));
}

TEST_CASE("reciprocal of random unit series")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = random_unit_series(rng, 12);
        CHECK(x * reciprocal(x) == qseries::one(12));
    }
}

TEST_CASE("finite Pochhammer")
{
    CHECK(poch_finite(poch_base::symbolic(1, symbol::z, 1, 0), 0, 1, 4) == qseries::one(4));
    // (1 - q)(1 - q^2), expanded by hand
    CHECK(poch_finite(poch_base::q_power(1, 1), 2, 1, 3) == ints({1, -1, -1, 1}, 3));
    const auto za = poch_base(z * a, 0);
    CHECK(poch_finite(za, 1, 1, 3) == qseries::one(3) - qseries::term(z * a, 0, 3));
    CHECK(code_of([] { (void)poch_base(sym_coeff(2), 0); }) == errc::invalid_poch_base);
    CHECK(code_of([] { (void)poch_base(z + a, 0); }) == errc::invalid_poch_base);
}

TEST_CASE("finite Pochhammer telescopes")
{
    const poch_base bases[] = {poch_base::q_power(1, 1), poch_base::symbolic(-1, symbol::a, 1, 1),
                               poch_base(z * a, 0), poch_base::symbolic(1, symbol::z, -1, 2)};
    for (const auto& base : bases)
        for (int step : {1, 2})
            for (int n = 0; n <= 10; ++n) {
                const int order = 14;
                const auto next = poch_finite(base, n + 1, step, order);
                const auto factor = qseries::one(order) -
                                    qseries::term(base.coefficient(), base.q_valuation() + step * n, order);
                CHECK(next == poch_finite(base, n, step, order) * factor);
            }
}

TEST_CASE("infinite Pochhammer")
{
    // Euler's pentagonal theorem: both a naive product and the exponent
    // formula k(3k -+ 1)/2 must agree with the library.
    const int order = 40;
    const auto euler = poch_infinite(poch_base::q_power(1, 1), 1, order);
    const auto naive = naive_product(1, 1, order);
    std::vector<long> pentagonal(static_cast<std::size_t>(order) + 1, 0);
    pentagonal[0] = 1;
    for (int k = 1; k * (3 * k - 1) / 2 <= order; ++k) {
        const long sign = k % 2 ? -1 : 1;
        pentagonal[static_cast<std::size_t>(k * (3 * k - 1) / 2)] += sign;
        if (k * (3 * k + 1) / 2 <= order)
            pentagonal[static_cast<std::size_t>(k * (3 * k + 1) / 2)] += sign;
    }
    for (int k = 0; k <= order; ++k) {
        CHECK(euler.coeff(k) == sym_coeff(naive[static_cast<std::size_t>(k)]));
        CHECK(euler.coeff(k) == sym_coeff(pentagonal[static_cast<std::size_t>(k)]));
    }
    CHECK(poch_infinite(poch_base::q_power(1, 1), 1, 5) == ints({1, -1, -1, 0, 0, 1}, 5));

    // (-zq; q^2)_inf = (1 + zq)(1 + zq^3)... at order 3
    const auto p = poch_infinite(poch_base::symbolic(-1, symbol::z, 1, 1), 2, 3);
    CHECK(p == qseries::one(3) + qseries::term(z, 1, 3) + qseries::term(z, 3, 3));

    CHECK(code_of([] { (void)poch_infinite(poch_base(z * a, 0), 1, 5); }) == errc::zero_valuation_base);
}

TEST_CASE("specialize")
{
    bindings aq_z1;
    aq_z1.bind(symbol::a, 1, 1).bind(symbol::z, 1, 0);
    const auto x = qseries::one(4) - qseries::term(z * a, 1, 4);
    CHECK(specialize(x, aq_z1) == ints({1, 0, -1}, 4));

    bindings zm1;
    zm1.bind(symbol::z, -1, 0);
    CHECK(specialize(qseries::term(sym_coeff::variable(symbol::z, -1), 1, 3), zm1) == ints({0, -1}, 3));

    // Terms pushed beyond the order are dropped.
    CHECK(specialize(qseries::term(a * a, 3, 4), aq_z1).is_zero());

    bindings z_only;
    z_only.bind(symbol::z, 1, 0);
    CHECK(code_of([&] { (void)specialize(x, z_only); }) == errc::unbound_symbol);
}

TEST_CASE("coefficient access and comparison")
{
    const auto x = ints({1, 2, 3}, 4);
    CHECK(x.coeff(2) == sym_coeff(3));
    CHECK(code_of([&] { (void)x.coeff(5); }) == errc::index_out_of_order);
    CHECK(code_of([&] { (void)x.coeff(-1); }) == errc::index_out_of_order);
    CHECK(series_eq(x, x).equal);
    const auto y = qseries::one(7) + qseries::term(1, 7, 7);
    const auto cmp = series_eq(qseries::one(7), y);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.first_mismatch == 7);
    CHECK(code_of([&] { (void)series_eq(qseries(3), qseries(4)); }) == errc::order_mismatch);
    CHECK(x.valuation() == 0);
    CHECK(qseries(3).valuation() == std::nullopt);
}

TEST_CASE("rho^n coefficient of (rho)_n")
{
    // The leading rho-coefficient of (rho; q)_n is (-1)^n q^{n(n-1)/2}.
    const int order = 30;
    for (int n = 0; n <= 8; ++n) {
        const auto p = poch_finite(poch_base(rho, 0), n, 1, order);
        for (int k = 0; k <= order; ++k) {
            mpz_class c = 0;
            for (const auto& [m, v] : p.coeff(k).terms())
                if (m == monomial::of(symbol::rho, n))
                    c += v;
            const long want = (k == n * (n - 1) / 2) ? (n % 2 ? -1 : 1) : 0;
            CHECK(c == want);
        }
    }
}

TEST_CASE("shift, scale, order change")
{
    const auto x = ints({1, 2, 3}, 3);
    CHECK(x.shifted(2) == ints({0, 0, 1, 2}, 3));
    CHECK(x.with_order(1) == ints({1, 2}, 1));
    CHECK(x.with_order(5) == ints({1, 2, 3}, 5));
    CHECK(x.scaled(z).coeff(1) == z * sym_coeff(2));
    CHECK(x.times_binomial(1, 1) == ints({1, 1, 1, -3}, 3));
    CHECK(x.times_binomial(z, 0) == x.scaled(sym_coeff(1) - z));
}
