#include "qspin/qseries.hpp"

#include <string>

#include "qspin/error.hpp"

namespace qspin {

namespace {

void require_same_order(const qseries& x, const qseries& y)
{
    if (x.order() != y.order())
        throw error(errc::order_mismatch, "series orders " + std::to_string(x.order()) + " and " +
                                              std::to_string(y.order()) + " differ");
}

} // namespace

qseries::qseries(int order)
{
    if (order < 0)
        throw error(errc::invalid_argument, "series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

qseries qseries::one(int order)
{
    qseries r(order);
    r.coeffs_[0] = 1;
    return r;
}

qseries qseries::term(const sym_coeff& c, int k, int order)
{
    if (k < 0)
        throw error(errc::invalid_argument, "negative q-exponent");
    qseries r(order);
    if (k <= order)
        r.coeffs_[static_cast<std::size_t>(k)] = c;
    return r;
}

const sym_coeff& qseries::coeff(int k) const
{
    if (k < 0 || k > order())
        throw error(errc::index_out_of_order, "q-exponent " + std::to_string(k) +
                                                  " outside 0.." + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

void qseries::set_coeff(int k, sym_coeff c)
{
    (void)coeff(k);
    coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

void qseries::add_to_coeff(int k, const sym_coeff& c)
{
    (void)coeff(k);
    coeffs_[static_cast<std::size_t>(k)] += c;
}

bool qseries::is_zero() const noexcept
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool qseries::is_symbol_free() const noexcept
{
    for (const auto& c : coeffs_)
        if (!c.is_integer())
            return false;
    return true;
}

std::optional<int> qseries::valuation() const noexcept
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            return static_cast<int>(k);
    return std::nullopt;
}

qseries qseries::operator-() const
{
    qseries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

qseries& qseries::operator+=(const qseries& y)
{
    require_same_order(*this, y);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += y.coeffs_[k];
    return *this;
}

qseries& qseries::operator-=(const qseries& y)
{
    require_same_order(*this, y);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= y.coeffs_[k];
    return *this;
}

qseries operator*(const qseries& x, const qseries& y)
{
    require_same_order(x, y);
    const int n = x.order();
    qseries r(n);
    std::vector<std::pair<const sym_coeff*, const sym_coeff*>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        pairs.clear();
        for (int i = 0; i <= k; ++i) {
            const auto& xi = x.coeffs_[static_cast<std::size_t>(i)];
            const auto& yj = y.coeffs_[static_cast<std::size_t>(k - i)];
            if (!xi.is_zero() && !yj.is_zero())
                pairs.emplace_back(&xi, &yj);
        }
        r.coeffs_[static_cast<std::size_t>(k)] = sym_coeff::sum_of_products(pairs);
    }
    return r;
}

qseries qseries::scaled(const sym_coeff& c) const
{
    qseries r = *this;
    for (auto& x : r.coeffs_)
        if (!x.is_zero())
            x = x * c;
    return r;
}

qseries qseries::shifted(int k) const
{
    if (k < 0)
        throw error(errc::invalid_argument, "negative shift");
    qseries r(order());
    for (int i = 0; i + k <= order(); ++i)
        r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

qseries qseries::with_order(int order) const
{
    qseries r(order);
    for (int i = 0; i <= order && i <= this->order(); ++i)
        r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

qseries qseries::reflect(symbol s) const
{
    qseries r = *this;
    for (auto& c : r.coeffs_)
        c = c.reflect(s);
    return r;
}

qseries qseries::times_binomial(const sym_coeff& c, int e) const
{
    if (e < 0)
        throw error(errc::invalid_argument, "negative q-exponent in binomial factor");
    qseries r = *this;
    // Descending k keeps coeffs_[k - e] unmodified when e > 0.
    for (int k = order(); k >= e; --k) {
        const auto& src = coeffs_[static_cast<std::size_t>(k - e)];
        if (!src.is_zero())
            r.coeffs_[static_cast<std::size_t>(k)] -= c * src;
    }
    return r;
}

series_comparison series_eq(const qseries& x, const qseries& y)
{
    require_same_order(x, y);
    for (int k = 0; k <= x.order(); ++k)
        if (x.coeff(k) != y.coeff(k))
            return {false, k};
    return {};
}

qseries reciprocal(const qseries& x)
{
    const auto c0 = x.coeff(0).as_integer();
    if (!c0 || (*c0 != 1 && *c0 != -1))
        throw error(errc::non_unit_constant_term,
                    "constant term " + to_string(x.coeff(0)) + " is not +1 or -1");
    const sym_coeff x0(*c0);
    const int n = x.order();
    qseries y(n);
    y.set_coeff(0, x0);
    std::vector<std::pair<const sym_coeff*, const sym_coeff*>> pairs;
    for (int k = 1; k <= n; ++k) {
        pairs.clear();
        for (int i = 1; i <= k; ++i) {
            const auto& xi = x.coeffs()[static_cast<std::size_t>(i)];
            const auto& yk = y.coeffs()[static_cast<std::size_t>(k - i)];
            if (!xi.is_zero() && !yk.is_zero())
                pairs.emplace_back(&xi, &yk);
        }
        auto s = sym_coeff::sum_of_products(pairs);
        // y_k = -x_0 * s, and x_0 = +-1
        y.set_coeff(k, *c0 == 1 ? -s : s);
    }
    return y;
}

poch_base::poch_base(sym_coeff coefficient, int q_valuation)
    : coefficient_(std::move(coefficient)), q_valuation_(q_valuation)
{
    if (!coefficient_.is_signed_monomial())
        throw error(errc::invalid_poch_base,
                    "Pochhammer argument must be +-1 times a monomial, got " +
                        to_string(coefficient_));
    if (q_valuation_ < 0)
        throw error(errc::invalid_poch_base, "Pochhammer argument has negative q-valuation");
}

poch_base poch_base::q_power(int sign, int q_valuation)
{
    return {sym_coeff(static_cast<long>(sign)), q_valuation};
}

poch_base poch_base::symbolic(int sign, symbol s, int exponent, int q_valuation)
{
    return {sym_coeff::from_term(monomial::of(s, exponent), sign), q_valuation};
}

poch_base poch_base::operator*(const poch_base& other) const
{
    return {coefficient_ * other.coefficient_, q_valuation_ + other.q_valuation_};
}

qseries poch_finite(const poch_base& base, int n, int step, int order)
{
    if (n < 0 || step < 1)
        throw error(errc::invalid_argument, "poch_finite needs n >= 0 and step >= 1");
    qseries r = qseries::one(order);
    for (int i = 0; i < n; ++i) {
        const long e = base.q_valuation() + static_cast<long>(step) * i;
        if (e > order) {
            // Remaining factors are 1 up to the truncation order.
            break;
        }
        r = r.times_binomial(base.coefficient(), static_cast<int>(e));
    }
    return r;
}

qseries poch_infinite(const poch_base& base, int step, int order)
{
    if (step < 1)
        throw error(errc::invalid_argument, "poch_infinite needs step >= 1");
    if (base.q_valuation() < 1)
        throw error(errc::zero_valuation_base,
                    "infinite product with q-valuation 0 argument " +
                        to_string(base.coefficient()));
    qseries r = qseries::one(order);
    for (long e = base.q_valuation(); e <= order; e += step)
        r = r.times_binomial(base.coefficient(), static_cast<int>(e));
    return r;
}

qseries specialize(const qseries& x, const bindings& b)
{
    qseries r(x.order());
    for (int k = 0; k <= x.order(); ++k) {
        const auto& c = x.coeff(k);
        if (c.is_zero())
            continue;
        for (const auto& [shift, v] : substitute(c, b)) {
            const auto target = static_cast<std::int64_t>(k) + shift;
            if (target <= x.order())
                r.add_to_coeff(static_cast<int>(target), sym_coeff(v));
        }
    }
    return r;
}

} // namespace qspin
