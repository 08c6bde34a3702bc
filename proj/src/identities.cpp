#include "qspin/identities.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "qspin/error.hpp"

namespace qspin {

namespace {

constexpr int triangular(int n) { return n * (n + 1) / 2; }

int isqrt(int n)
{
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// A summand computed at reduced order, lifted by q^shift into the full order.
qseries lift(const qseries& s, int shift, int order)
{
    return s.with_order(order).shifted(shift);
}

sym_coeff signed_power(int sign, symbol s, int n)
{
    const long c = (sign < 0 && n % 2 != 0) ? -1 : 1;
    return sym_coeff::from_term(monomial::of(s, n), c);
}

qseries inverse_poch(const poch_base& base, int n, int step, int order)
{
    return reciprocal(poch_finite(base, n, step, order));
}

qseries q_factorial_inverse(int n, int order)
{
    return inverse_poch(poch_base::q_power(1, 1), n, 1, order);
}

poch_base za_base(int z_sign)
{
    monomial m;
    m.exponents[static_cast<std::size_t>(symbol::a)] = 1;
    m.exponents[static_cast<std::size_t>(symbol::z)] = 1;
    return {sym_coeff::from_term(m, z_sign), 0};
}

void require_order(int order)
{
    if (order < 1)
        throw error(errc::builder_precondition_violated, "identity order must be >= 1");
}

// ---- Lebesgue

qseries lebesgue_lhs(int order)
{
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        auto s = poch_finite(poch_base::symbolic(-1, symbol::a, 1, 1), n, 1, m) *
                 q_factorial_inverse(n, m);
        sum += lift(s, triangular(n), order);
    }
    return sum;
}

qseries lebesgue_rhs(int order)
{
    return poch_infinite(poch_base::symbolic(-1, symbol::a, 1, 2), 2, order) *
           reciprocal(poch_infinite(poch_base::q_power(1, 1), 2, order));
}

// ---- Ramanujan's generalized Lebesgue sum at a = sign * q^alpha.
// (-b/a)_n a^n = prod_{i<n} (a + b q^i), which keeps every factor polynomial.

qseries ramanujan_lhs(int a_sign, int a_power, int order)
{
    const auto b = sym_coeff::variable(symbol::b);
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        qseries prod = qseries::one(m);
        for (int i = 0; i < n; ++i)
            prod *= qseries::term(a_sign, a_power, m) + qseries::term(b, i, m);
        auto s = prod * q_factorial_inverse(n, m) *
                 inverse_poch(poch_base::symbolic(1, symbol::b, 1, 1), n, 1, m);
        sum += lift(s, triangular(n), order);
    }
    return sum;
}

qseries ramanujan_rhs(int a_sign, int a_power, int order)
{
    return poch_infinite(poch_base::q_power(-a_sign, a_power + 1), 1, order) *
           reciprocal(poch_infinite(poch_base::symbolic(1, symbol::b, 1, 1), 1, order));
}

// ---- Jacobi triple product

qseries jtp_lhs(int order)
{
    qseries sum(order);
    const int bound = isqrt(order);
    for (int n = -bound; n <= bound; ++n)
        sum.add_to_coeff(n * n, sym_coeff::variable(symbol::z, n));
    return sum;
}

qseries jtp_rhs(int order)
{
    return poch_infinite(poch_base::symbolic(-1, symbol::z, 1, 1), 2, order) *
           poch_infinite(poch_base::symbolic(-1, symbol::z, -1, 1), 2, order) *
           poch_infinite(poch_base::q_power(1, 2), 2, order);
}

// ---- false theta consequences of the triple product

qseries cor23_lhs(int order)
{
    qseries sum(order);
    for (int n = 1; n * n <= order; ++n)
        sum.add_to_coeff(n * n, n % 2 ? -1 : 1);
    return sum;
}

qseries cor23_rhs(int order)
{
    qseries sum(order);
    for (int n = 1; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        const auto one_plus = qseries::one(m) + qseries::term(1, n, m);
        auto s = q_factorial_inverse(n, m) * reciprocal(one_plus);
        if (n % 2)
            s = -s;
        sum += lift(s, triangular(n), order);
    }
    return sum;
}

qseries prodratio_lhs(int order)
{
    return poch_infinite(poch_base::q_power(1, 1), 1, order);
}

qseries prodratio_rhs(int order)
{
    const auto odd = poch_infinite(poch_base::q_power(1, 1), 2, order);
    return poch_infinite(poch_base::q_power(-1, 1), 1, order) * odd * odd *
           poch_infinite(poch_base::q_power(1, 2), 2, order);
}

// ---- Heine's second transformation at (a, b, c, z) = (q^A, q^B, q^C, q^D)

struct heine_params {
    int alpha, beta, gamma, delta;
};

qseries heine_lhs(const heine_params& p, int order)
{
    qseries sum(order);
    for (int n = 0; p.delta * n <= order; ++n) {
        const int m = order - p.delta * n;
        auto s = poch_finite(poch_base::q_power(1, p.alpha), n, 1, m) *
                 poch_finite(poch_base::q_power(1, p.beta), n, 1, m) *
                 q_factorial_inverse(n, m) *
                 inverse_poch(poch_base::q_power(1, p.gamma), n, 1, m);
        sum += lift(s, p.delta * n, order);
    }
    return sum;
}

qseries heine_rhs(const heine_params& p, int order)
{
    const int ratio = p.gamma - p.beta; // c/b = q^ratio
    const auto prefactor =
        poch_infinite(poch_base::q_power(1, ratio), 1, order) *
        poch_infinite(poch_base::q_power(1, p.beta + p.delta), 1, order) *
        reciprocal(poch_infinite(poch_base::q_power(1, p.gamma), 1, order)) *
        reciprocal(poch_infinite(poch_base::q_power(1, p.delta), 1, order));

    // (abz/c)_n (c/b)^n = prod_{i<n} (c/b - a z q^i), a product of
    // polynomials with nonnegative exponents even when abz/c has negative
    // q-valuation.
    qseries sum(order);
    qseries prod = qseries::one(order);
    int valuation = 0;
    for (int n = 0; valuation <= order && !prod.is_zero(); ++n) {
        auto s = prod * poch_finite(poch_base::q_power(1, p.beta), n, 1, order) *
                 q_factorial_inverse(n, order) *
                 inverse_poch(poch_base::q_power(1, p.beta + p.delta), n, 1, order);
        sum += s;
        const int e = p.alpha + p.delta + n;
        prod *= qseries::term(1, ratio, order) - qseries::term(1, e, order);
        valuation += std::min(ratio, e);
    }
    return prefactor * sum;
}

std::optional<heine_params> parse_heine(std::string_view id)
{
    constexpr std::string_view prefix = "heine:";
    if (!id.starts_with(prefix))
        return std::nullopt;
    id.remove_prefix(prefix.size());
    std::array<int, 4> v{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto* first = id.data();
        const auto* last = id.data() + id.size();
        auto [ptr, ec] = std::from_chars(first, last, v[i]);
        if (ec != std::errc{} || ptr == first)
            throw error(errc::unknown_identity, "malformed heine id");
        id.remove_prefix(static_cast<std::size_t>(ptr - first));
        if (i + 1 < v.size()) {
            if (!id.starts_with(','))
                throw error(errc::unknown_identity, "malformed heine id");
            id.remove_prefix(1);
        }
    }
    if (!id.empty())
        throw error(errc::unknown_identity, "malformed heine id");
    return heine_params{v[0], v[1], v[2], v[3]};
}

std::string heine_id(const heine_params& p)
{
    return "heine:" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," +
           std::to_string(p.gamma) + "," + std::to_string(p.delta);
}

identity_record heine_record(const heine_params& p)
{
    if (p.alpha < 0 || p.beta < 1 || p.delta < 1 || p.gamma <= p.beta)
        throw error(errc::builder_precondition_violated,
                    heine_id(p) + " needs alpha >= 0, beta >= 1, delta >= 1, gamma > beta");
    return {heine_id(p),
            "Heine's second 2phi1 transformation at (a,b,c,z) = (q^" + std::to_string(p.alpha) +
                ", q^" + std::to_string(p.beta) + ", q^" + std::to_string(p.gamma) + ", q^" +
                std::to_string(p.delta) + ")",
            "Heine transformation, second form",
            25,
            check_kind::equality,
            [p](int n) { return heine_lhs(p, n); },
            [p](int n) { return heine_rhs(p, n); }};
}

// ---- nonnegativity of (-q)_inf * false theta

qseries positivity_series(int order)
{
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        auto s = inverse_poch(poch_base::q_power(-1, 1), n, 1, m);
        if (n % 2)
            s = -s;
        sum += lift(s, triangular(n), order);
    }
    return poch_infinite(poch_base::q_power(-1, 1), 1, order) * sum;
}

} // namespace

qseries build_F(int order, int z_sign)
{
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        auto s = poch_finite(za_base(z_sign), n, 1, m) * q_factorial_inverse(n, m) *
                 inverse_poch(poch_base::symbolic(z_sign, symbol::z, 1, 1), n, 1, m);
        sum += lift(s.scaled(signed_power(z_sign, symbol::z, n)), triangular(n), order);
    }
    return sum;
}

qseries build_thm1_side(int z_sign, int power_sign, int order)
{
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        auto s = poch_finite(za_base(z_sign), n, 1, m) *
                 poch_infinite(poch_base::symbolic(z_sign, symbol::z, 1, n + 1), 1, m) *
                 q_factorial_inverse(n, m);
        sum += lift(s.scaled(signed_power(power_sign, symbol::z, n)), triangular(n), order);
    }
    return sum;
}

qseries build_chain_side(int eps1, int eps2, bool overpartitions, int order)
{
    qseries sum(order);
    for (int n = 0; triangular(n) <= order; ++n) {
        const int m = order - triangular(n);
        auto s = poch_infinite(poch_base::q_power(eps1, n + 1), 1, m);
        if (overpartitions)
            s = s * poch_finite(poch_base::q_power(-1, 1), n, 1, m) * q_factorial_inverse(n, m);
        if (eps2 < 0 && n % 2)
            s = -s;
        sum += lift(s, triangular(n), order);
    }
    return sum;
}

registry::registry()
{
    auto add = [this](std::string id, std::string description, std::string anchor, int order,
                      series_builder lhs, series_builder rhs) {
        records_.push_back({std::move(id), std::move(description), std::move(anchor), order,
                            check_kind::equality, std::move(lhs), std::move(rhs)});
    };

    add("thm1", "sum (za)_n (zq^{n+1})_inf z^n q^{n(n+1)/2}/(q)_n is even in z",
        "evenness in z of the (za)_n (zq^{n+1})_inf sum", 30,
        [](int n) { return build_thm1_side(1, 1, n); },
        [](int n) { return build_thm1_side(-1, -1, n); });
    add("raw", "F(a,z,q) (zq)_inf = (-zq)_inf F(a,-z,q)",
        "transformed form after the rho limit, cross-multiplied", 30,
        [](int n) {
            require_order(n);
            return build_F(n, 1) * poch_infinite(poch_base::symbolic(1, symbol::z, 1, 1), 1, n);
        },
        [](int n) {
            return poch_infinite(poch_base::symbolic(-1, symbol::z, 1, 1), 1, n) * build_F(n, -1);
        });
    add("raw-recip", "F(a,z,q) = (-zq)_inf / (zq)_inf F(a,-z,q)",
        "transformed form after the rho limit, reciprocal form", 30,
        [](int n) { return build_F(n, 1); },
        [](int n) {
            return poch_infinite(poch_base::symbolic(-1, symbol::z, 1, 1), 1, n) *
                   reciprocal(poch_infinite(poch_base::symbolic(1, symbol::z, 1, 1), 1, n)) *
                   build_F(n, -1);
        });
    add("lebesgue", "sum (-aq)_n/(q)_n q^{n(n+1)/2} = (-aq^2;q^2)_inf/(q;q^2)_inf",
        "Lebesgue identity", 40, lebesgue_lhs, lebesgue_rhs);

    struct a_point {
        const char* name;
        int sign, power;
    };
    for (auto [name, sign, power] : {a_point{"1", 1, 0}, a_point{"q", 1, 1}, a_point{"-q", -1, 1}}) {
        add(std::string("ramanujan:a=") + name,
            std::string("sum (-b/a)_n a^n q^{n(n+1)/2}/((q)_n(bq)_n) = (-aq)_inf/(bq)_inf at a=") +
                name,
            "Ramanujan's generalized Lebesgue sum", 40,
            [sign, power](int n) { return ramanujan_lhs(sign, power, n); },
            [sign, power](int n) { return ramanujan_rhs(sign, power, n); });
    }

    add("cor1a", "sum (q^{n+1})_inf q^{n(n+1)/2} = sum (-q^{n+1})_inf (-q)_n/(q)_n (-1)^n q^{n(n+1)/2}",
        "(a,z) = (q,1) specialization", 40,
        [](int n) { return build_chain_side(1, 1, false, n); },
        [](int n) { return build_chain_side(-1, -1, true, n); });
    add("cor1b", "sum (-q^{n+1})_inf (-1)^n q^{n(n+1)/2} = sum (q^{n+1})_inf (-q)_n/(q)_n q^{n(n+1)/2}",
        "(a,z) = (-q,1) specialization", 40,
        [](int n) { return build_chain_side(-1, -1, false, n); },
        [](int n) { return build_chain_side(1, 1, true, n); });
    add("jtp", "sum_{n in Z} z^n q^{n^2} = (-zq;q^2)_inf (-q/z;q^2)_inf (q^2;q^2)_inf",
        "Jacobi triple product", 36, jtp_lhs, jtp_rhs);
    add("cor23", "sum_{n>=1} (-1)^n q^{n^2} = sum_{n>=1} (-1)^n q^{n(n+1)/2}/((q)_n (1+q^n))",
        "false theta identity from a = z = 1", 100, cor23_lhs, cor23_rhs);
    add("prodratio", "(q)_inf = (-q)_inf (q;q^2)_inf^2 (q^2;q^2)_inf",
        "product rewriting of (q)_inf/(-q)_inf", 100, prodratio_lhs, prodratio_rhs);

    for (int alpha : {0, 1, 2})
        for (int beta : {1, 2})
            for (int gamma : {beta + 1, beta + 2})
                for (int delta : {1, 2})
                    records_.push_back(heine_record({alpha, beta, gamma, delta}));

    records_.push_back({"positivity", "(-q;q)_inf sum (-1)^n q^{n(n+1)/2}/(-q;q)_n has coefficients >= 0",
                        "nonnegativity of (-q)_inf times a false theta function", 200,
                        check_kind::nonnegative, positivity_series, {}});
    add("sumcheck", "sum (q^{n+1})_inf q^{n(n+1)/2} = (q^2;q^2)_inf (experimental)",
        "closed form of the (a,z) = (q,1) specialization", 100,
        [](int n) { return build_chain_side(1, 1, false, n); },
        [](int n) { return poch_infinite(poch_base::q_power(1, 2), 2, n); });
    records_.back().experimental = true;

    std::sort(records_.begin(), records_.end(),
              [](const auto& x, const auto& y) { return x.id < y.id; });
}

const registry& registry::instance()
{
    static const registry r;
    return r;
}

identity_record registry::find(std::string_view id) const
{
    auto it = std::lower_bound(records_.begin(), records_.end(), id,
                               [](const identity_record& r, std::string_view key) { return r.id < key; });
    if (it != records_.end() && it->id == id)
        return *it;
    if (auto p = parse_heine(id))
        return heine_record(*p);
    throw error(errc::unknown_identity, "no identity registered as '" + std::string(id) + "'");
}

qseries build_side(std::string_view id, side s, int order)
{
    const auto record = registry::instance().find(id);
    require_order(order);
    if (s == side::lhs)
        return record.lhs(order);
    if (!record.rhs)
        throw error(errc::builder_precondition_violated,
                    "'" + record.id + "' is a one-sided check with no right-hand side");
    return record.rhs(order);
}

verification_report verify(const identity_record& record, int order)
{
    require_order(order);
    const auto start = std::chrono::steady_clock::now();
    verification_report report;
    report.id = record.id;
    report.order = order;

    const auto lhs = record.lhs(order);
    if (record.kind == check_kind::nonnegative) {
        for (int k = 0; k <= order; ++k) {
            const auto v = lhs.coeff(k).as_integer();
            if (!v || sgn(*v) < 0) {
                report.result = outcome::fail;
                report.first_mismatch = mismatch{k, lhs.coeff(k), sym_coeff(0L)};
                break;
            }
        }
    } else {
        const auto rhs = record.rhs(order);
        const auto cmp = series_eq(lhs, rhs);
        if (!cmp.equal) {
            const int k = *cmp.first_mismatch;
            report.result = outcome::fail;
            report.first_mismatch = mismatch{k, lhs.coeff(k), rhs.coeff(k)};
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

verification_report verify(std::string_view id, int order)
{
    return verify(registry::instance().find(id), order);
}

std::vector<verification_report> verify_all(const std::map<std::string, int>& order_overrides,
                                            unsigned threads)
{
    const auto records = registry::instance().records();
    for (const auto& [id, order] : order_overrides) {
        (void)registry::instance().find(id);
        require_order(order);
    }

    std::vector<verification_report> reports(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            const auto& r = records[i];
            auto it = order_overrides.find(r.id);
            reports[i] = verify(r, it == order_overrides.end() ? r.default_order : it->second);
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(records.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    return reports;
}

} // namespace qspin
