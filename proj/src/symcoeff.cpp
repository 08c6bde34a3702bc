#include "qspin/symcoeff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qspin/error.hpp"

namespace qspin {

std::string_view symbol_name(symbol s) noexcept
{
    switch (s) {
    case symbol::a: return "a";
    case symbol::z: return "z";
    case symbol::b: return "b";
    case symbol::rho: return "rho";
    }
    return "?";
}

std::optional<symbol> parse_symbol(std::string_view name) noexcept
{
    for (auto s : all_symbols)
        if (symbol_name(s) == name)
            return s;
    return std::nullopt;
}

std::string to_string(const monomial& m)
{
    std::string out;
    for (auto s : all_symbols) {
        const auto e = m[s];
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += symbol_name(s);
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

namespace {

// Sort by monomial, merge equal monomials in place and drop zeros.
void canonicalize(std::vector<sym_coeff::term>& terms)
{
    if (terms.size() > 1)
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        if (out != i)
            terms[out] = std::move(terms[i]);
        for (; j < terms.size() && terms[j].first == terms[out].first; ++j)
            terms[out].second += terms[j].second;
        if (sgn(terms[out].second) != 0)
            ++out;
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted canonical term lists; sign selects add or subtract.
std::vector<sym_coeff::term> merge(const std::vector<sym_coeff::term>& x,
                                   const std::vector<sym_coeff::term>& y, bool subtract)
{
    std::vector<sym_coeff::term> r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, subtract ? mpz_class(-y[j].second) : y[j].second);
            ++j;
        } else {
            mpz_class c = subtract ? mpz_class(x[i].second - y[j].second)
                                   : mpz_class(x[i].second + y[j].second);
            if (sgn(c) != 0)
                r.emplace_back(x[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

sym_coeff::sym_coeff(long value)
{
    if (value != 0)
        terms_.emplace_back(monomial{}, mpz_class(value));
}

sym_coeff::sym_coeff(const mpz_class& value)
{
    if (sgn(value) != 0)
        terms_.emplace_back(monomial{}, value);
}

sym_coeff sym_coeff::from_term(const monomial& m, const mpz_class& c)
{
    sym_coeff r;
    if (sgn(c) != 0)
        r.terms_.emplace_back(m, c);
    return r;
}

sym_coeff sym_coeff::variable(symbol s, std::int32_t exponent)
{
    return from_term(monomial::of(s, exponent), 1);
}

sym_coeff sym_coeff::from_terms(std::vector<term> terms)
{
    canonicalize(terms);
    sym_coeff r;
    r.terms_ = std::move(terms);
    return r;
}

std::optional<mpz_class> sym_coeff::as_integer() const
{
    if (terms_.empty())
        return mpz_class(0);
    if (terms_.size() == 1 && terms_.front().first.is_one())
        return terms_.front().second;
    return std::nullopt;
}

bool sym_coeff::is_integer() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

bool sym_coeff::is_signed_monomial() const noexcept
{
    return terms_.size() == 1 && (terms_.front().second == 1 || terms_.front().second == -1);
}

bool sym_coeff::is_canonical() const noexcept
{
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (sgn(terms_[i].second) == 0)
            return false;
        if (i > 0 && !(terms_[i - 1].first < terms_[i].first))
            return false;
    }
    return true;
}

sym_coeff sym_coeff::reflect(symbol s) const
{
    sym_coeff r = *this;
    for (auto& [m, c] : r.terms_)
        if (m[s] % 2 != 0)
            c = -c;
    return r;
}

sym_coeff sym_coeff::operator-() const
{
    sym_coeff r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

sym_coeff& sym_coeff::operator+=(const sym_coeff& y)
{
    if (y.terms_.empty())
        return *this;
    if (terms_.empty())
        return *this = y;
    terms_ = merge(terms_, y.terms_, false);
    return *this;
}

sym_coeff& sym_coeff::operator-=(const sym_coeff& y)
{
    if (y.terms_.empty())
        return *this;
    terms_ = merge(terms_, y.terms_, true);
    return *this;
}

sym_coeff& sym_coeff::operator*=(const sym_coeff& y)
{
    return *this = *this * y;
}

sym_coeff operator*(const sym_coeff& x, const sym_coeff& y)
{
    const std::pair<const sym_coeff*, const sym_coeff*> one{&x, &y};
    return sym_coeff::sum_of_products({&one, 1});
}

sym_coeff
sym_coeff::sum_of_products(std::span<const std::pair<const sym_coeff*, const sym_coeff*>> pairs)
{
    std::size_t total = 0;
    for (const auto& [x, y] : pairs)
        total += x->terms_.size() * y->terms_.size();
    sym_coeff r;
    if (total == 0)
        return r;

    // Single-monomial products stay sorted; skip the sort when possible.
    if (pairs.size() == 1) {
        const auto& [x, y] = pairs.front();
        if (x->terms_.size() == 1 || y->terms_.size() == 1) {
            r.terms_.reserve(total);
            const bool x_single = x->terms_.size() == 1;
            const auto& single = x_single ? x->terms_.front() : y->terms_.front();
            const auto& many = x_single ? y->terms_ : x->terms_;
            for (const auto& t : many)
                r.terms_.emplace_back(single.first * t.first, single.second * t.second);
            return r;
        }
    }

    r.terms_.reserve(total);
    for (const auto& [x, y] : pairs)
        for (const auto& tx : x->terms_)
            for (const auto& ty : y->terms_)
                r.terms_.emplace_back(tx.first * ty.first, tx.second * ty.second);
    canonicalize(r.terms_);
    return r;
}

std::string to_string(const sym_coeff& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const bool neg = sgn(c) < 0;
        mpz_class mag = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << mag.get_str();
        else if (mag == 1)
            os << to_string(m);
        else
            os << mag.get_str() << '*' << to_string(m);
    }
    return os.str();
}

bindings& bindings::bind(symbol s, int sign, int qpower)
{
    if (sign != 1 && sign != -1)
        throw error(errc::invalid_argument, "binding sign must be +1 or -1");
    if (qpower < 0)
        throw error(errc::invalid_argument, "binding q-power must be nonnegative");
    slots_[static_cast<std::size_t>(s)] = binding{sign, qpower};
    return *this;
}

q_image substitute(const sym_coeff& x, const bindings& b)
{
    std::map<std::int64_t, mpz_class> acc;
    for (const auto& [m, c] : x.terms()) {
        std::int64_t shift = 0;
        bool negate = false;
        for (auto s : all_symbols) {
            const auto e = m[s];
            if (e == 0)
                continue;
            const auto& slot = b[s];
            if (!slot)
                throw error(errc::unbound_symbol,
                            "symbol '" + std::string(symbol_name(s)) + "' has no binding");
            if (slot->qpower > 0 && e < 0)
                throw error(errc::negative_valuation,
                            "negative power of '" + std::string(symbol_name(s)) +
                                "' bound to a positive power of q");
            shift += static_cast<std::int64_t>(slot->qpower) * e;
            if (slot->sign < 0 && e % 2 != 0)
                negate = !negate;
        }
        auto& slot = acc[shift];
        if (negate)
            slot -= c;
        else
            slot += c;
    }
    q_image out;
    for (auto& [k, c] : acc)
        if (sgn(c) != 0)
            out.emplace_back(k, std::move(c));
    return out;
}

} // namespace qspin
