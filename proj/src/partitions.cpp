#include "qspin/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "qspin/error.hpp"

namespace qspin {

namespace {

// (-1)^m for any integer m.
constexpr std::int64_t parity_sign(std::int64_t m) { return (m % 2 == 0) ? 1 : -1; }

// x^m for x = +-1; negative m reads as m mod 2.
constexpr std::int64_t unit_power(int x, std::int64_t m) { return x > 0 ? 1 : parity_sign(m); }

void require_unit(int eps)
{
    if (eps != 1 && eps != -1)
        throw error(errc::invalid_argument, "sign parameter must be +1 or -1");
}

void require_distinct(const partition& p)
{
    if (!p.is_distinct())
        throw error(errc::not_distinct, to_string(p) + " is not a distinct partition");
}

void require_a(const partition& p)
{
    if (!in_class(p, partition_class::a_set))
        throw error(errc::not_in_a, to_string(p) + " has a repeated part beyond its initial chain");
}

void generate(int remaining, int max_part, std::vector<int>& freqs, std::vector<partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(freqs);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        for (int f = 1; f * part <= remaining; ++f) {
            freqs[static_cast<std::size_t>(part - 1)] = f;
            generate(remaining - f * part, part - 1, freqs, out);
        }
        freqs[static_cast<std::size_t>(part - 1)] = 0;
    }
}

} // namespace

partition::partition(std::vector<int> freqs) : freqs_(std::move(freqs))
{
    for (int f : freqs_)
        if (f < 0)
            throw error(errc::invalid_argument, "negative multiplicity");
    while (!freqs_.empty() && freqs_.back() == 0)
        freqs_.pop_back();
}

partition partition::from_frequencies(std::initializer_list<std::pair<int, int>> pairs)
{
    std::vector<int> freqs;
    for (auto [part, f] : pairs) {
        if (part < 1)
            throw error(errc::invalid_argument, "parts must be positive");
        if (freqs.size() < static_cast<std::size_t>(part))
            freqs.resize(static_cast<std::size_t>(part));
        freqs[static_cast<std::size_t>(part - 1)] += f;
    }
    return partition(std::move(freqs));
}

partition partition::from_parts(std::span<const int> parts)
{
    std::vector<int> freqs;
    for (int part : parts) {
        if (part < 1)
            throw error(errc::invalid_argument, "parts must be positive");
        if (freqs.size() < static_cast<std::size_t>(part))
            freqs.resize(static_cast<std::size_t>(part));
        ++freqs[static_cast<std::size_t>(part - 1)];
    }
    return partition(std::move(freqs));
}

partition partition::staircase(int k)
{
    return partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1));
}

int partition::size() const noexcept
{
    int s = 0;
    for (std::size_t i = 0; i < freqs_.size(); ++i)
        s += static_cast<int>(i + 1) * freqs_[i];
    return s;
}

int partition::parts() const noexcept
{
    return std::accumulate(freqs_.begin(), freqs_.end(), 0);
}

bool partition::is_distinct() const noexcept
{
    return std::all_of(freqs_.begin(), freqs_.end(), [](int f) { return f <= 1; });
}

std::string to_string(const partition& p)
{
    std::string out = "(";
    bool first = true;
    for (int i = 1; i <= p.largest_part(); ++i) {
        if (p.freq(i) == 0)
            continue;
        if (!first)
            out += ',';
        first = false;
        out += std::to_string(i) + '^' + std::to_string(p.freq(i));
    }
    return out + ')';
}

int chain_length(const partition& p) noexcept
{
    int t = 0;
    while (t < p.largest_part() && p.freq(t + 1) >= 1)
        ++t;
    return t;
}

int max_part_with_freq(const partition& p, int j) noexcept
{
    for (int i = p.largest_part(); i >= 1; --i)
        if (p.freq(i) >= j)
            return i;
    return 0;
}

int parts_with_freq(const partition& p, int j) noexcept
{
    return static_cast<int>(
        std::count_if(p.freqs().begin(), p.freqs().end(), [j](int f) { return f >= j; }));
}

partition_stats stats(const partition& p, int max_j)
{
    if (max_j < 1)
        throw error(errc::invalid_argument, "max_j must be >= 1");
    partition_stats s{p.size(), p.parts(), chain_length(p), {}, {}};
    for (int j = 1; j <= max_j; ++j) {
        s.p.push_back(max_part_with_freq(p, j));
        s.r.push_back(parts_with_freq(p, j));
    }
    return s;
}

bool in_class(const partition& p, partition_class c) noexcept
{
    switch (c) {
    case partition_class::all: return true;
    case partition_class::distinct: return p.is_distinct();
    case partition_class::a_set: return max_part_with_freq(p, 2) <= chain_length(p);
    }
    return false;
}

std::vector<partition> enumerate(int n, partition_class c)
{
    if (n < 0)
        throw error(errc::invalid_argument, "cannot enumerate partitions of a negative integer");
    std::vector<partition> all;
    std::vector<int> freqs(static_cast<std::size_t>(n), 0);
    generate(n, n, freqs, all);
    std::erase_if(all, [c](const partition& p) { return !in_class(p, c); });
    std::sort(all.begin(), all.end());
    return all;
}

std::int64_t weight_w(const partition& p, int i)
{
    require_distinct(p);
    if (i != 1 && i != 2)
        throw error(errc::invalid_argument, "weight index must be 1 or 2");
    const int t = chain_length(p);
    const std::int64_t bracket = 1 - p.freq(1) * (1 - parity_sign(t)) / 2;
    return bracket * parity_sign(static_cast<std::int64_t>(i) * p.parts());
}

std::int64_t weight_what(const partition& p, int i)
{
    require_a(p);
    if (i != 1 && i != 2)
        throw error(errc::invalid_argument, "weight index must be 1 or 2");
    const int t = chain_length(p);
    const int p2 = max_part_with_freq(p, 2);
    const int r1 = parts_with_freq(p, 1);
    const int r2 = parts_with_freq(p, 2);
    const std::int64_t half = (parity_sign(t) + parity_sign(p2)) / 2;
    return (std::int64_t{1} << r2) * half * parity_sign(static_cast<std::int64_t>(i - 1) * (r1 + t + p2));
}

std::int64_t weight(const partition& p, weight_kind w)
{
    switch (w) {
    case weight_kind::w1: return weight_w(p, 1);
    case weight_kind::w2: return weight_w(p, 2);
    case weight_kind::what1: return weight_what(p, 1);
    case weight_kind::what2: return weight_what(p, 2);
    }
    return 0;
}

partition_class weight_domain(weight_kind w) noexcept
{
    return (w == weight_kind::w1 || w == weight_kind::w2) ? partition_class::distinct
                                                          : partition_class::a_set;
}

std::int64_t raw_weight_lhs(const partition& p, int eps1, int eps2)
{
    require_distinct(p);
    require_unit(eps1);
    require_unit(eps2);
    const int t = chain_length(p);
    const int parts = p.parts();
    std::int64_t sum = 0;
    for (int k = 0; k <= t; ++k)
        sum += unit_power(-eps1, parts - k) * unit_power(eps2, k);
    return sum;
}

std::int64_t raw_weight_rhs(const partition& p, int eps1, int eps2)
{
    require_a(p);
    require_unit(eps1);
    require_unit(eps2);
    const int t = chain_length(p);
    const int p2 = max_part_with_freq(p, 2);
    const int r1 = parts_with_freq(p, 1);
    const int r2 = parts_with_freq(p, 2);
    std::int64_t sum = 0;
    for (int k = p2; k <= t; ++k)
        sum += unit_power(-eps1, static_cast<std::int64_t>(r1) - t - p2 - k) * unit_power(eps2, k);
    return (std::int64_t{1} << r2) * sum;
}

std::vector<lhs_piece> decompose_lhs(const partition& p)
{
    require_distinct(p);
    std::vector<lhs_piece> out;
    for (int k = 0; k <= p.largest_part(); ++k) {
        std::vector<int> rest = p.freqs();
        bool fits = true;
        for (int j = 1; j <= k && fits; ++j)
            fits = rest[static_cast<std::size_t>(j - 1)]-- >= 1;
        if (!fits)
            continue;
        partition d(std::move(rest));
        bool above = true;
        for (int j = 1; j <= k; ++j)
            above = above && d.freq(j) == 0;
        if (above && d.is_distinct())
            out.push_back({std::move(d), partition::staircase(k)});
    }
    return out;
}

std::vector<rhs_piece> decompose_rhs(const partition& p)
{
    require_a(p);
    std::vector<rhs_piece> out;
    for (int k = 0; k <= p.largest_part(); ++k) {
        if (chain_length(p) < k)
            continue; // the staircase (1^1..k^1) must fit
        std::vector<int> low(static_cast<std::size_t>(k)), high = p.freqs();
        for (int j = 1; j <= k; ++j) {
            low[static_cast<std::size_t>(j - 1)] = p.freq(j) - 1;
            high[static_cast<std::size_t>(j - 1)] = 0;
        }
        partition d(std::move(high));
        if (!d.is_distinct())
            continue;
        out.push_back({std::move(d), partition::staircase(k), partition(std::move(low))});
    }
    return out;
}

qseries weighted_gf(int n_max, partition_class c, weight_kind w)
{
    if (c != weight_domain(w))
        throw error(errc::class_weight_mismatch, "weight is not defined on the requested class");
    qseries r(n_max);
    for (int n = 0; n <= n_max; ++n) {
        mpz_class total = 0;
        for (const auto& p : enumerate(n, c)) {
            const auto v = weight(p, w);
            total += mpz_class(static_cast<long>(v));
        }
        r.set_coeff(n, sym_coeff(total));
    }
    return r;
}

table_report make_table_report(int n)
{
    table_report t;
    t.n = n;
    for (const auto& p : enumerate(n, partition_class::distinct)) {
        table_d_row row{p, chain_length(p), weight_w(p, 1), weight_w(p, 2)};
        t.total_w1 += row.w1;
        t.total_w2 += row.w2;
        t.d_rows.push_back(std::move(row));
    }
    for (const auto& p : enumerate(n, partition_class::a_set)) {
        table_a_row row{p,
                        chain_length(p),
                        max_part_with_freq(p, 2),
                        parts_with_freq(p, 2),
                        weight_what(p, 1),
                        parts_with_freq(p, 1),
                        weight_what(p, 2)};
        t.total_what1 += row.what1;
        t.total_what2 += row.what2;
        t.a_rows.push_back(std::move(row));
    }
    return t;
}

} // namespace qspin
