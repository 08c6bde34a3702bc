#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "qspin/error.hpp"
#include "qspin/identities.hpp"
#include "qspin/partitions.hpp"

using namespace qspin;

namespace {

using P = partition;

P fp(std::initializer_list<std::pair<int, int>> pairs)
{
    return partition::from_frequencies(pairs);
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

// Partition counts from the product expansions prod 1/(1-q^k) and
// prod (1+q^k), independent of the enumerator.
std::vector<long> count_all(int n_max)
{
    std::vector<long> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int m = k; m <= n_max; ++m)
            c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
    return c;
}

std::vector<long> count_distinct(int n_max)
{
    std::vector<long> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int m = n_max; m >= k; --m)
            c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
    return c;
}

long ipow(long base, int e)
{
    long r = 1;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

P add_freqs(const P& x, const P& y)
{
    std::vector<int> f(static_cast<std::size_t>(std::max(x.largest_part(), y.largest_part())), 0);
    for (int i = 1; i <= static_cast<int>(f.size()); ++i)
        f[static_cast<std::size_t>(i - 1)] = x.freq(i) + y.freq(i);
    return P(f);
}

// Weight of one (distinct part, staircase) pair in the left-hand sum: each
// distinct part contributes -e1, the staircase of height k contributes e2^k.
long pair_weight(const lhs_piece& piece, int e1, int e2)
{
    return ipow(-e1, piece.distinct_part.parts()) * ipow(e2, piece.staircase.parts());
}

// Triple weight: as above, times 2 per distinct part size of the
// overpartition piece (each first occurrence may be overlined).
long triple_weight(const rhs_piece& piece, int e1, int e2)
{
    int sizes = 0;
    for (int f : piece.over.freqs())
        sizes += f > 0;
    return ipow(-e1, piece.distinct_part.parts()) * ipow(e2, piece.staircase.parts()) * ipow(2, sizes);
}

std::vector<P> all_up_to(int n_max, partition_class c)
{
    std::vector<P> out;
    for (int n = 0; n <= n_max; ++n)
        for (auto& p : enumerate(n, c))
            out.push_back(std::move(p));
    return out;
}

} // namespace

TEST_CASE("construction and printing")
{
    const auto p = fp({{1, 2}, {2, 2}});
    CHECK(to_string(p) == "(1^2,2^2)");
    CHECK(to_string(P{}) == "()");
    CHECK(P(std::vector<int>{1, 0, 0}) == P(std::vector<int>{1}));
    const int parts[] = {3, 1, 1, 3, 2};
    CHECK(P::from_parts(parts) == fp({{1, 2}, {2, 1}, {3, 2}}));
    CHECK(P::staircase(3) == fp({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(p.size() == 6);
    CHECK(p.parts() == 4);
    CHECK_FALSE(p.is_distinct());
    CHECK(code_of([] { (void)P(std::vector<int>{1, -1}); }) == errc::invalid_argument);
}

TEST_CASE("worked example statistics")
{
    const auto p = fp({{1, 4}, {2, 2}, {3, 4}, {5, 1}, {6, 1}});
    const auto s = stats(p, 5);
    CHECK(s.size == 31);
    CHECK(s.parts == 12);
    CHECK(s.chain == 3);
    CHECK(s.p == std::vector<int>{6, 3, 3, 3, 0});
    CHECK(s.r == std::vector<int>{5, 3, 2, 2, 0});

    const auto e = stats(P{}, 3);
    CHECK(e.size == 0);
    CHECK(e.chain == 0);
    CHECK(e.p == std::vector<int>{0, 0, 0});
    CHECK(e.r == std::vector<int>{0, 0, 0});

    const auto six = stats(fp({{6, 1}}), 2);
    CHECK(six.chain == 0);
    CHECK(six.p == std::vector<int>{6, 0});
    CHECK(six.r == std::vector<int>{1, 0});
}

TEST_CASE("statistics are monotone")
{
    for (const auto& p : all_up_to(16, partition_class::all)) {
        const auto s = stats(p, 6);
        for (std::size_t j = 1; j < s.p.size(); ++j) {
            CHECK(s.p[j] <= s.p[j - 1]);
            CHECK(s.r[j] <= s.r[j - 1]);
        }
        CHECK(s.chain <= s.p[0]);
        CHECK(s.r[0] <= s.parts);
        CHECK(s.p[0] == p.largest_part());
    }
}

TEST_CASE("partitions of 6 by class")
{
    const std::set<P> d{fp({{6, 1}}), fp({{1, 1}, {5, 1}}), fp({{2, 1}, {4, 1}}),
                        fp({{1, 1}, {2, 1}, {3, 1}})};
    const auto got_d = enumerate(6, partition_class::distinct);
    CHECK(std::set<P>(got_d.begin(), got_d.end()) == d);
    CHECK(got_d.size() == 4);

    std::set<P> a = d;
    for (auto x : {fp({{1, 2}, {4, 1}}), fp({{1, 3}, {3, 1}}), fp({{1, 4}, {2, 1}}), fp({{1, 2}, {2, 2}}),
                   fp({{1, 6}})})
        a.insert(x);
    const auto got_a = enumerate(6, partition_class::a_set);
    CHECK(std::set<P>(got_a.begin(), got_a.end()) == a);
    CHECK(got_a.size() == 9);
    CHECK(std::is_sorted(got_a.begin(), got_a.end()));

    for (auto c : {partition_class::all, partition_class::distinct, partition_class::a_set}) {
        const auto zero = enumerate(0, c);
        REQUIRE(zero.size() == 1);
        CHECK(zero.front() == P{});
    }
}

TEST_CASE("partition counts")
{
    const auto all = count_all(30), dist = count_distinct(30);
    CHECK(all[30] == 5604);
    CHECK(dist[30] == 296);
    for (int n = 0; n <= 22; ++n) {
        CAPTURE(n);
        CHECK(enumerate(n, partition_class::all).size() == static_cast<std::size_t>(all[static_cast<std::size_t>(n)]));
        CHECK(enumerate(n, partition_class::distinct).size() ==
              static_cast<std::size_t>(dist[static_cast<std::size_t>(n)]));
    }
}

TEST_CASE("distinct partitions lie in A")
{
    for (int n = 0; n <= 20; ++n) {
        const auto d = enumerate(n, partition_class::distinct);
        const auto a = enumerate(n, partition_class::a_set);
        CHECK(std::includes(a.begin(), a.end(), d.begin(), d.end()));
        for (const auto& p : d)
            CHECK(in_class(p, partition_class::a_set));
        for (const auto& p : enumerate(n, partition_class::all))
            CHECK(in_class(p, partition_class::a_set) == (max_part_with_freq(p, 2) <= chain_length(p)));
    }
}

TEST_CASE("weights from the table")
{
    CHECK(weight_w(fp({{6, 1}}), 1) == -1);
    CHECK(weight_w(fp({{6, 1}}), 2) == 1);
    CHECK(weight_w(fp({{1, 1}, {5, 1}}), 1) == 0);
    CHECK(weight_w(fp({{1, 1}, {5, 1}}), 2) == 0);
    CHECK(weight_w(P{}, 1) == 1);
    CHECK(weight_w(P{}, 2) == 1);

    CHECK(weight_what(fp({{1, 2}, {2, 2}}), 1) == 4);
    CHECK(weight_what(fp({{1, 2}, {2, 2}}), 2) == 4);
    CHECK(weight_what(fp({{1, 6}}), 1) == -2);
    CHECK(weight_what(fp({{1, 6}}), 2) == 2);
    CHECK(weight_what(fp({{1, 4}, {2, 1}}), 1) == 0);
    CHECK(weight_what(fp({{1, 4}, {2, 1}}), 2) == 0);
    CHECK(weight_what(fp({{6, 1}}), 1) == 1);
    CHECK(weight_what(fp({{6, 1}}), 2) == -1);

    CHECK(code_of([] { (void)weight_w(fp({{1, 2}}), 1); }) == errc::not_distinct);
    CHECK(code_of([] { (void)weight_what(fp({{2, 2}}), 1); }) == errc::not_in_a);
    CHECK(code_of([] { (void)raw_weight_lhs(fp({{1, 2}}), 1, 1); }) == errc::not_distinct);
    CHECK(code_of([] { (void)raw_weight_rhs(fp({{2, 2}}), 1, 1); }) == errc::not_in_a);
    CHECK(code_of([] { (void)decompose_lhs(fp({{1, 2}})); }) == errc::not_distinct);
    CHECK(code_of([] { (void)decompose_rhs(fp({{2, 2}})); }) == errc::not_in_a);
}

TEST_CASE("raw weights")
{
    CHECK(raw_weight_lhs(fp({{6, 1}}), 1, 1) == -1);
    CHECK(raw_weight_lhs(fp({{1, 1}, {5, 1}}), 1, 1) == 0);
    for (int e : {1, -1})
        CHECK(raw_weight_lhs(P{}, e, -e) == 1);
    CHECK(raw_weight_rhs(fp({{1, 2}, {2, 2}}), -1, -1) == 4);
    CHECK(raw_weight_rhs(fp({{1, 1}, {5, 1}}), -1, -1) == 0);
    CHECK(raw_weight_rhs(fp({{6, 1}}), 1, 1) == -1);
}

TEST_CASE("decompositions")
{
    CHECK(decompose_lhs(P::staircase(3)).size() == 4);
    const auto six = decompose_lhs(fp({{6, 1}}));
    REQUIRE(six.size() == 1);
    CHECK(six[0].distinct_part == fp({{6, 1}}));
    CHECK(six[0].staircase == P{});
    REQUIRE(decompose_lhs(P{}).size() == 1);

    const auto sq = decompose_rhs(fp({{1, 2}, {2, 2}}));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].staircase == P::staircase(2));
    CHECK(sq[0].over == P::staircase(2));
    CHECK(sq[0].distinct_part == P{});
    const auto r6 = decompose_rhs(fp({{6, 1}}));
    REQUIRE(r6.size() == 1);
    CHECK(r6[0].distinct_part == fp({{6, 1}}));
    CHECK(r6[0].over == P{});
    CHECK(decompose_rhs(fp({{1, 1}, {5, 1}})).size() == 2);
}

TEST_CASE("decompositions are complete and recombine")
{
    for (const auto& p : all_up_to(18, partition_class::distinct)) {
        CAPTURE(to_string(p));
        const auto pieces = decompose_lhs(p);
        CHECK(pieces.size() == static_cast<std::size_t>(chain_length(p) + 1));
        for (const auto& piece : pieces) {
            CHECK(piece.distinct_part.is_distinct());
            const int k = piece.staircase.parts();
            CHECK(piece.staircase == P::staircase(k));
            for (int i = 1; i <= k; ++i)
                CHECK(piece.distinct_part.freq(i) == 0);
            CHECK(add_freqs(piece.distinct_part, piece.staircase) == p);
        }
    }
    for (const auto& p : all_up_to(18, partition_class::a_set)) {
        CAPTURE(to_string(p));
        const auto pieces = decompose_rhs(p);
        const int p2 = max_part_with_freq(p, 2), t = chain_length(p);
        CHECK(pieces.size() == static_cast<std::size_t>(t - p2 + 1));
        for (const auto& piece : pieces) {
            const int k = piece.staircase.parts();
            CHECK(k >= p2);
            CHECK(k <= t);
            CHECK(piece.distinct_part.is_distinct());
            CHECK(piece.over.largest_part() <= k);
            for (int i = 1; i <= k; ++i)
                CHECK(piece.distinct_part.freq(i) == 0);
            CHECK(add_freqs(add_freqs(piece.distinct_part, piece.staircase), piece.over) == p);
        }
    }
}

TEST_CASE("closed weights equal raw sums and decomposition sums")
{
    for (const auto& p : all_up_to(20, partition_class::distinct)) {
        CAPTURE(to_string(p));
        CHECK(weight_w(p, 1) == raw_weight_lhs(p, 1, 1));
        CHECK(weight_w(p, 2) == raw_weight_lhs(p, -1, -1));
        for (auto [i, e] : {std::pair{1, 1}, std::pair{2, -1}}) {
            long sum = 0;
            for (const auto& piece : decompose_lhs(p))
                sum += pair_weight(piece, e, e);
            CHECK(weight_w(p, i) == sum);
        }
    }
    for (const auto& p : all_up_to(20, partition_class::a_set)) {
        CAPTURE(to_string(p));
        CHECK(weight_what(p, 1) == raw_weight_rhs(p, -1, -1));
        CHECK(weight_what(p, 2) == raw_weight_rhs(p, 1, 1));
        for (auto [i, e] : {std::pair{1, -1}, std::pair{2, 1}}) {
            long sum = 0;
            for (const auto& piece : decompose_rhs(p))
                sum += triple_weight(piece, e, e);
            CHECK(weight_what(p, i) == sum);
        }
    }
}

TEST_CASE("w2 is |w1|")
{
    for (const auto& p : all_up_to(30, partition_class::distinct)) {
        const auto w1 = weight_w(p, 1), w2 = weight_w(p, 2);
        CHECK(w2 >= 0);
        CHECK(w2 == std::abs(w1));
    }
}

TEST_CASE("weighted generating functions")
{
    CHECK(weighted_gf(6, partition_class::distinct, weight_kind::w1).coeff(6) == sym_coeff(0));
    CHECK(weighted_gf(6, partition_class::distinct, weight_kind::w2).coeff(6) == sym_coeff(2));
    CHECK(weighted_gf(6, partition_class::a_set, weight_kind::what1).coeff(6) == sym_coeff(0));
    CHECK(weighted_gf(6, partition_class::a_set, weight_kind::what2).coeff(6) == sym_coeff(2));
    CHECK(code_of([] { (void)weighted_gf(6, partition_class::a_set, weight_kind::w1); }) ==
          errc::class_weight_mismatch);
    CHECK(code_of([] { (void)weighted_gf(6, partition_class::all, weight_kind::what2); }) ==
          errc::class_weight_mismatch);
    CHECK(weight_domain(weight_kind::w2) == partition_class::distinct);
    CHECK(weight_domain(weight_kind::what1) == partition_class::a_set);
}

TEST_CASE("weighted sums match the series sides")
{
    const int n = 25;
    const auto d = partition_class::distinct, a = partition_class::a_set;
    CHECK(weighted_gf(n, d, weight_kind::w1) == build_side("cor1a", side::lhs, n));
    CHECK(weighted_gf(n, d, weight_kind::w2) == build_side("cor1b", side::lhs, n));
    CHECK(weighted_gf(n, a, weight_kind::what1) == build_side("cor1a", side::rhs, n));
    CHECK(weighted_gf(n, a, weight_kind::what2) == build_side("cor1b", side::rhs, n));

    const auto w2 = weighted_gf(30, d, weight_kind::w2);
    CHECK(w2 == build_side("positivity", side::lhs, 30));
    for (const auto& c : w2.coeffs())
        CHECK(*c.as_integer() >= 0);
}

TEST_CASE("table reports")
{
    const auto t6 = make_table_report(6);
    using drow = std::tuple<P, int, long, long>;
    const std::set<drow> d{{fp({{6, 1}}), 0, -1, 1},
                           {fp({{1, 1}, {5, 1}}), 1, 0, 0},
                           {fp({{2, 1}, {4, 1}}), 0, 1, 1},
                           {fp({{1, 1}, {2, 1}, {3, 1}}), 3, 0, 0}};
    std::set<drow> got_d;
    for (const auto& r : t6.d_rows)
        got_d.insert({r.pi, r.chain, r.w1, r.w2});
    CHECK(got_d == d);
    CHECK(t6.d_rows.size() == 4);

    using arow = std::tuple<P, int, int, int, long, int, long>;
    const std::set<arow> a{{fp({{6, 1}}), 0, 0, 0, 1, 1, -1},
                           {fp({{1, 1}, {5, 1}}), 1, 0, 0, 0, 2, 0},
                           {fp({{2, 1}, {4, 1}}), 0, 0, 0, 1, 2, 1},
                           {fp({{1, 2}, {4, 1}}), 1, 1, 1, -2, 2, -2},
                           {fp({{1, 1}, {2, 1}, {3, 1}}), 3, 0, 0, 0, 3, 0},
                           {fp({{1, 3}, {3, 1}}), 1, 1, 1, -2, 2, -2},
                           {fp({{1, 4}, {2, 1}}), 2, 1, 1, 0, 2, 0},
                           {fp({{1, 2}, {2, 2}}), 2, 2, 2, 4, 2, 4},
                           {fp({{1, 6}}), 1, 1, 1, -2, 1, 2}};
    std::set<arow> got_a;
    for (const auto& r : t6.a_rows)
        got_a.insert({r.pi, r.chain, r.p2, r.r2, r.what1, r.r1, r.what2});
    CHECK(got_a == a);
    CHECK(t6.a_rows.size() == 9);
    CHECK(t6.total_w1 == 0);
    CHECK(t6.total_w2 == 2);
    CHECK(t6.total_what1 == 0);
    CHECK(t6.total_what2 == 2);

    const auto t0 = make_table_report(0);
    REQUIRE(t0.d_rows.size() == 1);
    REQUIRE(t0.a_rows.size() == 1);
    CHECK(t0.total_w1 == 1);
    CHECK(t0.total_w2 == 1);
    CHECK(t0.total_what1 == 1);
    CHECK(t0.total_what2 == 1);

    const auto t1 = make_table_report(1);
    REQUIRE(t1.d_rows.size() == 1);
    CHECK(t1.d_rows[0].chain == 1);
    CHECK(t1.d_rows[0].w1 == 0);
    CHECK(t1.d_rows[0].w2 == 0);
    REQUIRE(t1.a_rows.size() == 1);
    CHECK(t1.a_rows[0].what1 == 0);
    CHECK(t1.a_rows[0].what2 == 0);
    CHECK(build_side("cor1a", side::lhs, 1).coeff(1).is_zero());
}
