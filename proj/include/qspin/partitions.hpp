#pragma once

// Partitions in frequency notation, the chain/frequency statistics used by
// the weighted identities, the weights themselves, and the decompositions
// that justify them combinatorially.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qspin/qseries.hpp"

namespace qspin {

class partition {
public:
    partition() = default; // the empty partition of 0
    // freqs[i - 1] is the multiplicity of part i; trailing zeros are trimmed.
    explicit partition(std::vector<int> freqs);

    // From (part, multiplicity) pairs, e.g. {{1, 2}, {2, 2}} for (1^2,2^2).
    static partition from_frequencies(std::initializer_list<std::pair<int, int>> pairs);
    static partition from_parts(std::span<const int> parts);
    // (1^1, 2^1, ..., k^1)
    static partition staircase(int k);

    const std::vector<int>& freqs() const noexcept { return freqs_; }
    int freq(int part) const noexcept
    {
        return part >= 1 && part <= largest_part() ? freqs_[static_cast<std::size_t>(part - 1)] : 0;
    }
    int largest_part() const noexcept { return static_cast<int>(freqs_.size()); }
    int size() const noexcept;
    int parts() const noexcept;
    bool is_distinct() const noexcept;

    // Lexicographic on the frequency vector.
    friend auto operator<=>(const partition&, const partition&) = default;

private:
    std::vector<int> freqs_;
};

// "(1^2,2^2)"; the empty partition prints as "()".
std::string to_string(const partition& p);

// Length of the initial run f_1, ..., f_t of nonzero frequencies.
int chain_length(const partition& p) noexcept;
// Largest part with multiplicity >= j, 0 if none.
int max_part_with_freq(const partition& p, int j) noexcept;
// Number of part sizes with multiplicity >= j.
int parts_with_freq(const partition& p, int j) noexcept;

struct partition_stats {
    int size = 0;
    int parts = 0;
    int chain = 0;
    std::vector<int> p; // p[j - 1] for 1 <= j <= max_j
    std::vector<int> r; // r[j - 1] for 1 <= j <= max_j
};

partition_stats stats(const partition& p, int max_j);

enum class partition_class {
    all,
    distinct, // every multiplicity <= 1
    a_set,    // p_2 <= t: repeated parts confined to the initial chain
};

bool in_class(const partition& p, partition_class c) noexcept;

// All partitions of n in the class, ordered lexicographically by frequency
// vector.
std::vector<partition> enumerate(int n, partition_class c);

enum class weight_kind { w1, w2, what1, what2 };

// [1 - f_1 (1 - (-1)^t)/2] (-1)^{i #}; throws not_distinct.
std::int64_t weight_w(const partition& p, int i);
// 2^{r_2} ((-1)^t + (-1)^{p_2})/2 (-1)^{(i-1)(r_1 + t + p_2)}; throws not_in_a.
std::int64_t weight_what(const partition& p, int i);
std::int64_t weight(const partition& p, weight_kind w);
partition_class weight_domain(weight_kind w) noexcept;

// sum_{k=0}^{t} (-e1)^{# - k} e2^k; throws not_distinct.
std::int64_t raw_weight_lhs(const partition& p, int eps1, int eps2);
// 2^{r_2} sum_{k=p_2}^{t} (-e1)^{r_1 - t - p_2 - k} e2^k, sign exponents taken
// mod 2; throws not_in_a.
std::int64_t raw_weight_rhs(const partition& p, int eps1, int eps2);

struct lhs_piece {
    partition distinct_part; // distinct, parts >= k + 1
    partition staircase;     // (1^1, ..., k^1)
};

struct rhs_piece {
    partition distinct_part; // distinct, parts >= k + 1
    partition staircase;     // (1^1, ..., k^1)
    partition over;          // parts <= k, absorbs every repetition
};

// Every (distinct part, staircase) pair whose frequencies add up to p.
std::vector<lhs_piece> decompose_lhs(const partition& p);
// Every (distinct part, staircase, overpartition part) triple adding up to p.
std::vector<rhs_piece> decompose_rhs(const partition& p);

// Slot n holds the total weight of the class's partitions of n. Throws
// class_weight_mismatch when the weight is not defined on the class.
qseries weighted_gf(int n_max, partition_class c, weight_kind w);

struct table_d_row {
    partition pi;
    int chain;
    std::int64_t w1, w2;
};

struct table_a_row {
    partition pi;
    int chain, p2, r2;
    std::int64_t what1;
    int r1;
    std::int64_t what2;
};

struct table_report {
    int n = 0;
    std::vector<table_d_row> d_rows;
    std::vector<table_a_row> a_rows;
    std::int64_t total_w1 = 0, total_w2 = 0, total_what1 = 0, total_what2 = 0;
};

table_report make_table_report(int n);

} // namespace qspin
