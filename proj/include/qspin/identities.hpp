#pragma once

// Builders for both sides of every q-series identity the toolkit checks, the
// registry that names them, and the coefficient-wise verifier.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qspin/qseries.hpp"

namespace qspin {

enum class side { lhs, rhs };

enum class check_kind {
    equality,    // lhs == rhs coefficient-wise
    nonnegative, // every lhs coefficient is an integer >= 0
};

using series_builder = std::function<qseries(int order)>;

struct identity_record {
    std::string id;
    std::string description;
    std::string anchor;
    int default_order = 0;
    check_kind kind = check_kind::equality;
    series_builder lhs;
    series_builder rhs; // empty for nonnegative checks
    bool experimental = false;
};

enum class outcome { pass, fail };

struct mismatch {
    int q = 0;
    sym_coeff lhs;
    sym_coeff rhs;
};

struct verification_report {
    std::string id;
    int order = 0;
    outcome result = outcome::pass;
    std::optional<mismatch> first_mismatch; // present iff result == fail
    std::chrono::duration<double, std::milli> elapsed{};
};

// Immutable after construction; records are sorted by id.
class registry {
public:
    static const registry& instance();

    std::span<const identity_record> records() const noexcept { return records_; }
    // Registered ids plus any "heine:A,B,C,D" satisfying the grid
    // constraints. Throws unknown_identity or builder_precondition_violated.
    identity_record find(std::string_view id) const;

private:
    registry();
    std::vector<identity_record> records_;
};

// sum_{n>=0} (sz a)_n / ((q)_n (sz q)_n) (sz)^n q^{n(n+1)/2} with
// sz = z_sign * z.
qseries build_F(int order, int z_sign = 1);

// sum_{n>=0} (sz a)_n (sz q^{n+1})_inf / (q)_n (p z)^n q^{n(n+1)/2} with
// sz = z_sign * z and p = power_sign. (1, 1) and (-1, -1) are the two sides
// of the evenness identity; mixed signs build the mutation fixture.
qseries build_thm1_side(int z_sign, int power_sign, int order);

// sum_{n>=0} (e1 q^{n+1})_inf e2^n q^{n(n+1)/2} [(-q)_n/(q)_n if
// overpartitions]. The four sides of the z = 1 specializations.
qseries build_chain_side(int eps1, int eps2, bool overpartitions, int order);

qseries build_side(std::string_view id, side s, int order);

verification_report verify(const identity_record& record, int order);
verification_report verify(std::string_view id, int order);
// Default order per record unless overridden; reports ordered by id.
std::vector<verification_report> verify_all(const std::map<std::string, int>& order_overrides = {},
                                            unsigned threads = 0);

} // namespace qspin
