#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qspin {

enum class errc {
    unbound_symbol,
    negative_valuation,
    invalid_poch_base,
    order_mismatch,
    non_unit_constant_term,
    zero_valuation_base,
    index_out_of_order,
    unknown_identity,
    builder_precondition_violated,
    not_distinct,
    not_in_a,
    class_weight_mismatch,
    invalid_argument,
};

std::string_view errc_name(errc code) noexcept;

// Every contract violation in the library surfaces as this exception; the
// code identifies which one.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace qspin
