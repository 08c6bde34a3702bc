#include "qspin/error.hpp"

namespace qspin {

std::string_view errc_name(errc code) noexcept
{
    switch (code) {
    case errc::unbound_symbol: return "UnboundSymbol";
    case errc::negative_valuation: return "NegativeValuation";
    case errc::invalid_poch_base: return "InvalidPochBase";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::zero_valuation_base: return "ZeroValuationBase";
    case errc::index_out_of_order: return "IndexOutOfOrder";
    case errc::unknown_identity: return "UnknownIdentity";
    case errc::builder_precondition_violated: return "BuilderPreconditionViolated";
    case errc::not_distinct: return "NotDistinct";
    case errc::not_in_a: return "NotInA";
    case errc::class_weight_mismatch: return "ClassWeightMismatch";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace qspin
