#pragma once

#include <string>

#include "apkit/partition_type.hpp"

namespace apkit {

// Textual type notation: "1^4 2^3 3^2" means k_1=4, k_2=3, k_3=2. Tokens are
// separated by spaces and/or commas; "^1" may be omitted ("3" means k_3=1);
// bases need not be contiguous ("1^89 2^3 5^1" leaves k_4 = 0). Duplicate
// bases are an error. Throws std::invalid_argument on malformed input.
PartitionType parse_type_spec(const std::string& text);

// Canonical form: ascending bases with positive counts, explicit exponents,
// single spaces ("1^4 2^3 3^2"). parse_type_spec(format_type_spec(t)) == t.
std::string format_type_spec(const PartitionType& t);

}  // namespace apkit
