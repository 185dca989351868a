#pragma once

#include <string>
#include <vector>

#include "nonblock/unary.hpp"
#include "nonblock/verify.hpp"

namespace nonblock {

// JSON documents for tooling, all versioned with "schema": "nonblock/1".
// Witnesses render as event arrays (null when absent); certificate integers
// render as decimal strings since k and ell can exceed 64 bits.

std::string verdict_to_json(const Verdict& v);
std::string prefix_report_to_json(const PrefixReport& r);
std::string certificate_to_json(const LassoCertificate& c);

// Verdict plus certificate in one document, as printed by the
// one-shared-event check.
std::string unary_decision_to_json(const UnaryDecision& d);

// Generator output: what was written and what verdict the oracle expects
// ("unknown" when it was not computable).
std::string manifest_to_json(const std::string& kind,
                             const std::vector<std::string>& files,
                             const std::string& expected);

}  // namespace nonblock
