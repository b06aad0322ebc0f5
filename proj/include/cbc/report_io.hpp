#pragma once

#include "cbc/congruences.hpp"
#include "cbc/search.hpp"

#include "json.hpp"

namespace cbc {

using ordered_json = nlohmann::ordered_json;

/// Residues and moduli are emitted as decimal strings: grids at large
/// p^(2+t) produce values past 2^53 where JSON numbers lose exactness.
ordered_json report_to_json(const CongruenceReport& r);

/// Canonical summary: deterministic fields only, wall time excluded so
/// runs at different parallelism serialize identically.
ordered_json summary_to_json(const SearchSummary& s);

std::string reports_to_csv(const std::vector<CongruenceReport>& reports);
std::string reports_to_text(const std::vector<CongruenceReport>& reports);
std::string summary_to_csv(const SearchSummary& s);
std::string summary_to_text(const SearchSummary& s);

} // namespace cbc
