#ifndef TOR3_REPORT_HPP
#define TOR3_REPORT_HPP

#include <string>
#include <vector>

#include "tor3/tor_algebra.hpp"

namespace tor3 {

/// JSON rendering with the stable key set
/// {"char","mu","type","ranks","hilbert","pqr","class","gate","checks"}.
/// Gate-rejected reports keep every key and carry null classification fields.
/// The returned string is newline-terminated and byte-stable for fixed input.
std::string report_to_json(const ClassificationReport& report);

/// Human-readable rendering.
std::string report_to_text(const ClassificationReport& report);

/// Representative cycles and the full multiplication tables, for --tables.
std::string tables_to_text(const QuotientRing& ring, const HomologyBasis& homology,
                           const MultTables& tables, const std::vector<std::string>& variables);

}  // namespace tor3

#endif
