#ifndef TOR3_AUDIT_HPP
#define TOR3_AUDIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tor3/tor_algebra.hpp"

namespace tor3 {

/// One line of the invariant audit.
struct AuditCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AuditOptions {
    std::uint64_t seed = 12345;
    int pair_samples = 10;        // random element pairs for Leibniz/commutativity
    int basis_change_rounds = 5;  // random re-coordinatizations of the homology basis
    int perturbation_rounds = 5;  // random boundary perturbations of representatives
};

/// Runs the full invariant suite against an eligible ring: the differential
/// squares to zero, the Leibniz rule and graded commutativity hold on random
/// elements, the rank identities hold, the stored tables are antisymmetric,
/// the socle is annihilated by the variables, and the invariant triple
/// (p, q, r) survives basis changes and boundary perturbations.
std::vector<AuditCheck> run_audit(const QuotientRing& ring, const HomologyBasis& homology,
                                  const MultTables& tables, const AuditOptions& options = {});

/// Throws InvariantViolation naming the first failed check.
void require_all(const std::vector<AuditCheck>& checks);

}  // namespace tor3

#endif
