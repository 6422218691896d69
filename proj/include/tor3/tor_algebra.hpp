#ifndef TOR3_TOR_ALGEBRA_HPP
#define TOR3_TOR_ALGEBRA_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tor3/koszul.hpp"
#include "tor3/quotient_ring.hpp"

namespace tor3 {

/// Label of a Tor-algebra class: B, C(3), T, G(r), H(p,q), or UNCLASSIFIED.
struct ClassLabel {
    std::string name;         // "B", "C", "T", "G", "H", or "UNCLASSIFIED"
    std::vector<int> params;  // C: {3}; G: {r}; H: {p, q}; UNCLASSIFIED: {p, q, r}

    /// Human-readable form, e.g. "C(3)", "G(2)", "H(0,1)".
    std::string display() const;
};

/// Multiplication tables of the homology algebra in global homology coordinates.
///
/// t11[a][b] holds the class of the product of the a-th and b-th degree-one
/// representatives, as coordinates over the degree-two basis; t12[a][b] holds
/// the product of the a-th degree-one and b-th degree-two representatives over
/// the degree-three basis.  deg1/deg2 record the internal degrees of the
/// representatives the tables were built from.
struct MultTables {
    std::vector<int> deg1;
    std::vector<int> deg2;
    std::vector<std::vector<FpVec>> t11;
    std::vector<std::vector<FpVec>> t12;
};

/// Invariants of the multiplication: p = rank of the span of all products of
/// two degree-one classes, q = rank of the span of all products of a
/// degree-one and a degree-two class, r = rank of the pairing map sending a
/// degree-two class f to the linear map e -> e*f.
struct MultInvariants {
    int p = 0;
    int q = 0;
    int r = 0;
};

/// Builds multiplication tables for arbitrary representative lists (used both
/// for the canonical basis and for re-coordinatized bases in the audit).
/// Products whose internal degrees sum past the relevant homology bound are
/// recorded as zero without being computed; all computed products are checked
/// for graded commutativity at the chain level.
MultTables tables_from_reps(const QuotientRing& ring, const HomologyBasis& homology,
                            const std::vector<KoszulElement>& reps1,
                            const std::vector<KoszulElement>& reps2);

/// Tables over the canonical homology basis.
MultTables build_mult_tables(const QuotientRing& ring, const HomologyBasis& homology);

/// Ranks (p, q, r) of the given tables; h2 and h3 are the ambient ranks.
MultInvariants invariants_pqr(const PrimeField& field, const MultTables& tables, int h2, int h3);

/// Decision tree on the invariant triple.
ClassLabel classify_pqr(const MultInvariants& inv);

/// Everything the pipeline reports about one ideal.
struct ClassificationReport {
    long long characteristic = 0;
    std::string order_name;
    GateResult gate;
    // The fields below are populated only when the gate admits the ring.
    int mu = 0;
    int type = 0;
    std::array<int, 3> ranks{0, 0, 0};
    std::vector<int> hilbert;  // values in degrees 0..working degree
    std::array<int, 3> pqr{0, 0, 0};
    ClassLabel label;
    std::vector<std::pair<std::string, bool>> checks;
};

struct AnalysisOptions {
    std::optional<int> max_degree;  // caps the homology scan degrees only
};

/// Report plus the intermediate objects, for callers that keep working with
/// the ring (tables printing, audits).  The pointers are null when the gate
/// rejects the ring.
struct Analysis {
    ClassificationReport report;
    std::shared_ptr<QuotientRing> ring;
    std::shared_ptr<HomologyBasis> homology;
    std::shared_ptr<MultTables> tables;
};

/// Runs the full pipeline: Groebner basis, quotient tables, gate, homology,
/// multiplication tables, classification.  Stage failures are rethrown as
/// PipelineError naming the stage.
Analysis analyze(const PrimeField& field, const MonomialOrder& order,
                 const std::vector<Polynomial>& generators, const AnalysisOptions& options = {});

}  // namespace tor3

#endif
