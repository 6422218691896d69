#ifndef TOR3_KOSZUL_HPP
#define TOR3_KOSZUL_HPP

#include <array>
#include <optional>
#include <vector>

#include "tor3/quotient_ring.hpp"

namespace tor3 {

/// Element of the Koszul complex K = R<e_x, e_y, e_z> living in a single
/// bidegree: homological degree i (the cardinality of the populated exterior
/// subsets) and internal degree j. Exterior subsets are bitmasks with bit 0
/// for x, bit 1 for y, bit 2 for z; comp[mask] holds the coefficient of
/// e_mask as coordinates in R_{j-i} and is empty for subsets of the wrong
/// cardinality.
struct KoszulElement {
    int homological;
    int internal;
    std::array<FpVec, 8> comp;
};

/// Masks of cardinality i in ascending numeric order; this fixes the block
/// layout of every graded piece.
const std::vector<int>& koszul_masks(int i);

/// Sign picked up when the differential removes variable v from subset mask.
int removal_sign(int mask, int v);

KoszulElement koszul_zero(const QuotientRing& R, int i, int j);
bool is_zero(const KoszulElement& u);
KoszulElement koszul_add(const KoszulElement& a, const KoszulElement& b);
KoszulElement koszul_scale(const Fp& c, const KoszulElement& a);

/// dim K_{i,j} = C(3, i) * hilbert(j - i).
int koszul_dim(const QuotientRing& R, int i, int j);

/// Flat coordinates over the block layout (masks ascending, standard
/// monomials within each block), and back.
FpVec koszul_flatten(const QuotientRing& R, const KoszulElement& u);
KoszulElement koszul_unflatten(const QuotientRing& R, int i, int j, const FpVec& flat);

/// Convenience constructor: coefficient polynomials per mask, all of one
/// cardinality i; internal degree inferred as coefficient degree + i.
KoszulElement koszul_element(const QuotientRing& R, int i,
                             const std::vector<std::pair<int, Polynomial>>& parts);

/// Matrix of the differential K_{i,j} -> K_{i-1,j} over the block bases.
FpMatrix differential_matrix(const QuotientRing& R, int i, int j);

/// The differential applied to one element (homological degree drops by 1).
KoszulElement boundary(const QuotientRing& R, const KoszulElement& u);

/// Exterior product with the shuffle sign; coefficients multiply in R.
/// Requires combined homological degree at most 3.
KoszulElement wedge(const QuotientRing& R, const KoszulElement& u, const KoszulElement& v);

/// One bidegree (i, j) of the homology: canonical representatives obtained
/// by completing the echelon boundary basis to the echelon cycle basis, plus
/// the span machinery for expressing arbitrary cycles.
struct HomologyPiece {
    int i = 0, j = 0;
    int cycle_rank = 0, boundary_rank = 0;
    std::vector<KoszulElement> reps;
    std::vector<FpVec> rep_vectors;         // flattened reps, echelon rows
    std::vector<FpVec> boundary_columns;    // image of the incoming differential
    std::optional<SpanSolver> solver;       // over [rep_vectors | boundary_columns]
};

/// All homology pieces H_i(K)_j for i = 1..3 and j up to the per-degree
/// scan bound (the ring's Taylor-type bound, optionally capped).
class HomologyBasis {
  public:
    HomologyBasis(const QuotientRing& R, std::optional<int> degree_cap);

    /// Effective scan ceiling for H_i (after any cap); -1 when H_i has no
    /// pieces to scan.
    int bound(int i) const { return bound_[i]; }

    int rank(int i) const;
    int rank_at(int i, int j) const;

    /// Null when (i, j) is outside the scanned range.
    const HomologyPiece* piece(int i, int j) const;

    /// Representatives of H_i across all degrees, ordered by (j, position);
    /// this fixes the global coordinate convention for multiplication tables.
    std::vector<const KoszulElement*> reps(int i) const;

    /// Offset of piece (i, j)'s representatives inside the global ordering.
    int global_offset(int i, int j) const;

  private:
    std::array<int, 4> bound_;
    std::array<std::vector<HomologyPiece>, 4> pieces_;  // per i, indexed j - i
};

HomologyBasis homology_basis(const QuotientRing& R, std::optional<int> degree_cap = std::nullopt);

/// Class of the cycle z in the global coordinates of H_{i}: coordinates c
/// with z - sum c_l rep_l a boundary. Throws NotACycle if dz != 0, and
/// DegreeOutOfRange for a nonzero cycle above the scan bound (callers are
/// expected to have certified such products zero by degree instead).
FpVec reduce_to_homology(const QuotientRing& R, const HomologyBasis& H, const KoszulElement& z);

}  // namespace tor3

#endif
