#ifndef TOR3_QUOTIENT_RING_HPP
#define TOR3_QUOTIENT_RING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tor3/groebner.hpp"
#include "tor3/matrix.hpp"

namespace tor3 {

/// Element of a single graded piece R_j, written in the standard-monomial
/// basis of that degree.
struct RingCoords {
    int degree;
    FpVec coords;  // length = hilbert(degree)
};

enum class GateReason { ZeroIdeal, EmbeddingDimDrop, PositiveDepth };

std::string to_string(GateReason r);

struct GateResult {
    bool eligible;
    std::optional<GateReason> reason;
    std::string message;
};

/// Graded quotient R = k[x_1..x_n]/I presented by a reduced Groebner basis.
/// All per-degree data (standard monomials, variable multiplication maps,
/// socle, minimal generator count) is computed eagerly in the constructor up
/// to a working degree derived from the lcm degrees of the initial ideal's
/// generators; the object is immutable afterwards.
class QuotientRing {
  public:
    explicit QuotientRing(GroebnerBasis gb);

    const GroebnerBasis& gb() const { return gb_; }
    const PrimeField& field() const { return gb_.field(); }
    const MonomialOrder& order() const { return gb_.order(); }
    int nvars() const { return gb_.order().nvars(); }

    /// Largest degree with cached data.
    int working_degree() const { return working_; }

    /// Internal-degree ceiling for Koszul homology in homological degree
    /// i = 1..nvars: the max lcm degree over cardinality-i subsets of the
    /// initial ideal's minimal generators. H_i vanishes above it; -1 means
    /// H_i = 0 outright.
    int homology_degree_bound(int i) const;

    /// Standard monomials of degree j (not divisible by any basis lead),
    /// descending under the ring's order. Throws DegreeOutOfRange beyond the
    /// working degree.
    const std::vector<Monomial>& std_monomials(int j) const;
    int hilbert(int j) const { return static_cast<int>(std_monomials(j).size()); }
    bool is_artinian() const { return hilbert(working_) == 0; }

    Polynomial normal_form(const Polynomial& f) const;

    /// Coordinates of NF(f) in its degree; f must be homogeneous and nonzero
    /// (use zero_coords for the zero element of a known degree).
    RingCoords coords(const Polynomial& f) const;
    RingCoords zero_coords(int degree) const;
    Polynomial to_polynomial(const RingCoords& a) const;

    /// Coordinates of NF(a * b) in degree a.degree + b.degree.
    RingCoords multiply(const RingCoords& a, const RingCoords& b) const;

    /// Matrix of multiplication by variable var: R_j -> R_{j+1}.
    const FpMatrix& var_map(int var, int j) const;

    /// Echelon basis of the socle (0 : m), one entry per vector, ordered by
    /// degree. The rank equals the type of R.
    const std::vector<std::pair<int, FpVec>>& socle() const { return socle_; }
    int socle_rank() const { return static_cast<int>(socle_.size()); }

    /// Minimal number of generators of I, computed per degree as
    /// dim I_j - dim (m*I)_j by exact linear algebra.
    int min_generator_count() const { return static_cast<int>(mu_degrees_.size()); }
    const std::vector<int>& min_generator_degrees() const { return mu_degrees_; }

    /// Eligibility for the three-variable classification: I nonzero, I
    /// inside m^2, and socle nonzero (depth 0).
    const GateResult& gate() const { return gate_; }

  private:
    GroebnerBasis gb_;
    int working_;
    std::vector<int> bounds_;                       // index 1..nvars
    std::vector<std::vector<Monomial>> std_;        // per degree 0..working_
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<std::vector<FpMatrix>> varmul_;     // [j][var], j = 0..working_-1
    std::vector<std::pair<int, FpVec>> socle_;
    std::vector<int> mu_degrees_;
    GateResult gate_;

    void build_tables();
    void build_socle();
    void build_min_generators();
    void build_gate();
};

}  // namespace tor3

#endif
