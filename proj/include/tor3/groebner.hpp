#ifndef TOR3_GROEBNER_HPP
#define TOR3_GROEBNER_HPP

#include <vector>

#include "tor3/polynomial.hpp"

namespace tor3 {

/// Reduced Groebner basis of a homogeneous ideal. Members are monic, no term
/// of any member is divisible by another member's lead, and the members are
/// sorted ascending by lead monomial. The original generators are retained
/// for reporting. An empty member list represents the zero ideal.
class GroebnerBasis {
  public:
    GroebnerBasis(const PrimeField& field, const MonomialOrder& ord,
                  std::vector<Polynomial> original, std::vector<Polynomial> reduced);

    const PrimeField& field() const { return field_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial>& members() const { return members_; }
    const std::vector<Polynomial>& original_generators() const { return original_; }

    bool is_zero_ideal() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }

    /// Lead monomials of the members; for a reduced basis these are the
    /// minimal monomial generators of the initial ideal.
    std::vector<Monomial> lead_monomials() const;

    /// Largest member degree; -1 for the zero ideal.
    int max_degree() const;

  private:
    PrimeField field_;
    MonomialOrder ord_;
    std::vector<Polynomial> original_;
    std::vector<Polynomial> members_;
};

/// Buchberger's algorithm with normal pair selection (lowest lcm degree
/// first), the coprime-lead and chain criteria, and final interreduction.
/// Zero generators are dropped; an all-zero input yields the zero ideal.
/// Throws NotHomogeneous if any generator mixes degrees.
GroebnerBasis buchberger(const PrimeField& field, const MonomialOrder& ord,
                         const std::vector<Polynomial>& gens);

/// Full normal form: no term of the result is divisible by any basis lead.
/// Linear and idempotent; f - normal_form(f) lies in the ideal.
Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis);

/// Max over cardinality-k subsets of mons of deg lcm(subset); -1 when fewer
/// than k monomials are given.
int subset_lcm_degree_bound(const std::vector<Monomial>& mons, int k);

}  // namespace tor3

#endif
