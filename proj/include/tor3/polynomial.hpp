#ifndef TOR3_POLYNOMIAL_HPP
#define TOR3_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "tor3/fp.hpp"
#include "tor3/monomial.hpp"

namespace tor3 {

// One coefficient-monomial pair.  Terms with zero coefficient never appear
// inside a normalized Polynomial.
struct Term {
    Fp coeff;
    Monomial mono;
};

// A multivariate polynomial over a prime field, kept in canonical form:
// terms sorted strictly descending under the attached monomial order, no
// zero coefficients, equal monomials merged.  The order and the field
// travel with the polynomial so every operation is unambiguous.
class Polynomial {
  public:
    Polynomial(const PrimeField& field, const MonomialOrder& ord);
    Polynomial(const PrimeField& field, const MonomialOrder& ord, std::vector<Term> terms);

    const PrimeField& field() const { return field_; }
    const MonomialOrder& order() const { return ord_; }
    int nvars() const { return ord_.nvars(); }

    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    // Leading data under the attached order.  Throws Error on the zero
    // polynomial, which has no leading term.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    Fp leading_coeff() const { return leading_term().coeff; }

    // Total degree (max over terms); -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // Degree shared by all terms.  Throws NotHomogeneous otherwise (zero
    // polynomial passes, reporting -1).
    int homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const Fp& c) const;
    Polynomial times_term(const Term& t) const;
    Polynomial times_monomial(const Monomial& m) const;
    // Divides through by the leading coefficient.
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    PrimeField field_;
    MonomialOrder ord_;
    std::vector<Term> terms_;

    void normalize();
};

Polynomial monomial_poly(const PrimeField& field, const MonomialOrder& ord, const Monomial& m,
                         const Fp& c);

std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

}  // namespace tor3

#endif
