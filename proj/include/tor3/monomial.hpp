#ifndef TOR3_MONOMIAL_HPP
#define TOR3_MONOMIAL_HPP

#include <string>
#include <vector>

#include "tor3/errors.hpp"

namespace tor3 {

/// Power product x_0^{a_0} ... x_{n-1}^{a_{n-1}} with cached total degree.
class Monomial {
  public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int nvars);
    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exp(int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    std::vector<int> e_;
    int deg_;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
/// b / a; throws NotDivisible unless a | b.
Monomial quotient(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { degrevlex, deglex };

/// Graded monomial order: compares by total degree first, then by the given
/// tie-break rule over a fixed variable precedence (precedence[0] largest).
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, int nvars);
    MonomialOrder(OrderKind kind, std::vector<int> precedence);

    OrderKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(prec_.size()); }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.prec_ == b.prec_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

  private:
    OrderKind kind_;
    std::vector<int> prec_;
};

/// All monomials of the given total degree, sorted descending under ord.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, const MonomialOrder& ord);

/// Number of degree-d monomials in nvars variables.
long long monomial_count(int nvars, int degree);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace tor3

#endif
