#include "tor3/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "tor3/errors.hpp"

namespace tor3 {

Polynomial::Polynomial(const PrimeField& field, const MonomialOrder& ord)
    : field_(field), ord_(ord) {}

Polynomial::Polynomial(const PrimeField& field, const MonomialOrder& ord, std::vector<Term> terms)
    : field_(field), ord_(ord), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        if (t.mono.nvars() != ord_.nvars())
            throw Error("term arity does not match the monomial order");
        if (!t.coeff.is_zero() && t.coeff.modulus() != field_.modulus())
            throw Error("term coefficient from a different field");
    }
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term& a, const Term& b) { return ord_.greater(a.mono, b.mono); });
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (Term& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

int Polynomial::homogeneous_degree() const {
    if (!is_homogeneous()) throw NotHomogeneous("polynomial is not homogeneous");
    return degree();
}

Polynomial Polynomial::operator-() const { return scaled(-field_.one()); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            merged.push_back(terms_[i++]);
        } else if (c < 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Fp s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) merged.push_back({s, terms_[i].mono});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(terms_[i++]);
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    Polynomial r(field_, ord_);
    r.terms_ = std::move(merged);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prods.push_back({a.coeff * b.coeff, a.mono * b.mono});
    return Polynomial(field_, ord_, std::move(prods));
}

Polynomial Polynomial::scaled(const Fp& c) const {
    Polynomial r(field_, ord_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.coeff * c, t.mono});
    return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
    Polynomial r(field_, ord_);
    if (t.coeff.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying every monomial by a fixed one preserves the order, so
    // the result is already sorted.
    for (const Term& a : terms_) r.terms_.push_back({a.coeff * t.coeff, a.mono * t.mono});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    return times_term({field_.one(), m});
}

Polynomial Polynomial::monic() const {
    return scaled(leading_coeff().inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono))
            return false;
    return true;
}

Polynomial monomial_poly(const PrimeField& field, const MonomialOrder& ord, const Monomial& m,
                         const Fp& c) {
    return Polynomial(field, ord, {{c, m}});
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    long long p = f.field().modulus();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : f.terms()) {
        // Print the symmetric representative so small negative coefficients
        // read naturally (p-1 appears as -1).
        long long c = t.coeff.value();
        if (c > p / 2) c -= p;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || t.mono.degree() == 0) {
            os << a;
            if (t.mono.degree() > 0) os << "*";
        }
        if (t.mono.degree() > 0) os << to_string(t.mono, names);
        first = false;
    }
    return os.str();
}

}  // namespace tor3
