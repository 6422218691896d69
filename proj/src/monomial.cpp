#include "tor3/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace tor3 {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    deg_ = 0;
    for (int x : e_) {
        assert(x >= 0);
        deg_ += x;
    }
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(int nvars, int index, int power) {
    std::vector<int> e(nvars, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
    assert(nvars() == o.nvars());
    std::vector<int> e(e_);
    for (int i = 0; i < o.nvars(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw NotDivisible("monomial quotient undefined: divisor does not divide");
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = b.exp(i) - a.exp(i);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind), prec_(nvars) {
    std::iota(prec_.begin(), prec_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), prec_(std::move(precedence)) {
    std::vector<int> check(prec_);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < static_cast<int>(check.size()); ++i)
        if (check[i] != i) throw Error("variable precedence is not a permutation");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == nvars() && b.nvars() == nvars());
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (kind_ == OrderKind::deglex) {
        for (int r = 0; r < nvars(); ++r) {
            int d = a.exp(prec_[r]) - b.exp(prec_[r]);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    // degrevlex: the last nonzero difference, scanned from the least
    // variable, decides; a smaller exponent there wins.
    for (int r = nvars() - 1; r >= 0; --r) {
        int d = a.exp(prec_[r]) - b.exp(prec_[r]);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

namespace {

void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.push_back(Monomial(cur));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree, const MonomialOrder& ord) {
    assert(degree >= 0 && nvars >= 1);
    std::vector<Monomial> all;
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, 0, degree, cur, all);
    std::sort(all.begin(), all.end(),
              [&ord](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return all;
}

long long monomial_count(int nvars, int degree) {
    // C(degree + nvars - 1, nvars - 1)
    long long num = 1, den = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    assert(static_cast<int>(names.size()) == m.nvars());
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (m.exp(i) > 1) os << "^" << m.exp(i);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace tor3
