#include "tor3/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace tor3 {

GroebnerBasis::GroebnerBasis(const PrimeField& field, const MonomialOrder& ord,
                             std::vector<Polynomial> original, std::vector<Polynomial> reduced)
    : field_(field), ord_(ord), original_(std::move(original)), members_(std::move(reduced)) {}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
    std::vector<Monomial> leads;
    leads.reserve(members_.size());
    for (const Polynomial& g : members_) leads.push_back(g.leading_monomial());
    return leads;
}

int GroebnerBasis::max_degree() const {
    int d = -1;
    for (const Polynomial& g : members_) d = std::max(d, g.degree());
    return d;
}

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
    Polynomial rem(f.field(), f.order());
    while (!f.is_zero()) {
        const Term lt = f.leading_term();  // copy; f changes below
        const Polynomial* red = nullptr;
        for (const Polynomial& g : basis) {
            if (divides(g.leading_monomial(), lt.mono)) {
                red = &g;
                break;
            }
        }
        if (red) {
            f -= red->times_term(
                {lt.coeff / red->leading_coeff(), quotient(lt.mono, red->leading_monomial())});
        } else {
            // The leading term is irreducible; park it in the remainder.
            Polynomial t = monomial_poly(f.field(), f.order(), lt.mono, lt.coeff);
            rem += t;
            f -= t;
        }
    }
    return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term({f.leading_coeff().inv(), quotient(l, f.leading_monomial())});
    Polynomial b = g.times_term({g.leading_coeff().inv(), quotient(l, g.leading_monomial())});
    return a - b;
}

struct Pair {
    int i, j;  // i < j
    int lcm_degree;
};

}  // namespace

GroebnerBasis buchberger(const PrimeField& field, const MonomialOrder& ord,
                         const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw NotHomogeneous("ideal generator is not homogeneous");
        basis.push_back(g.monic());
    }
    if (basis.empty()) return GroebnerBasis(field, ord, gens, {});

    std::vector<Pair> pending;
    // Pairs already dispatched (reduced or discarded), keyed (i, j) with i < j;
    // the chain criterion consults this set.
    std::set<std::pair<int, int>> done;
    auto push_pairs = [&](int t) {
        for (int i = 0; i < t; ++i) {
            int d = lcm(basis[i].leading_monomial(), basis[t].leading_monomial()).degree();
            pending.push_back({i, t, d});
        }
    };
    push_pairs(0);
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!pending.empty()) {
        // Normal selection: lowest lcm degree, ties by (j, i).
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.lcm_degree != b.lcm_degree ? a.lcm_degree < b.lcm_degree
                                             : (a.j != b.j ? a.j < b.j : a.i < b.i))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + best);
        done.insert({p.i, p.j});

        const Monomial &li = basis[p.i].leading_monomial(), &lj = basis[p.j].leading_monomial();
        if (coprime(li, lj)) continue;
        Monomial l = lcm(li, lj);
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(basis[k].leading_monomial(), l)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: drop members whose lead is divisible by another kept lead.
    std::vector<int> order_idx(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) order_idx[k] = static_cast<int>(k);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        return ord.less(basis[a].leading_monomial(), basis[b].leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (int k : order_idx) {
        bool redundant = false;
        for (const Polynomial& h : minimal)
            if (divides(h.leading_monomial(), basis[k].leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[k]);
    }

    // Tail-reduce each member against the others; leads are untouched since
    // they are pairwise non-divisible.
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        reduced.push_back(normal_form(minimal[k], others).monic());
    }
    return GroebnerBasis(field, ord, gens, std::move(reduced));
}

int subset_lcm_degree_bound(const std::vector<Monomial>& mons, int k) {
    int n = static_cast<int>(mons.size());
    if (n < k || k <= 0) return -1;
    int best = -1;
    std::vector<int> idx(k);
    // Enumerate k-subsets by odometer.
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        Monomial l = mons[idx[0]];
        for (int t = 1; t < k; ++t) l = lcm(l, mons[idx[t]]);
        best = std::max(best, l.degree());
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
    return best;
}

}  // namespace tor3
