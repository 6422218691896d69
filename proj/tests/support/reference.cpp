#include "reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tor3::testsupport {

long long inverse_euclid(long long a, long long p) {
    long long r0 = p, r1 = ((a % p) + p) % p;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw Error("inverse_euclid: argument is not a unit");
    return ((t0 % p) + p) % p;
}

namespace {

// Determinant of the submatrix picked out by the given rows and columns.
Fp minor_det(const FpMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return m.field().one();
    if (rows.size() == 1) return m.get(rows[0], cols[0]);
    Fp det = m.field().zero();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    Fp sign = m.field().one();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Fp a = m.get(rows[0], cols[j]);
        if (!a.is_zero()) {
            std::vector<int> sub_cols;
            for (std::size_t l = 0; l < cols.size(); ++l)
                if (l != j) sub_cols.push_back(cols[l]);
            det += sign * a * minor_det(m, sub_rows, sub_cols);
        }
        sign = -sign;
    }
    return det;
}

// All size-k index subsets of {0..n-1}, ascending within each subset.
void subsets_of_size(int n, int k, std::vector<int>& cur, int next,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = next; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_of_size(n, k, cur, 0, out);
    return out;
}

}  // namespace

int rank_by_minors(const FpMatrix& m) {
    int bound = std::min(m.rows(), m.cols());
    for (int r = bound; r >= 1; --r) {
        for (const std::vector<int>& rows : subsets(m.rows(), r))
            for (const std::vector<int>& cols : subsets(m.cols(), r))
                if (!minor_det(m, rows, cols).is_zero()) return r;
    }
    return 0;
}

int compare_exponents_reference(OrderKind kind, const std::vector<int>& precedence,
                                const std::vector<int>& a, const std::vector<int>& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db ? -1 : 1;
    if (kind == OrderKind::deglex) {
        for (int v : precedence) {
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    }
    for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
    return 0;
}

bool in_span_of_ideal(const PrimeField& field, const MonomialOrder& ord,
                      const std::vector<Polynomial>& gens, const Polynomial& f) {
    if (f.is_zero()) return true;
    int d = f.homogeneous_degree();
    std::vector<Monomial> basis = monomials_of_degree(ord.nvars(), d, ord);
    std::map<std::vector<int>, int> where;
    for (std::size_t k = 0; k < basis.size(); ++k)
        where.emplace(basis[k].exponents(), static_cast<int>(k));
    auto vectorize = [&](const Polynomial& g) {
        FpVec v(basis.size(), field.zero());
        for (const Term& t : g.terms()) v[where.at(t.mono.exponents())] = t.coeff;
        return v;
    };
    std::vector<FpVec> generators;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.homogeneous_degree();
        if (dg > d) continue;
        for (const Monomial& m : monomials_of_degree(ord.nvars(), d - dg, ord))
            generators.push_back(vectorize(g.times_monomial(m)));
    }
    SpanSolver solver(field, static_cast<int>(basis.size()), generators);
    return solver.solve(vectorize(f)).has_value();
}

}  // namespace tor3::testsupport
