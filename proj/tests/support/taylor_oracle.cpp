#include "taylor_oracle.hpp"

#include <algorithm>

#include "tor3/errors.hpp"

namespace tor3::testsupport {

namespace {

// Minimal generating set: drop duplicates and anything divisible by another
// generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.exponents() < b.exponents();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t l = 0; l < gens.size() && !redundant; ++l)
            redundant = l != i && divides(gens[l], gens[i]);
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

Monomial subset_lcm(const std::vector<Monomial>& gens, const std::vector<int>& subset) {
    Monomial m = Monomial::one(gens.empty() ? 3 : gens[0].nvars());
    for (int g : subset) m = lcm(m, gens[g]);
    return m;
}

void enumerate_subsets(int n, int k, std::vector<int>& cur, int next,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = next; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::map<std::pair<int, int>, int> taylor_betti(const PrimeField& field,
                                                const std::vector<Monomial>& generators) {
    std::vector<Monomial> gens = minimalize(generators);
    const int n = static_cast<int>(gens.size());
    const int top = std::min(n, 4);  // ranks of d_1..d_4 suffice for degrees 0..3

    // Subsets by size, each tagged with the degree of its lcm, plus a lookup
    // from subset to its position within the same (size, degree) block.
    std::vector<std::vector<std::vector<int>>> subsets(top + 1);
    std::vector<std::map<int, std::vector<int>>> by_degree(top + 1);  // degree -> subset indices
    std::vector<std::map<std::vector<int>, int>> position(top + 1);   // subset -> index in block
    for (int size = 0; size <= top; ++size) {
        std::vector<int> cur;
        enumerate_subsets(n, size, cur, 0, subsets[size]);
        for (std::size_t s = 0; s < subsets[size].size(); ++s) {
            int degree = subset_lcm(gens, subsets[size][s]).degree();
            position[size].emplace(subsets[size][s],
                                   static_cast<int>(by_degree[size][degree].size()));
            by_degree[size][degree].push_back(static_cast<int>(s));
        }
    }

    // rank of the degree-j part of the map (size i subsets) -> (size i-1
    // subsets); an entry survives the tensor with k exactly when dropping the
    // element does not change the lcm.
    std::map<std::pair<int, int>, int> rank;
    for (int i = 1; i <= top; ++i) {
        for (const auto& [degree, cols] : by_degree[i]) {
            auto rows = by_degree[i - 1].find(degree);
            int nrows = rows == by_degree[i - 1].end() ? 0 : static_cast<int>(rows->second.size());
            FpMatrix m(field, nrows, static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const std::vector<int>& subset = subsets[i][cols[c]];
                Monomial full = subset_lcm(gens, subset);
                for (int t = 0; t < i; ++t) {
                    std::vector<int> smaller = subset;
                    smaller.erase(smaller.begin() + t);
                    if (subset_lcm(gens, smaller) != full) continue;
                    Fp sign = t % 2 == 0 ? field.one() : -field.one();
                    m.set(position[i - 1].at(smaller), static_cast<int>(c), sign);
                }
            }
            rank[{i, degree}] = rank_of(m);
        }
    }

    auto count = [&](int i, int j) {
        if (i > top) return 0;
        auto hit = by_degree[i].find(j);
        return hit == by_degree[i].end() ? 0 : static_cast<int>(hit->second.size());
    };
    auto rank_at = [&](int i, int j) {
        auto hit = rank.find({i, j});
        return hit == rank.end() ? 0 : hit->second;
    };

    std::map<std::pair<int, int>, int> betti;
    for (int i = 0; i <= std::min(top, 3); ++i)
        for (const auto& [degree, cols] : by_degree[i]) {
            (void)cols;
            int b = count(i, degree) - rank_at(i, degree) - rank_at(i + 1, degree);
            if (b < 0) throw Error("taylor_betti: negative rank bookkeeping");
            if (b != 0) betti[{i, degree}] = b;
        }
    return betti;
}

}  // namespace tor3::testsupport
