#include "tor3/audit.hpp"

#include <random>
#include <sstream>

namespace tor3 {

namespace {

// rng() reduced by hand so that draws are identical across platforms.
long long draw(std::mt19937_64& rng, long long modulus) {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(modulus));
}

KoszulElement random_element(const QuotientRing& ring, int i, int j, std::mt19937_64& rng) {
    KoszulElement u = koszul_zero(ring, i, j);
    const long long p = ring.field().modulus();
    for (int mask : koszul_masks(i))
        for (Fp& x : u.comp[mask]) x = Fp(draw(rng, p), p);
    return u;
}

FpMatrix random_invertible(const PrimeField& field, int n, std::mt19937_64& rng) {
    while (true) {
        FpMatrix m(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = draw(rng, field.modulus());
        if (rank_of(m) == n) return m;
    }
}

bool vec_is_zero(const FpVec& v) {
    for (const Fp& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Replaces the representatives inside each graded piece by a random invertible
// combination; spans and therefore all rank invariants must not move.
std::vector<KoszulElement> recoordinatized_reps(const QuotientRing& ring,
                                                const HomologyBasis& homology, int i,
                                                std::mt19937_64& rng) {
    std::vector<KoszulElement> out;
    for (int j = i; j <= homology.bound(i); ++j) {
        const HomologyPiece* piece = homology.piece(i, j);
        int n = static_cast<int>(piece->reps.size());
        if (n == 0) continue;
        FpMatrix u = random_invertible(ring.field(), n, rng);
        for (int a = 0; a < n; ++a) {
            KoszulElement combo = koszul_zero(ring, i, j);
            for (int b = 0; b < n; ++b)
                combo = koszul_add(combo, koszul_scale(u.get(a, b), piece->reps[b]));
            out.push_back(std::move(combo));
        }
    }
    return out;
}

std::vector<KoszulElement> perturbed_reps(const QuotientRing& ring, const HomologyBasis& homology,
                                          int i, std::mt19937_64& rng) {
    std::vector<KoszulElement> out;
    for (const KoszulElement* rep : homology.reps(i)) {
        KoszulElement noise = random_element(ring, i + 1, rep->internal, rng);
        out.push_back(koszul_add(*rep, boundary(ring, noise)));
    }
    return out;
}

bool tables_equal(const MultTables& a, const MultTables& b) {
    return a.t11 == b.t11 && a.t12 == b.t12;
}

}  // namespace

std::vector<AuditCheck> run_audit(const QuotientRing& ring, const HomologyBasis& homology,
                                  const MultTables& tables, const AuditOptions& options) {
    std::vector<AuditCheck> out;
    std::mt19937_64 rng(options.seed);
    const PrimeField& field = ring.field();
    const int working = ring.working_degree();

    {
        bool ok = true;
        std::string detail = "the composite of consecutive differentials vanishes";
        for (int i = 2; i <= 3 && ok; ++i)
            for (int j = i; j <= working && ok; ++j) {
                FpMatrix square =
                    multiply(differential_matrix(ring, i - 1, j), differential_matrix(ring, i, j));
                if (!(square == FpMatrix(field, square.rows(), square.cols()))) {
                    ok = false;
                    detail = "nonzero composite on the (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") piece";
                }
            }
        out.push_back({"differential_composes_to_zero", ok, detail});
    }

    {
        bool ok = true;
        for (int s = 0; s < options.pair_samples && ok; ++s) {
            int da = static_cast<int>(draw(rng, working));
            int db = static_cast<int>(draw(rng, working - da));
            int iv = 1 + static_cast<int>(draw(rng, 2));
            KoszulElement u = random_element(ring, 1, da + 1, rng);
            KoszulElement v = random_element(ring, iv, db + iv, rng);
            KoszulElement lhs = boundary(ring, wedge(ring, u, v));
            KoszulElement rhs = koszul_add(wedge(ring, boundary(ring, u), v),
                                           koszul_scale(-field.one(), wedge(ring, u, boundary(ring, v))));
            ok = is_zero(koszul_add(lhs, koszul_scale(-field.one(), rhs)));
        }
        out.push_back({"leibniz_rule", ok,
                       std::to_string(options.pair_samples) + " random pairs checked"});
    }

    {
        bool ok = true;
        for (int s = 0; s < options.pair_samples && ok; ++s) {
            // u appears squared below, so its coefficient degree stays within working / 2.
            int da = static_cast<int>(draw(rng, working / 2 + 1));
            int db = static_cast<int>(draw(rng, working + 1 - da));
            int iv = 1 + static_cast<int>(draw(rng, 2));
            KoszulElement u = random_element(ring, 1, da + 1, rng);
            KoszulElement v = random_element(ring, iv, db + iv, rng);
            // u v = (-1)^{|u||v|} v u, and u^2 = 0 in odd degree.
            Fp sign = iv == 1 ? field.one() : -field.one();
            ok = is_zero(koszul_add(wedge(ring, u, v), koszul_scale(sign, wedge(ring, v, u)))) &&
                 is_zero(wedge(ring, u, u));
        }
        out.push_back({"graded_commutativity", ok,
                       std::to_string(options.pair_samples) + " random pairs checked"});
    }

    const int h1 = homology.rank(1), h2 = homology.rank(2), h3 = homology.rank(3);
    {
        int euler = 1 - h1 + h2 - h3;
        std::ostringstream ss;
        ss << "1 - " << h1 << " + " << h2 << " - " << h3 << " = " << euler;
        out.push_back({"euler_characteristic", euler == 0, ss.str()});
    }

    {
        int mu = ring.min_generator_count(), socle = ring.socle_rank();
        bool ok = h1 == mu && h2 == mu - 1 + h3 && h3 == socle;
        std::ostringstream ss;
        ss << "ranks (" << h1 << ", " << h2 << ", " << h3 << ") against mu = " << mu
           << " and socle rank " << socle;
        out.push_back({"rank_identities", ok, ss.str()});
    }

    {
        bool ok = true;
        for (int a = 0; a < h1 && ok; ++a)
            for (int b = 0; b < h1 && ok; ++b) {
                if (a == b) {
                    ok = vec_is_zero(tables.t11[a][a]);
                    continue;
                }
                FpVec neg = tables.t11[b][a];
                for (Fp& x : neg) x = -x;
                ok = tables.t11[a][b] == neg;
            }
        out.push_back({"table_antisymmetry", ok, "t11 is antisymmetric with zero diagonal"});
    }

    {
        bool ok = true;
        for (const auto& [degree, coords] : ring.socle())
            for (int v = 0; v < ring.nvars() && ok; ++v)
                ok = vec_is_zero(ring.var_map(v, degree).apply(coords));
        out.push_back({"socle_annihilated", ok, "every variable kills every socle element"});
    }

    {
        MultInvariants base = invariants_pqr(field, tables, h2, h3);
        bool ok = true;
        for (int round = 0; round < options.basis_change_rounds && ok; ++round) {
            std::vector<KoszulElement> reps1 = recoordinatized_reps(ring, homology, 1, rng);
            std::vector<KoszulElement> reps2 = recoordinatized_reps(ring, homology, 2, rng);
            MultInvariants inv =
                invariants_pqr(field, tables_from_reps(ring, homology, reps1, reps2), h2, h3);
            ok = inv.p == base.p && inv.q == base.q && inv.r == base.r;
        }
        std::ostringstream ss;
        ss << "(p, q, r) = (" << base.p << ", " << base.q << ", " << base.r << ") under "
           << options.basis_change_rounds << " random basis changes";
        out.push_back({"basis_change_invariance", ok, ss.str()});
    }

    {
        MultInvariants base = invariants_pqr(field, tables, h2, h3);
        bool ok = true;
        for (int round = 0; round < options.perturbation_rounds && ok; ++round) {
            std::vector<KoszulElement> reps1 = perturbed_reps(ring, homology, 1, rng);
            std::vector<KoszulElement> reps2 = perturbed_reps(ring, homology, 2, rng);
            MultTables shifted = tables_from_reps(ring, homology, reps1, reps2);
            MultInvariants inv = invariants_pqr(field, shifted, h2, h3);
            ok = tables_equal(shifted, tables) && inv.p == base.p && inv.q == base.q &&
                 inv.r == base.r;
        }
        out.push_back({"boundary_perturbation_invariance", ok,
                       "tables and (p, q, r) unchanged by adding boundaries to representatives"});
    }

    return out;
}

void require_all(const std::vector<AuditCheck>& checks) {
    for (const AuditCheck& c : checks)
        if (!c.passed) throw InvariantViolation(c.name + ": " + c.detail);
}

}  // namespace tor3
