#include "tor3/koszul.hpp"

#include <bit>

namespace tor3 {

namespace {

int coeff_len(const QuotientRing& R, int i, int j) {
    if (j - i < 0) return 0;
    return R.hilbert(j - i);
}

int shuffle_sign(int s, int t) {
    // Parity of |{(a, b) in s x t : a > b}|, the sign of merging e_s e_t
    // into the sorted basis element e_{s|t}.
    int inv = 0;
    for (int v = 0; v < 3; ++v)
        if (t & (1 << v)) inv += std::popcount(static_cast<unsigned>(s >> (v + 1)));
    return inv % 2 ? -1 : 1;
}

}  // namespace

const std::vector<int>& koszul_masks(int i) {
    static const std::vector<int> table[4] = {{0}, {1, 2, 4}, {3, 5, 6}, {7}};
    if (i < 0 || i > 3) throw Error("exterior degree out of range");
    return table[i];
}

int removal_sign(int mask, int v) {
    return std::popcount(static_cast<unsigned>(mask & ((1 << v) - 1))) % 2 ? -1 : 1;
}

KoszulElement koszul_zero(const QuotientRing& R, int i, int j) {
    KoszulElement u;
    u.homological = i;
    u.internal = j;
    int len = coeff_len(R, i, j);
    for (int mask : koszul_masks(i))
        u.comp[mask] = FpVec(static_cast<std::size_t>(len), R.field().zero());
    return u;
}

bool is_zero(const KoszulElement& u) {
    for (const FpVec& v : u.comp)
        for (const Fp& x : v)
            if (!x.is_zero()) return false;
    return true;
}

KoszulElement koszul_add(const KoszulElement& a, const KoszulElement& b) {
    if (a.homological != b.homological || a.internal != b.internal)
        throw Error("cannot add Koszul elements of different bidegrees");
    KoszulElement r = a;
    for (int mask : koszul_masks(a.homological))
        for (std::size_t k = 0; k < r.comp[mask].size(); ++k) r.comp[mask][k] += b.comp[mask][k];
    return r;
}

KoszulElement koszul_scale(const Fp& c, const KoszulElement& a) {
    KoszulElement r = a;
    for (int mask : koszul_masks(a.homological))
        for (Fp& x : r.comp[mask]) x *= c;
    return r;
}

int koszul_dim(const QuotientRing& R, int i, int j) {
    return static_cast<int>(koszul_masks(i).size()) * coeff_len(R, i, j);
}

FpVec koszul_flatten(const QuotientRing& R, const KoszulElement& u) {
    FpVec flat;
    flat.reserve(static_cast<std::size_t>(koszul_dim(R, u.homological, u.internal)));
    for (int mask : koszul_masks(u.homological))
        flat.insert(flat.end(), u.comp[mask].begin(), u.comp[mask].end());
    return flat;
}

KoszulElement koszul_unflatten(const QuotientRing& R, int i, int j, const FpVec& flat) {
    KoszulElement u = koszul_zero(R, i, j);
    std::size_t len = static_cast<std::size_t>(coeff_len(R, i, j));
    std::size_t pos = 0;
    for (int mask : koszul_masks(i)) {
        for (std::size_t k = 0; k < len; ++k) u.comp[mask][k] = flat.at(pos + k);
        pos += len;
    }
    if (pos != flat.size()) throw Error("flat vector length does not match the graded piece");
    return u;
}

KoszulElement koszul_element(const QuotientRing& R, int i,
                             const std::vector<std::pair<int, Polynomial>>& parts) {
    int degree = -1;
    for (const auto& [mask, poly] : parts) {
        if (std::popcount(static_cast<unsigned>(mask)) != i)
            throw Error("exterior subset has the wrong cardinality");
        if (poly.is_zero()) continue;
        int d = poly.homogeneous_degree();
        if (degree == -1) degree = d;
        if (d != degree) throw NotHomogeneous("Koszul coefficients of mixed degree");
    }
    if (degree == -1) throw Error("all coefficients are zero; the bidegree is ambiguous");
    KoszulElement u = koszul_zero(R, i, degree + i);
    for (const auto& [mask, poly] : parts) {
        if (poly.is_zero()) continue;
        RingCoords c = R.coords(poly);
        for (std::size_t k = 0; k < c.coords.size(); ++k) u.comp[mask][k] += c.coords[k];
    }
    return u;
}

FpMatrix differential_matrix(const QuotientRing& R, int i, int j) {
    if (i < 1 || i > 3) throw Error("differential index out of range");
    const std::vector<int>& src = koszul_masks(i);
    const std::vector<int>& dst = koszul_masks(i - 1);
    int src_len = coeff_len(R, i, j), dst_len = coeff_len(R, i - 1, j);
    FpMatrix m(R.field(), static_cast<int>(dst.size()) * dst_len,
               static_cast<int>(src.size()) * src_len);
    if (src_len == 0 || dst_len == 0) return m;
    for (std::size_t bs = 0; bs < src.size(); ++bs) {
        int s = src[bs];
        for (int v = 0; v < 3; ++v) {
            if (!(s & (1 << v))) continue;
            int t = s ^ (1 << v);
            std::size_t bt = 0;
            while (dst[bt] != t) ++bt;
            int sign = removal_sign(s, v);
            const FpMatrix& mul = R.var_map(v, j - i);
            for (int r = 0; r < dst_len; ++r)
                for (int c = 0; c < src_len; ++c) {
                    Fp x = mul.get(r, c);
                    if (sign < 0) x = -x;
                    m.set(static_cast<int>(bt) * dst_len + r,
                          static_cast<int>(bs) * src_len + c,
                          m.get(static_cast<int>(bt) * dst_len + r,
                                static_cast<int>(bs) * src_len + c) +
                              x);
                }
        }
    }
    return m;
}

KoszulElement boundary(const QuotientRing& R, const KoszulElement& u) {
    int i = u.homological, j = u.internal;
    if (i < 1) throw Error("the differential vanishes on homological degree 0");
    KoszulElement r = koszul_zero(R, i - 1, j);
    if (coeff_len(R, i, j) == 0) return r;
    for (int s : koszul_masks(i)) {
        for (int v = 0; v < 3; ++v) {
            if (!(s & (1 << v))) continue;
            int t = s ^ (1 << v);
            FpVec img = R.var_map(v, j - i).apply(u.comp[s]);
            int sign = removal_sign(s, v);
            for (std::size_t k = 0; k < img.size(); ++k) {
                if (sign < 0)
                    r.comp[t][k] -= img[k];
                else
                    r.comp[t][k] += img[k];
            }
        }
    }
    return r;
}

KoszulElement wedge(const QuotientRing& R, const KoszulElement& u, const KoszulElement& v) {
    int i = u.homological + v.homological;
    if (i > 3) throw Error("wedge beyond the top exterior degree");
    KoszulElement r = koszul_zero(R, i, u.internal + v.internal);
    auto all_zero = [](const FpVec& w) {
        for (const Fp& x : w)
            if (!x.is_zero()) return false;
        return true;
    };
    for (int s : koszul_masks(u.homological)) {
        if (all_zero(u.comp[s])) continue;
        for (int t : koszul_masks(v.homological)) {
            if ((s & t) || all_zero(v.comp[t])) continue;
            RingCoords prod = R.multiply({u.internal - u.homological, u.comp[s]},
                                         {v.internal - v.homological, v.comp[t]});
            int sign = shuffle_sign(s, t);
            for (std::size_t k = 0; k < prod.coords.size(); ++k) {
                if (sign < 0)
                    r.comp[s | t][k] -= prod.coords[k];
                else
                    r.comp[s | t][k] += prod.coords[k];
            }
        }
    }
    return r;
}

HomologyBasis::HomologyBasis(const QuotientRing& R, std::optional<int> degree_cap) {
    bound_[0] = -1;
    for (int i = 1; i <= 3; ++i) {
        bound_[i] = R.homology_degree_bound(i);
        if (degree_cap && *degree_cap < bound_[i]) bound_[i] = *degree_cap;
        for (int j = i; j <= bound_[i]; ++j) {
            HomologyPiece piece;
            piece.i = i;
            piece.j = j;
            int n = koszul_dim(R, i, j);
            if (n > 0) {
                FpMatrix d = differential_matrix(R, i, j);
                std::vector<FpVec> cycles = kernel_basis(d);
                piece.cycle_rank = static_cast<int>(cycles.size());
                FpMatrix d_in = i < 3 ? differential_matrix(R, i + 1, j) : FpMatrix(R.field(), n, 0);
                for (int c = 0; c < d_in.cols(); ++c) piece.boundary_columns.push_back(d_in.col(c));
                piece.boundary_rank = rank_of(d_in);

                // Canonical representatives: echelon rows of the cycle space
                // whose pivots are not pivots of the boundary space.
                RrefResult rz = rref(FpMatrix::from_rows(R.field(), n, cycles));
                RrefResult rb = rref(transpose(d_in));
                std::vector<bool> is_boundary_pivot(static_cast<std::size_t>(n), false);
                for (int k = 0; k < rb.rank; ++k) is_boundary_pivot[rb.pivots[k]] = true;
                for (int k = 0; k < rz.rank; ++k) {
                    if (is_boundary_pivot[rz.pivots[k]]) continue;
                    FpVec row = rz.reduced.row(k);
                    piece.rep_vectors.push_back(row);
                    piece.reps.push_back(koszul_unflatten(R, i, j, row));
                }
                if (static_cast<int>(piece.reps.size()) != piece.cycle_rank - piece.boundary_rank)
                    throw InvariantViolation("homology piece dimension mismatch at (" +
                                             std::to_string(i) + ", " + std::to_string(j) + ")");
                std::vector<FpVec> gens = piece.rep_vectors;
                gens.insert(gens.end(), piece.boundary_columns.begin(),
                            piece.boundary_columns.end());
                piece.solver.emplace(R.field(), n, gens);
            }
            pieces_[i].push_back(std::move(piece));
        }
    }
}

int HomologyBasis::rank(int i) const {
    int total = 0;
    for (const HomologyPiece& p : pieces_[i]) total += static_cast<int>(p.reps.size());
    return total;
}

int HomologyBasis::rank_at(int i, int j) const {
    const HomologyPiece* p = piece(i, j);
    return p ? static_cast<int>(p->reps.size()) : 0;
}

const HomologyPiece* HomologyBasis::piece(int i, int j) const {
    if (i < 1 || i > 3 || j < i || j > bound_[i]) return nullptr;
    return &pieces_[i][static_cast<std::size_t>(j - i)];
}

std::vector<const KoszulElement*> HomologyBasis::reps(int i) const {
    std::vector<const KoszulElement*> out;
    for (const HomologyPiece& p : pieces_[i])
        for (const KoszulElement& r : p.reps) out.push_back(&r);
    return out;
}

int HomologyBasis::global_offset(int i, int j) const {
    int offset = 0;
    for (const HomologyPiece& p : pieces_[i]) {
        if (p.j >= j) break;
        offset += static_cast<int>(p.reps.size());
    }
    return offset;
}

HomologyBasis homology_basis(const QuotientRing& R, std::optional<int> degree_cap) {
    return HomologyBasis(R, degree_cap);
}

FpVec reduce_to_homology(const QuotientRing& R, const HomologyBasis& H, const KoszulElement& z) {
    int i = z.homological, j = z.internal;
    if (i < 1 || i > 3) throw Error("no homology in this homological degree");
    FpVec global(static_cast<std::size_t>(H.rank(i)), R.field().zero());
    if (is_zero(z)) return global;
    if (j > H.bound(i))
        throw DegreeOutOfRange("nonzero element above the scan bound for H_" + std::to_string(i));
    if (!is_zero(boundary(R, z))) throw NotACycle("element has a nonzero differential");
    const HomologyPiece* piece = H.piece(i, j);
    std::optional<FpVec> sol = piece->solver->solve(koszul_flatten(R, z));
    if (!sol) throw InvariantViolation("cycle fell outside the computed cycle space");
    int offset = H.global_offset(i, j);
    for (std::size_t k = 0; k < piece->reps.size(); ++k) global[offset + k] = (*sol)[k];
    return global;
}

}  // namespace tor3
