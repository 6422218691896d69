#include "tor3/quotient_ring.hpp"

#include <algorithm>

namespace tor3 {

std::string to_string(GateReason r) {
    switch (r) {
        case GateReason::ZeroIdeal: return "ZeroIdeal";
        case GateReason::EmbeddingDimDrop: return "EmbeddingDimDrop";
        case GateReason::PositiveDepth: return "PositiveDepth";
    }
    return "?";
}

QuotientRing::QuotientRing(GroebnerBasis gb) : gb_(std::move(gb)) {
    std::vector<Monomial> leads = gb_.lead_monomials();
    bounds_.assign(nvars() + 1, -1);
    working_ = 2;
    for (int i = 1; i <= nvars(); ++i) {
        bounds_[i] = subset_lcm_degree_bound(leads, i);
        working_ = std::max(working_, bounds_[i]);
    }
    build_tables();
    build_socle();
    build_min_generators();
    build_gate();
}

int QuotientRing::homology_degree_bound(int i) const {
    if (i < 1 || i > nvars()) throw Error("homological degree out of range");
    return bounds_[i];
}

const std::vector<Monomial>& QuotientRing::std_monomials(int j) const {
    if (j < 0 || j > working_)
        throw DegreeOutOfRange("degree " + std::to_string(j) + " outside cached range [0, " +
                               std::to_string(working_) + "]");
    return std_[j];
}

const FpMatrix& QuotientRing::var_map(int var, int j) const {
    if (var < 0 || var >= nvars()) throw Error("variable index out of range");
    if (j < 0 || j + 1 > working_)
        throw DegreeOutOfRange("no multiplication map from degree " + std::to_string(j));
    return varmul_[j][var];
}

void QuotientRing::build_tables() {
    std::vector<Monomial> leads = gb_.lead_monomials();
    std_.resize(working_ + 1);
    index_.resize(working_ + 1);
    for (int j = 0; j <= working_; ++j) {
        for (const Monomial& m : monomials_of_degree(nvars(), j, order())) {
            bool standard = true;
            for (const Monomial& l : leads)
                if (divides(l, m)) {
                    standard = false;
                    break;
                }
            if (!standard) continue;
            index_[j].emplace(m.exponents(), static_cast<int>(std_[j].size()));
            std_[j].push_back(m);
        }
    }
    varmul_.resize(working_);
    for (int j = 0; j + 1 <= working_; ++j) {
        for (int v = 0; v < nvars(); ++v) {
            FpMatrix m(field(), hilbert(j + 1), hilbert(j));
            Monomial xv = Monomial::variable(nvars(), v);
            for (int c = 0; c < hilbert(j); ++c) {
                Monomial prod = std_[j][c] * xv;
                auto hit = index_[j + 1].find(prod.exponents());
                if (hit != index_[j + 1].end()) {
                    m.set(hit->second, c, field().one());
                    continue;
                }
                Polynomial nf =
                    tor3::normal_form(monomial_poly(field(), order(), prod, field().one()),
                                      gb_.members());
                for (const Term& t : nf.terms())
                    m.set(index_[j + 1].at(t.mono.exponents()), c, t.coeff);
            }
            varmul_[j].push_back(std::move(m));
        }
    }
}

Polynomial QuotientRing::normal_form(const Polynomial& f) const {
    return tor3::normal_form(f, gb_.members());
}

RingCoords QuotientRing::coords(const Polynomial& f) const {
    if (f.is_zero()) throw Error("coordinates of the zero polynomial need an explicit degree");
    int j = f.homogeneous_degree();
    if (j > working_) throw DegreeOutOfRange("degree " + std::to_string(j) + " beyond working range");
    FpVec v(hilbert(j), field().zero());
    Polynomial nf = normal_form(f);
    for (const Term& t : nf.terms()) v[index_[j].at(t.mono.exponents())] = t.coeff;
    return {j, std::move(v)};
}

RingCoords QuotientRing::zero_coords(int degree) const {
    return {degree, FpVec(static_cast<std::size_t>(hilbert(degree)), field().zero())};
}

Polynomial QuotientRing::to_polynomial(const RingCoords& a) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < a.coords.size(); ++k)
        if (!a.coords[k].is_zero()) terms.push_back({a.coords[k], std_[a.degree][k]});
    return Polynomial(field(), order(), std::move(terms));
}

RingCoords QuotientRing::multiply(const RingCoords& a, const RingCoords& b) const {
    int j = a.degree + b.degree;
    if (j > working_)
        throw DegreeOutOfRange("product degree " + std::to_string(j) + " beyond working range");
    Polynomial p = to_polynomial(a) * to_polynomial(b);
    if (p.is_zero()) return zero_coords(j);
    Polynomial nf = normal_form(p);
    if (nf.is_zero()) return zero_coords(j);
    return coords(nf);
}

void QuotientRing::build_socle() {
    int top = bounds_[nvars()] - nvars();  // socle degree ceiling: H_n lives below its bound
    for (int j = 0; j <= std::min(top, working_ - 1); ++j) {
        if (hilbert(j) == 0) continue;
        std::vector<const FpMatrix*> stack;
        for (int v = 0; v < nvars(); ++v) stack.push_back(&varmul_[j][v]);
        std::vector<FpVec> null = kernel_basis(vstack(stack));
        if (null.empty()) continue;
        RrefResult r = rref(FpMatrix::from_rows(field(), hilbert(j), null));
        for (int k = 0; k < r.rank; ++k) socle_.emplace_back(j, r.reduced.row(k));
    }
}

void QuotientRing::build_min_generators() {
    int top = gb_.max_degree();
    std::vector<Polynomial> below;  // basis of I_{j-1}
    if (top >= 0 && hilbert(0) == 0) {
        // Unit ideal: the single generator 1 lives in degree 0.
        mu_degrees_.push_back(0);
        below.push_back(monomial_poly(field(), order(), Monomial::one(nvars()), field().one()));
    }
    for (int j = 1; j <= top; ++j) {
        std::vector<Monomial> all = monomials_of_degree(nvars(), j, order());
        std::map<std::vector<int>, int> pos;
        for (const Monomial& m : all) pos.emplace(m.exponents(), static_cast<int>(pos.size()));

        // Basis of I_j: one element m - NF(m) per non-standard monomial m.
        std::vector<Polynomial> basis;
        for (const Monomial& m : all) {
            if (index_[j].count(m.exponents())) continue;
            Polynomial p = monomial_poly(field(), order(), m, field().one());
            basis.push_back(p - normal_form(p));
        }

        // (m * I)_j is spanned by the variable multiples of a basis of I_{j-1}.
        std::vector<FpVec> image;
        for (const Polynomial& f : below) {
            for (int v = 0; v < nvars(); ++v) {
                Polynomial g = f.times_monomial(Monomial::variable(nvars(), v));
                FpVec vec(all.size(), field().zero());
                for (const Term& t : g.terms()) vec[pos.at(t.mono.exponents())] = t.coeff;
                image.push_back(std::move(vec));
            }
        }
        int im_rank =
            image.empty()
                ? 0
                : rank_of(FpMatrix::from_columns(field(), static_cast<int>(all.size()), image));
        int fresh = static_cast<int>(basis.size()) - im_rank;
        for (int k = 0; k < fresh; ++k) mu_degrees_.push_back(j);
        below = std::move(basis);
    }
}

void QuotientRing::build_gate() {
    if (gb_.is_zero_ideal()) {
        gate_ = {false, GateReason::ZeroIdeal, "the ideal is zero"};
    } else if (hilbert(0) != 1 || hilbert(1) != nvars()) {
        gate_ = {false, GateReason::EmbeddingDimDrop,
                 "the ideal contains a form of degree at most 1, so the embedding dimension "
                 "drops below " +
                     std::to_string(nvars())};
    } else if (socle_.empty()) {
        gate_ = {false, GateReason::PositiveDepth, "the socle is zero, so the ring has positive depth"};
    } else {
        gate_ = {true, std::nullopt,
                 "embedding dimension " + std::to_string(nvars()) + " and depth 0"};
    }
}

}  // namespace tor3
