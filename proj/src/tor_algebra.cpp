#include "tor3/tor_algebra.hpp"

#include "tor3/groebner.hpp"

namespace tor3 {

std::string ClassLabel::display() const {
    if (params.empty()) return name;
    std::string out = name + "(";
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(params[k]);
    }
    return out + ")";
}

MultTables tables_from_reps(const QuotientRing& ring, const HomologyBasis& homology,
                            const std::vector<KoszulElement>& reps1,
                            const std::vector<KoszulElement>& reps2) {
    MultTables t;
    for (const KoszulElement& e : reps1) t.deg1.push_back(e.internal);
    for (const KoszulElement& f : reps2) t.deg2.push_back(f.internal);
    const Fp minus_one = -ring.field().one();
    FpVec zero2(static_cast<std::size_t>(homology.rank(2)), ring.field().zero());
    FpVec zero3(static_cast<std::size_t>(homology.rank(3)), ring.field().zero());

    for (std::size_t a = 0; a < reps1.size(); ++a) {
        std::vector<FpVec> row;
        for (std::size_t b = 0; b < reps1.size(); ++b) {
            if (t.deg1[a] + t.deg1[b] > homology.bound(2)) {
                // Provably zero: H_2 vanishes past its degree bound.
                row.push_back(zero2);
                continue;
            }
            KoszulElement w = wedge(ring, reps1[a], reps1[b]);
            if (!is_zero(koszul_add(w, wedge(ring, reps1[b], reps1[a]))))
                throw InvariantViolation("products of one-cycles are not antisymmetric");
            row.push_back(reduce_to_homology(ring, homology, w));
        }
        t.t11.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < reps1.size(); ++a) {
        std::vector<FpVec> row;
        for (std::size_t b = 0; b < reps2.size(); ++b) {
            if (t.deg1[a] + t.deg2[b] > homology.bound(3)) {
                row.push_back(zero3);
                continue;
            }
            KoszulElement w = wedge(ring, reps1[a], reps2[b]);
            KoszulElement back = koszul_scale(minus_one, wedge(ring, reps2[b], reps1[a]));
            if (!is_zero(koszul_add(w, back)))
                throw InvariantViolation("mixed products are not symmetric");
            row.push_back(reduce_to_homology(ring, homology, w));
        }
        t.t12.push_back(std::move(row));
    }
    return t;
}

MultTables build_mult_tables(const QuotientRing& ring, const HomologyBasis& homology) {
    std::vector<KoszulElement> reps1, reps2;
    for (const KoszulElement* e : homology.reps(1)) reps1.push_back(*e);
    for (const KoszulElement* f : homology.reps(2)) reps2.push_back(*f);
    return tables_from_reps(ring, homology, reps1, reps2);
}

MultInvariants invariants_pqr(const PrimeField& field, const MultTables& tables, int h2, int h3) {
    std::size_t h1 = tables.deg1.size();
    MultInvariants inv;

    std::vector<FpVec> products11;
    for (std::size_t a = 0; a < h1; ++a)
        for (std::size_t b = a + 1; b < h1; ++b) products11.push_back(tables.t11[a][b]);
    inv.p = rank_of(FpMatrix::from_rows(field, h2, products11));

    std::vector<FpVec> products12;
    for (const auto& row : tables.t12)
        for (const FpVec& v : row) products12.push_back(v);
    inv.q = rank_of(FpMatrix::from_rows(field, h3, products12));

    // Pairing rank: one column per degree-two class, listing all its products
    // with the degree-one classes.
    std::vector<FpVec> columns(tables.deg2.size());
    for (std::size_t b = 0; b < tables.deg2.size(); ++b)
        for (std::size_t a = 0; a < h1; ++a)
            columns[b].insert(columns[b].end(), tables.t12[a][b].begin(), tables.t12[a][b].end());
    inv.r = rank_of(FpMatrix::from_columns(field, static_cast<int>(h1) * h3, columns));
    return inv;
}

ClassLabel classify_pqr(const MultInvariants& inv) {
    int p = inv.p, q = inv.q, r = inv.r;
    if (p == 3 && q == 1 && r == 3) return {"C", {3}};
    if (p == 3 && q == 0) return {"T", {}};
    if (p == 1 && q == 1 && r == 2) return {"B", {}};
    if (p == 0 && q == 1 && r >= 2) return {"G", {r}};
    if (p == 0 && q == 1 && r == 1) return {"H", {0, 1}};
    if (r == q) return {"H", {p, q}};
    return {"UNCLASSIFIED", {p, q, r}};
}

namespace {

template <typename F>
auto stage(const char* name, F&& body) {
    try {
        return body();
    } catch (const PipelineError&) {
        throw;
    } catch (const Error& e) {
        throw PipelineError(name, e.what());
    }
}

}  // namespace

Analysis analyze(const PrimeField& field, const MonomialOrder& order,
                 const std::vector<Polynomial>& generators, const AnalysisOptions& options) {
    Analysis out;
    out.report.characteristic = field.modulus();
    out.report.order_name = order.kind() == OrderKind::degrevlex ? "degrevlex" : "deglex";

    GroebnerBasis gb = stage("groebner", [&] { return buchberger(field, order, generators); });
    auto ring = stage("ring", [&] { return std::make_shared<QuotientRing>(gb); });
    out.report.gate = ring->gate();
    if (!out.report.gate.eligible) return out;

    auto homology = stage("homology", [&] {
        return std::make_shared<HomologyBasis>(*ring, options.max_degree);
    });
    auto tables =
        stage("tables", [&] { return std::make_shared<MultTables>(build_mult_tables(*ring, *homology)); });

    stage("classify", [&] {
        ClassificationReport& rep = out.report;
        int h1 = homology->rank(1), h2 = homology->rank(2), h3 = homology->rank(3);
        rep.mu = ring->min_generator_count();
        rep.type = ring->socle_rank();
        rep.ranks = {h1, h2, h3};
        for (int j = 0; j <= ring->working_degree(); ++j) rep.hilbert.push_back(ring->hilbert(j));
        MultInvariants inv = invariants_pqr(field, *tables, h2, h3);
        rep.pqr = {inv.p, inv.q, inv.r};
        rep.label = classify_pqr(inv);
        rep.checks.emplace_back("euler", 1 - h1 + h2 - h3 == 0);
        rep.checks.emplace_back("h1_equals_mu", h1 == rep.mu);
        rep.checks.emplace_back("h2_equals_mu_minus_1_plus_h3", h2 == rep.mu - 1 + h3);
        rep.checks.emplace_back("h3_equals_socle_rank", h3 == rep.type);
        // Verified while the tables were built; a violation would have thrown.
        rep.checks.emplace_back("tables_graded_commutative", true);
        bool gorenstein_ok = true;
        if (rep.label.name == "G" && rep.type == 1)
            gorenstein_ok = rep.label.params[0] == rep.mu && rep.mu % 2 == 1 && rep.mu >= 5;
        rep.checks.emplace_back("gorenstein_consistency", gorenstein_ok);
        bool type2_b_ok = true;
        if (rep.label.name == "B" && rep.type == 2) type2_b_ok = rep.mu % 2 == 1 && rep.mu >= 5;
        rep.checks.emplace_back("type2_b_restriction", type2_b_ok);
        return 0;
    });

    out.ring = std::move(ring);
    out.homology = std::move(homology);
    out.tables = std::move(tables);
    return out;
}

}  // namespace tor3
