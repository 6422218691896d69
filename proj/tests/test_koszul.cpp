#include <random>

#include "doctest.h"
#include "support/reference.hpp"
#include "tor3/koszul.hpp"
#include "tor3/parser.hpp"

using namespace tor3;
using testsupport::draw;

namespace {

const std::vector<std::string> kNames{"x", "y", "z"};

QuotientRing make_ring(const PrimeField& field, const std::string& text) {
    MonomialOrder ord(OrderKind::degrevlex, 3);
    return QuotientRing(buchberger(field, ord, parse_generators(field, ord, kNames, text)));
}

Polynomial parse(const QuotientRing& R, const std::string& text) {
    return parse_polynomial(R.field(), R.order(), kNames, text);
}

KoszulElement random_element(const QuotientRing& R, int i, int j, std::mt19937_64& rng) {
    KoszulElement u = koszul_zero(R, i, j);
    for (int mask : koszul_masks(i))
        for (Fp& c : u.comp[mask]) c = R.field().element(draw(rng, R.field().modulus()));
    return u;
}

}  // namespace

TEST_CASE("exterior subset masks and removal signs") {
    CHECK(koszul_masks(0) == std::vector<int>{0});
    CHECK(koszul_masks(1) == std::vector<int>{1, 2, 4});
    CHECK(koszul_masks(2) == std::vector<int>{3, 5, 6});
    CHECK(koszul_masks(3) == std::vector<int>{7});
    CHECK_THROWS_AS(koszul_masks(4), Error);
    // Sign of removing v is (-1)^(number of lower bits present).
    CHECK(removal_sign(3, 0) == 1);
    CHECK(removal_sign(3, 1) == -1);
    CHECK(removal_sign(5, 0) == 1);
    CHECK(removal_sign(5, 2) == -1);
    CHECK(removal_sign(7, 0) == 1);
    CHECK(removal_sign(7, 1) == -1);
    CHECK(removal_sign(7, 2) == 1);
}

TEST_CASE("differential of the exterior generators by hand") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^3, y^3, z^3");
    Polynomial one = parse(R, "1");
    // d(e_xy) = x e_y - y e_x
    KoszulElement exy = koszul_element(R, 2, {{3, one}});
    KoszulElement d = boundary(R, exy);
    CHECK(R.to_polynomial({1, d.comp[1]}) == parse(R, "-y"));
    CHECK(R.to_polynomial({1, d.comp[2]}) == parse(R, "x"));
    CHECK(R.to_polynomial({1, d.comp[4]}).is_zero());
    // d(e_xyz) = x e_yz - y e_xz + z e_xy
    KoszulElement exyz = koszul_element(R, 3, {{7, one}});
    KoszulElement d2 = boundary(R, exyz);
    CHECK(R.to_polynomial({1, d2.comp[6]}) == parse(R, "x"));
    CHECK(R.to_polynomial({1, d2.comp[5]}) == parse(R, "-y"));
    CHECK(R.to_polynomial({1, d2.comp[3]}) == parse(R, "z"));
    // d(e_x) = x in homological degree zero.
    KoszulElement ex = koszul_element(R, 1, {{1, one}});
    CHECK(R.to_polynomial({1, boundary(R, ex).comp[0]}) == parse(R, "x"));
}

TEST_CASE("wedge products of exterior generators carry the shuffle signs") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^3, y^3, z^3");
    Polynomial one = parse(R, "1");
    auto e = [&](int mask, int card) { return koszul_element(R, card, {{mask, one}}); };
    auto top_coeff = [&](const KoszulElement& u) { return R.to_polynomial({0, u.comp[7]}); };
    // e_x e_yz = +e_xyz, e_y e_xz = -e_xyz, e_z e_xy = +e_xyz.
    CHECK(top_coeff(wedge(R, e(1, 1), e(6, 2))) == one);
    CHECK(top_coeff(wedge(R, e(2, 1), e(5, 2))) == -one);
    CHECK(top_coeff(wedge(R, e(4, 1), e(3, 2))) == one);
    // And from the other side.
    CHECK(top_coeff(wedge(R, e(6, 2), e(1, 1))) == one);
    CHECK(top_coeff(wedge(R, e(5, 2), e(2, 1))) == -one);
    // One-form square and triple products.
    KoszulElement exy = wedge(R, e(1, 1), e(2, 1));
    CHECK(R.to_polynomial({0, exy.comp[3]}) == one);
    CHECK(is_zero(wedge(R, e(1, 1), e(1, 1))));
    CHECK(top_coeff(wedge(R, wedge(R, e(1, 1), e(2, 1)), e(4, 1))) == one);
    CHECK(top_coeff(wedge(R, wedge(R, e(2, 1), e(1, 1)), e(4, 1))) == -one);
}

TEST_CASE("flatten and unflatten are mutually inverse") {
    PrimeField F(101);
    QuotientRing R = make_ring(F, "x^2, y^2, z^2");
    std::mt19937_64 rng(8301);
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= R.working_degree(); ++j) {
            KoszulElement u = random_element(R, i, j, rng);
            FpVec flat = koszul_flatten(R, u);
            CHECK(static_cast<int>(flat.size()) == koszul_dim(R, i, j));
            KoszulElement back = koszul_unflatten(R, i, j, flat);
            CHECK(is_zero(koszul_add(back, koszul_scale(-F.one(), u))));
        }
    CHECK(koszul_dim(R, 2, 3) == 3 * R.hilbert(1));
}

TEST_CASE("boundary agrees with the differential matrices and squares to zero") {
    PrimeField F(32003);
    std::mt19937_64 rng(8302);
    for (const std::string& text : {std::string("x^2, y^2, z^2"),
                                    std::string("x^2 - y*z, y^3, x*z^2 - z^3"),
                                    std::string("x^3, x^2*y, y*z^2, z^3")}) {
        QuotientRing R = make_ring(F, text);
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= R.working_degree(); ++j) {
                KoszulElement u = random_element(R, i, j, rng);
                FpVec lhs = koszul_flatten(R, boundary(R, u));
                FpVec rhs = differential_matrix(R, i, j).apply(koszul_flatten(R, u));
                CHECK(lhs == rhs);
                if (i >= 2) {
                    FpMatrix square = multiply(differential_matrix(R, i - 1, j),
                                               differential_matrix(R, i, j));
                    CHECK(square == FpMatrix(F, square.rows(), square.cols()));
                    CHECK(is_zero(boundary(R, boundary(R, u))));
                }
            }
    }
}

TEST_CASE("wedge is bilinear, graded commutative, associative, and Leibniz") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^2 - y*z, y^3, x*z^2 - z^3");
    std::mt19937_64 rng(8303);
    for (int round = 0; round < 15; ++round) {
        // u and v share a coefficient degree so that sums with u are defined.
        int da = 1 + static_cast<int>(draw(rng, 2));
        int dc = 1 + static_cast<int>(draw(rng, 2));
        KoszulElement u = random_element(R, 1, da, rng);
        KoszulElement v = random_element(R, 1, da, rng);
        KoszulElement w = random_element(R, 1, dc, rng);
        Fp c = F.element(draw(rng, F.modulus()));
        // Bilinearity in the first slot.
        CHECK(is_zero(koszul_add(
            wedge(R, koszul_add(koszul_scale(c, u), v), w),
            koszul_scale(-F.one(), koszul_add(koszul_scale(c, wedge(R, u, w)), wedge(R, v, w))))));
        // Odd classes anticommute and square to zero.
        CHECK(is_zero(koszul_add(wedge(R, u, v), wedge(R, v, u))));
        CHECK(is_zero(wedge(R, u, u)));
        // A one-form commutes with a two-form.
        KoszulElement uv = wedge(R, u, v);
        CHECK(is_zero(koszul_add(wedge(R, w, uv), koszul_scale(-F.one(), wedge(R, uv, w)))));
        // Associativity up in the top degree.
        CHECK(is_zero(koszul_add(wedge(R, uv, w),
                                 koszul_scale(-F.one(), wedge(R, u, wedge(R, v, w))))));
        // Leibniz: d(u v) = du v - u dv for odd u.
        KoszulElement lhs = boundary(R, uv);
        KoszulElement rhs = koszul_add(wedge(R, boundary(R, u), v),
                                       koszul_scale(-F.one(), wedge(R, u, boundary(R, v))));
        CHECK(is_zero(koszul_add(lhs, koszul_scale(-F.one(), rhs))));
    }
}

TEST_CASE("homology of the complete intersection is the exterior algebra") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^2, y^2, z^2");
    HomologyBasis H = homology_basis(R);
    CHECK(H.bound(1) == 2);
    CHECK(H.bound(2) == 4);
    CHECK(H.bound(3) == 6);
    CHECK(H.rank(1) == 3);
    CHECK(H.rank(2) == 3);
    CHECK(H.rank(3) == 1);
    CHECK(H.rank_at(1, 2) == 3);
    CHECK(H.rank_at(1, 1) == 0);
    CHECK(H.rank_at(2, 4) == 3);
    CHECK(H.rank_at(3, 6) == 1);
    CHECK(H.piece(1, 5) == nullptr);

    // x e_x, y e_y, z e_z generate; their pairwise and triple products are
    // nonzero classes in the expected degrees.
    std::vector<KoszulElement> gens;
    for (int v = 0; v < 3; ++v)
        gens.push_back(koszul_element(R, 1, {{1 << v, parse(R, kNames[v])}}));
    for (const KoszulElement& g : gens) {
        CHECK(is_zero(boundary(R, g)));
        FpVec cls = reduce_to_homology(R, H, g);
        bool nonzero = false;
        for (const Fp& coordinate : cls) nonzero = nonzero || !coordinate.is_zero();
        CHECK(nonzero);
    }
    FpVec pair_class = reduce_to_homology(R, H, wedge(R, gens[0], gens[1]));
    bool pair_nonzero = false;
    for (const Fp& coordinate : pair_class) pair_nonzero = pair_nonzero || !coordinate.is_zero();
    CHECK(pair_nonzero);
    FpVec triple_class =
        reduce_to_homology(R, H, wedge(R, wedge(R, gens[0], gens[1]), gens[2]));
    REQUIRE(triple_class.size() == 1);
    CHECK_FALSE(triple_class[0].is_zero());
}

TEST_CASE("class coordinates are invariant under adding boundaries") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^2, y^2, z^2");
    HomologyBasis H = homology_basis(R);
    std::mt19937_64 rng(8304);
    const KoszulElement* rep = H.reps(1)[0];
    FpVec base = reduce_to_homology(R, H, *rep);
    // The canonical representative reduces to a unit coordinate vector.
    int nonzero_count = 0;
    for (const Fp& coordinate : base)
        if (!coordinate.is_zero()) ++nonzero_count;
    CHECK(nonzero_count == 1);
    for (int round = 0; round < 5; ++round) {
        KoszulElement noise = random_element(R, 2, rep->internal, rng);
        FpVec shifted = reduce_to_homology(R, H, koszul_add(*rep, boundary(R, noise)));
        CHECK(shifted == base);
    }
}

TEST_CASE("reduction rejects non-cycles and out-of-range cycles") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^2, y^2, z^2");
    HomologyBasis H = homology_basis(R);
    // x e_y is not a cycle: its boundary is xy, nonzero in R.
    KoszulElement bad = koszul_element(R, 1, {{2, parse(R, "x")}});
    CHECK_THROWS_AS(reduce_to_homology(R, H, bad), NotACycle);
    // x*y e_x is a nonzero cycle above the degree-one scan bound.
    KoszulElement high = koszul_element(R, 1, {{1, parse(R, "x*y")}});
    REQUIRE(is_zero(boundary(R, high)));
    CHECK_THROWS_AS(reduce_to_homology(R, H, high), DegreeOutOfRange);
    // The zero element of that bidegree reduces to nothing at all.
    FpVec zero_class = reduce_to_homology(R, H, koszul_zero(R, 1, 3));
    for (const Fp& coordinate : zero_class) CHECK(coordinate.is_zero());
}

TEST_CASE("homology ranks respect an explicit degree cap") {
    PrimeField F(32003);
    QuotientRing R = make_ring(F, "x^2, y^2, z^2");
    HomologyBasis capped = homology_basis(R, 3);
    CHECK(capped.bound(1) == 2);
    CHECK(capped.bound(2) == 3);
    CHECK(capped.bound(3) == 3);
    CHECK(capped.rank(1) == 3);
    CHECK(capped.rank(2) == 0);  // the degree-four classes fall outside the cap
    CHECK(capped.rank(3) == 0);
}
