#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "core/grids.hpp"

using namespace weyldft;

TEST_CASE("A2 level 7 reference sizes") {
    RootSystemData R = build(parse_algebra("A2"));
    GammaGroup G(R);
    CHECK(point_set(R, SignHom::Identity, 7).points.size() == 12);
    CHECK(point_set(R, SignHom::Det, 7).points.size() == 5);
    CHECK(weight_set_P(R, G, SignHom::Identity, 7).weights.size() == 12);
    CHECK(weight_set_P(R, G, SignHom::Det, 7).weights.size() == 5);
    IntVec zero_lo(3, 0);
    CHECK(enumerate_labels(R.comarks, zero_lo, 7).size() == 36);
    CHECK(weight_set_Q(R, G, SignHom::Det, 7).weights.size() == 15);
}

TEST_CASE("descending lexicographic order and determinism") {
    RootSystemData R = build(parse_algebra("C2"));
    GammaGroup G(R);
    PointSet F = point_set(R, SignHom::Identity, 6);
    for (std::size_t i = 1; i < F.points.size(); ++i)
        CHECK(F.points[i - 1].kac > F.points[i].kac);
    WeightSet L = weight_set_P(R, G, SignHom::Identity, 6);
    for (std::size_t i = 1; i < L.weights.size(); ++i)
        CHECK(L.weights[i - 1].kac > L.weights[i].kac);
    PointSet F2 = point_set(R, SignHom::Identity, 6);
    REQUIRE(F.points.size() == F2.points.size());
    for (std::size_t i = 0; i < F.points.size(); ++i) {
        CHECK(F.points[i].kac == F2.points[i].kac);
        CHECK(F.points[i].q == F2.points[i].q);
        CHECK(F.points[i].eps == F2.points[i].eps);
    }
}

TEST_CASE("point labels satisfy level, positivity pattern and lattice membership") {
    for (const auto& name : {"A2", "B3", "C2", "G2", "F4", "D4"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        for (SignHom sigma :
             {SignHom::Identity, SignHom::Det, SignHom::Short, SignHom::Long}) {
            if (!sign_admissible(R, sigma)) continue;
            Int msig = generalized_coxeter(R, sigma);
            Int M = msig + 3;
            PointSet F = point_set(R, sigma, M);
            IntVec lo = point_lower_bounds(R, sigma);
            for (const GridPoint& p : F.points) {
                Int level = p.kac[0];
                for (int i = 1; i <= R.rank; ++i) level += R.marks[i] * p.kac[i];
                CHECK(level == M);
                for (int i = 0; i <= R.rank; ++i) CHECK(p.kac[i] >= lo[i]);
                // q solves C q = (s_1..s_n) exactly.
                for (int i = 1; i <= R.rank; ++i) {
                    Int acc = 0;
                    for (int j = 0; j < R.rank; ++j) acc += R.cartan[i - 1][j] * p.q[j];
                    CHECK(acc == p.kac[i]);
                }
            }
        }
    }
}

TEST_CASE("simplified congruence matches lattice membership") {
    for (const auto& name :
         {"A1", "A2", "A3", "A4", "A5", "B3", "B4", "B5", "B6", "C2", "C3", "C4", "D4", "D5",
          "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        IntVec lo(R.rank + 1, 0);
        for (Int M : {1, 2, 3, 4}) {
            for (const IntVec& kac : enumerate_labels(R.marks, lo, M)) {
                CAPTURE(kac);
                CHECK(congruence_general(R, kac, nullptr) == congruence_simplified(R, kac));
            }
        }
    }
}

TEST_CASE("rho shift equals the direct construction") {
    for (const auto& name : {"A2", "C2", "G2", "B3"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        GammaGroup G(R);
        for (SignHom sigma :
             {SignHom::Identity, SignHom::Det, SignHom::Short, SignHom::Long}) {
            if (!sign_admissible(R, sigma)) continue;
            IntVec rho = rho_sigma(R, sigma);
            Int msig = generalized_coxeter(R, sigma);
            for (Int M = 0; M <= 8; ++M) {
                if (M + msig < 1) continue;
                auto [plain, with_neg] = tilde_sets(R, G, sigma, M);
                std::vector<IntVec> shifted;
                for (const IntVec& lam : plain) {
                    IntVec v(lam.size());
                    for (std::size_t i = 0; i < lam.size(); ++i) v[i] = lam[i] + rho[i];
                    shifted.push_back(v);
                }
                std::sort(shifted.begin(), shifted.end(), std::greater<>());
                CHECK(shifted == weight_labels_direct(R, G, sigma, M + msig));
                // The shifted construction backs weight_set_P.
                WeightSet L = weight_set_P(R, G, sigma, M + msig, /*relaxed=*/true);
                REQUIRE(L.weights.size() == shifted.size());
                for (std::size_t i = 0; i < shifted.size(); ++i)
                    CHECK(L.weights[i].kac == shifted[i]);
            }
        }
    }
}

TEST_CASE("tilde sets split the representatives") {
    RootSystemData R = build(parse_algebra("A2"));
    GammaGroup G(R);
    for (Int M = 1; M <= 8; ++M) {
        auto [plain_id, neg_id] = tilde_sets(R, G, SignHom::Identity, M);
        CHECK(neg_id.empty());  // no -1 signs under the trivial homomorphism
        auto [plain_e, neg_e] = tilde_sets(R, G, SignHom::Det, M);
        // Same representatives, split differently.
        CHECK(plain_e.size() + neg_e.size() == plain_id.size());
    }
}

TEST_CASE("level preconditions") {
    RootSystemData R = build(parse_algebra("A2"));
    GammaGroup G(R);
    CHECK_THROWS_AS(point_set(R, SignHom::Det, 3), Error);  // m^sigma = 3
    try {
        point_set(R, SignHom::Det, 3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LevelTooSmall);
    }
    CHECK_NOTHROW(point_set(R, SignHom::Det, 3, /*relaxed=*/true));
    CHECK(point_set(R, SignHom::Det, 3, true).points.size() ==
          weight_set_P(R, G, SignHom::Det, 3, true).weights.size());
    CHECK_THROWS_AS(point_set(R, SignHom::Identity, 0, true), Error);
}
