#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "core/weyl.hpp"

using namespace weyldft;

namespace {

Int det(IntMat m) {
    const int n = static_cast<int>(m.size());
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int sw = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    sw = r;
                    break;
                }
            if (sw < 0) return 0;
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("generators are involutions and reflections act correctly") {
    RootSystemData R = build(parse_algebra("A2"));
    // (r_1 lambda)_j = lambda_j - lambda_1 C_1j.
    IntVec lam{1, 0};
    IntVec img = mat_vec(reflection_matrix_omega(R, 1), lam);
    CHECK(img == IntVec{-1, 1});
    for (const auto& name : {"A3", "B3", "C2", "G2", "F4"}) {
        RootSystemData S = build(parse_algebra(name));
        for (int i = 1; i <= S.rank; ++i) {
            IntMat m = reflection_matrix_omega(S, i);
            CHECK(mat_mul(m, m) == identity_matrix(S.rank));
            IntMat q = reflection_matrix_q(S, i);
            CHECK(mat_mul(q, q) == identity_matrix(S.rank));
            // q-side matrix is the transpose of the omega-side one.
            for (int a = 0; a < S.rank; ++a)
                for (int b = 0; b < S.rank; ++b) CHECK(q[a][b] == m[b][a]);
        }
    }
}

TEST_CASE("enumeration sizes and cap") {
    for (const auto& name : {"A1", "A2", "A3", "B3", "C2", "C4", "D4", "F4", "G2"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        WeylGroup W(R, 1'000'000);
        CHECK(static_cast<Int>(W.size()) == R.weyl_order);
    }
    RootSystemData e7 = build(parse_algebra("E7"));
    CHECK_THROWS_AS(WeylGroup(e7, 1'000'000), Error);
    try {
        WeylGroup w(e7, 1'000'000);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GroupTooLarge);
    }
}

TEST_CASE("signs are homomorphisms and match determinants") {
    for (const auto& name : {"A2", "C2", "B3", "G2"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        WeylGroup W(R, 1'000'000);
        std::map<IntMat, const WeylElement*> index;
        for (const WeylElement& w : W.elements()) {
            index[w.mat] = &w;
            CHECK(w.sign_det == det(w.mat));
            // Pairing invariance <w b, w q> = <b, q>, i.e.
            // (M_omega)^T M_q = I.
            IntMat mt(R.rank, IntVec(R.rank));
            for (int a = 0; a < R.rank; ++a)
                for (int b = 0; b < R.rank; ++b) mt[a][b] = w.mat[b][a];
            CHECK(mat_mul(mt, w.mat_q) == identity_matrix(R.rank));
        }
        for (const WeylElement& a : W.elements())
            for (const WeylElement& b : W.elements()) {
                const WeylElement* ab = index.at(mat_mul(a.mat, b.mat));
                CHECK(ab->sign_det == a.sign_det * b.sign_det);
                CHECK(ab->sign_short == a.sign_short * b.sign_short);
                CHECK(ab->sign_long == a.sign_long * b.sign_long);
            }
    }
}

TEST_CASE("G2 length signs") {
    RootSystemData R = build(parse_algebra("G2"));
    WeylGroup W(R, 100);
    // r_1 is the short reflection, r_2 the long one.
    std::map<IntMat, const WeylElement*> index;
    for (const WeylElement& w : W.elements()) index[w.mat] = &w;
    const WeylElement* rs = index.at(W.generator(1));
    const WeylElement* rl = index.at(W.generator(2));
    CHECK(rs->sign_short == -1);
    CHECK(rs->sign_long == 1);
    CHECK(rl->sign_short == 1);
    CHECK(rl->sign_long == -1);
    const WeylElement* prod = index.at(mat_mul(W.generator(1), W.generator(2)));
    CHECK(prod->sign_short == -1);
    CHECK(prod->sign_long == -1);
    CHECK(prod->sign_det == 1);
}

TEST_CASE("longest element word length is half the root count") {
    for (const auto& name : {"A2", "A3", "B3", "C2", "G2"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        WeylGroup W(R, 1'000'000);
        // BFS depth over right multiplication by generators.
        std::map<IntMat, int> depth;
        depth[identity_matrix(R.rank)] = 0;
        std::vector<IntMat> frontier{identity_matrix(R.rank)};
        int max_depth = 0;
        while (!frontier.empty()) {
            std::vector<IntMat> next;
            for (const IntMat& m : frontier)
                for (int i = 1; i <= R.rank; ++i) {
                    IntMat nm = mat_mul(m, W.generator(i));
                    if (depth.emplace(nm, depth[m] + 1).second) {
                        max_depth = depth[m] + 1;
                        next.push_back(std::move(nm));
                    }
                }
            frontier = std::move(next);
        }
        CHECK(static_cast<Int>(depth.size()) == R.weyl_order);
        CHECK(Int(2) * max_depth == R.rank * R.coxeter);
    }
}
