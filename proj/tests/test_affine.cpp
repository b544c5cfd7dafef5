#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "core/affine.hpp"
#include "core/weyl.hpp"

using namespace weyldft;

namespace {

IntVec mod_vec(const IntVec& v, Int M) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % M) + M) % M;
    return r;
}

}  // namespace

TEST_CASE("kac coordinates and validation") {
    RootSystemData R = build(parse_algebra("A2"));
    IntVec q{1, 1};
    IntVec kac = kac_coordinates(R, q, 7);
    CHECK(kac == IntVec{5, 1, 1});
    CHECK_NOTHROW(validate_point_kac(R, kac, 7));
    CHECK_THROWS_AS(validate_point_kac(R, kac, 8), Error);
    CHECK_THROWS_AS(validate_point_kac(R, IntVec{1, 2}, 7), Error);
    CHECK_THROWS_AS(validate_weight_kac(R, IntVec{-1, 4, 4}, 7), Error);
    try {
        validate_point_kac(R, IntVec{1, 2}, 7);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MalformedKac);
    }
}

TEST_CASE("reduction lands in the fundamental domain with exact bookkeeping") {
    std::mt19937_64 rng(12345);
    for (const auto& name : {"A1", "A2", "A3", "B3", "C2", "C3", "D4", "G2", "F4"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        WeylGroup W(R, 1'000'000);
        std::set<IntMat> members;
        for (const WeylElement& w : W.elements()) members.insert(w.mat_q);
        std::uniform_int_distribution<Int> coord(-30, 30);
        for (Int M : {1, 2, 5, 7}) {
            for (int trial = 0; trial < 25; ++trial) {
                IntVec q(R.rank);
                for (auto& v : q) v = coord(rng);
                ReducedPoint red = reduce_point(R, q, M);
                for (Int s : red.kac) CHECK(s >= 0);
                CHECK(kac_coordinates(R, red.q, M) == red.kac);
                // q = w_q(q_F) + M * shift, with w_q an actual group element.
                IntVec img = mat_vec(red.w_q, red.q);
                for (int i = 0; i < R.rank; ++i) img[i] += M * red.shift[i];
                CHECK(img == q);
                CHECK(members.count(red.w_q) == 1);
                // omega-side matrix pairs with the q-side one.
                IntMat mt(R.rank, IntVec(R.rank));
                for (int a = 0; a < R.rank; ++a)
                    for (int b = 0; b < R.rank; ++b) mt[a][b] = red.w_omega[b][a];
                CHECK(mat_mul(mt, red.w_q) == identity_matrix(R.rank));
                // Signs match the enumerated element's signs.
                for (const WeylElement& w : W.elements())
                    if (w.mat_q == red.w_q) {
                        CHECK(w.sign_det == red.sign_det);
                        CHECK(w.sign_short == red.sign_short);
                        CHECK(w.sign_long == red.sign_long);
                    }
                // Reducing a reduced point is a no-op.
                ReducedPoint again = reduce_point(R, red.q, M);
                CHECK(again.q == red.q);
                CHECK(again.w_q == identity_matrix(R.rank));
            }
        }
    }
}

TEST_CASE("epsilon equals the torus orbit size") {
    std::mt19937_64 rng(99);
    for (const auto& name : {"A1", "A2", "A3", "B3", "C2", "C3", "G2"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        WeylGroup W(R, 1'000'000);
        for (Int M : {1, 2, 3, 4, 5, 6}) {
            // All grid representatives: reduce every torus point.
            std::set<IntVec> seen;
            IntVec q(R.rank, 0);
            std::function<void(int)> walk = [&](int pos) {
                if (pos == R.rank) {
                    ReducedPoint red = reduce_point(R, q, M);
                    if (!seen.insert(red.q).second) return;
                    // Brute-force orbit of the representative on the torus.
                    std::set<IntVec> orbit;
                    Int stab = 0;
                    for (const WeylElement& w : W.elements()) {
                        IntVec img = mod_vec(mat_vec(w.mat_q, red.q), M);
                        orbit.insert(img);
                        if (img == mod_vec(red.q, M)) ++stab;
                    }
                    CHECK(epsilon(R, red.kac) == static_cast<Int>(orbit.size()));
                    CHECK(point_stab_order(R, red.kac) == stab);
                    return;
                }
                for (Int v = 0; v < M; ++v) {
                    q[pos] = v;
                    walk(pos + 1);
                }
            };
            walk(0);
        }
    }
}

TEST_CASE("torus points partition into orbits counted by epsilon") {
    for (const auto& name : {"A2", "C2", "G2", "B3"}) {
        CAPTURE(name);
        RootSystemData R = build(parse_algebra(name));
        for (Int M : {1, 2, 3, 5, 8}) {
            // Reduce every torus point; group by representative.
            std::map<IntVec, Int> hits;
            IntVec q(R.rank, 0);
            std::function<void(int)> walk = [&](int pos) {
                if (pos == R.rank) {
                    hits[reduce_point(R, q, M).q]++;
                    return;
                }
                for (Int v = 0; v < M; ++v) {
                    q[pos] = v;
                    walk(pos + 1);
                }
            };
            walk(0);
            Int total = 0;
            for (const auto& [rep, count] : hits) {
                ReducedPoint red = reduce_point(R, rep, M);
                CHECK(count == epsilon(R, red.kac));
                total += count;
            }
            Int expect = 1;
            for (int i = 0; i < R.rank; ++i) expect *= M;
            CHECK(total == expect);
        }
    }
}

TEST_CASE("subdiagram orders") {
    RootSystemData a2 = build(parse_algebra("A2"));
    // Origin: all of W stabilizes.
    CHECK(point_stab_order(a2, IntVec{7, 0, 0}) == 6);
    CHECK(epsilon(a2, IntVec{7, 0, 0}) == 1);
    // Interior point: trivial stabilizer.
    CHECK(epsilon(a2, IntVec{1, 1, 5}) == 6);
    RootSystemData g2 = build(parse_algebra("G2"));
    // Extended G2 diagram is a path 0 - 2 = 1 (triple bond between the
    // finite nodes): zeros {0,1} are disconnected, zeros {0,2} adjacent.
    CHECK(point_stab_order(g2, IntVec{0, 0, 1}) == 4);
    CHECK(point_stab_order(g2, IntVec{0, 1, 0}) == 6);
    CHECK(point_stab_order(g2, IntVec{1, 0, 0}) == 12);
    RootSystemData f4 = build(parse_algebra("F4"));
    // All Kac coordinates zero except node 0: finite part stabilizes fully.
    CHECK(point_stab_order(f4, IntVec{1, 0, 0, 0, 0}) == 1152);
}
