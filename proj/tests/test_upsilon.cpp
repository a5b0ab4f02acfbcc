#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "weylext/upsilon.hpp"

using namespace weylext;
using model::Conventions;
using model::LatticePoint4;
using model::LatticePoint7;
using model::PolytopeModel;

TEST_CASE("polytope membership") {
    CHECK(model::in_P_psi(3, LatticePoint4{2, 1, 0, 3}));
    CHECK(model::in_P_psi(3, LatticePoint4{1, -2, 2, 3}));
    CHECK(model::in_P_psi(3, LatticePoint4{1, 0, 0, 1}));
    // the printed letter-count inequality rejects a genuine diagram point
    CHECK(!model::in_P_psi(3, LatticePoint4{1, -2, 2, 3}, model::XiCountReading::JMinusK));

    CHECK(model::in_P_0(3, LatticePoint4{1, 0, 0, 3}));
    CHECK(!model::in_P_0(3, LatticePoint4{3, 0, 0, 1}));
    CHECK(!model::in_P_0(3, LatticePoint4{1, 1, 0, 3}));

    CHECK(model::in_P_M(3, LatticePoint4{3, 0, -1, 1}));
    CHECK(!model::in_P_Mbar(3, LatticePoint4{3, 0, -1, 1}));
    CHECK(model::in_P_M(3, LatticePoint4{1, -6, 4, 3}));
    CHECK(!model::in_P_M(3, LatticePoint4{1, -5, 4, 3}));
}

TEST_CASE("row enumeration") {
    PolytopeModel m(3, Conventions{});
    CHECK(m.row_points(0).size() == 9);
    CHECK(m.row_points(1).size() == 3);
    CHECK(m.row_points(-1).size() == 19);
    CHECK(m.row_points(-2).size() == 27);
    CHECK(m.row_points(-3).size() == 37);
    CHECK(m.row_points(-4).size() == 45);
    PolytopeModel m2(2, Conventions{});
    CHECK(m2.row_points(-2).size() == 12);
    // no duplicate (s,i,j,k,t)
    for (int p : {2, 3, 5}) {
        PolytopeModel mm(p, Conventions{});
        CHECK_NOTHROW(mm.enumerate_points(-6, 1));
    }
}

TEST_CASE("degrees and find") {
    PolytopeModel m(3, Conventions{});
    // degree-zero family keeps native degrees
    for (const auto& w : m.row_points(0)) {
        auto [j0, k0] = m.native_degrees(w);
        CHECK(j0 == w.j);
        CHECK(k0 == w.k);
        CHECK(-w.a - w.b == w.i);
    }
    // every enumerated point is found back at its coordinates
    for (int row = -4; row <= 1; ++row)
        for (const auto& w : m.row_points(row)) {
            auto f = m.find(w.s, w.i, w.j, w.k, w.t);
            REQUIRE(f.has_value());
            CHECK(*f == w);
        }
    // marker grading on the nonpositive rows
    for (int row = -4; row <= 0; ++row)
        for (const auto& w : m.row_points(row)) CHECK(w.i == -w.a - w.b);
}

TEST_CASE("products") {
    PolytopeModel m(3, Conventions{});
    // unit points are idempotent
    auto e2 = m.unit(2);
    auto r = m.multiply(e2, e2);
    CHECK(r.sign == 1);
    CHECK(r.point == e2);
    // mismatched vertices give zero
    LatticePoint7 x23{2, 0, -1, 1, 0, 0, 3};
    LatticePoint7 x12{1, 0, -1, 1, 0, 0, 2};
    CHECK(m.multiply(x23, x12).is_zero());
    // x then x composes to x^2
    auto xx = m.multiply(x12, x23);
    REQUIRE(!xx.is_zero());
    CHECK(xx.sign == 1);
    CHECK(xx.point == LatticePoint7{1, 0, -2, 2, 0, 0, 3});
    // two unit-row points annihilate (the i-sum leaves the truncation)
    LatticePoint7 z1{1, 1, 1, 0, -1, 0, 3};
    LatticePoint7 z3{3, 1, 1, 0, -1, 0, 1};
    CHECK(m.multiply(z1, z3).is_zero());
    CHECK(PolytopeModel::truncated(z1, z3));
}

TEST_CASE("product table closure in a window") {
    PolytopeModel m(3, Conventions{});
    auto stats = model::truncated_product_table(m, -4, 1);
    CHECK(stats.pairs == 140L * 140);
    CHECK(stats.truncated_pairs > 0);
    CHECK(stats.nonzero > 0);
}

TEST_CASE("conditional associativity in a window") {
    for (int p : {3}) {
        PolytopeModel m(p, Conventions{});
        auto pts = m.enumerate_points(-4, 1);
        for (const auto& w : pts)
            for (const auto& v : pts) {
                if (w.t != v.s || PolytopeModel::truncated(w, v)) continue;
                for (const auto& u : pts) {
                    if (v.t != u.s || PolytopeModel::truncated(v, u)) continue;
                    if (w.i + v.i + u.i > 1) continue;
                    auto wv = m.multiply(w, v);
                    auto vu = m.multiply(v, u);
                    auto l = wv.is_zero() ? model::SignedPoint{}
                                          : m.multiply(wv.point, u);
                    auto r = vu.is_zero() ? model::SignedPoint{}
                                          : m.multiply(w, vu.point);
                    int ls = wv.is_zero() ? 0 : wv.sign * l.sign;
                    int rs = vu.is_zero() ? 0 : vu.sign * r.sign;
                    REQUIRE(ls == rs);
                    if (ls != 0) REQUIRE(l.point == r.point);
                }
            }
    }
    // randomized at p = 5 over a deeper window
    {
        PolytopeModel m(5, Conventions{});
        auto pts = m.enumerate_points(-4, 1);
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
        for (int trial = 0; trial < 20000; ++trial) {
            const auto& w = pts[pick(rng)];
            const auto& v = pts[pick(rng)];
            const auto& u = pts[pick(rng)];
            if (w.i + v.i > 1 || v.i + u.i > 1 || w.i + v.i + u.i > 1) continue;
            auto wv = m.multiply(w, v);
            auto vu = m.multiply(v, u);
            auto l = wv.is_zero() ? model::SignedPoint{} : m.multiply(wv.point, u);
            auto r = vu.is_zero() ? model::SignedPoint{} : m.multiply(w, vu.point);
            int ls = wv.is_zero() ? 0 : wv.sign * l.sign;
            int rs = vu.is_zero() ? 0 : vu.sign * r.sign;
            REQUIRE(ls == rs);
            if (ls != 0) REQUIRE(l.point == r.point);
        }
    }
}

TEST_CASE("model equals oracle on the calibration rows") {
    PolytopeModel m(3, Conventions{});
    CHECK(model::compare_model_oracle(m, -1, FieldMode::Both).empty());
    CHECK(model::compare_model_oracle(m, -2, FieldMode::Both).empty());
    PolytopeModel m2(2, Conventions{});
    CHECK(model::compare_model_oracle(m2, -3, FieldMode::Both).empty());
    PolytopeModel m5(5, Conventions{});
    CHECK(model::compare_model_oracle(m5, -2, FieldMode::Both).empty());
}
