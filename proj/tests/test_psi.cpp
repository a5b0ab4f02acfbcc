#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "weylext/psi.hpp"

using namespace weylext;
using psi::Bimodule;

TEST_CASE("monomials and graded dims") {
    // p=3 sector (1,3) has the two paths x^2 and x xi
    GradedDims d = psi::psi_graded_dims(3);
    CHECK(d.at(1, 3, -2, 2) == 1);
    CHECK(d.at(1, 3, 0, 1) == 1);
    CHECK(d.at(2, 2, 0, 0) == 1);
    CHECK(d.at(2, 1, 0, 0) == 0);
    CHECK(d.total() == 9);
    for (int p : {2, 3, 5, 7}) CHECK(psi::psi_graded_dims(p).total() == p * p);
}

TEST_CASE("monomial products") {
    // x * x = x^2 through adjacent vertices
    psi::PsiMonomial x23{3, 1, 0};  // e2 x e3
    psi::PsiMonomial x12{2, 1, 0};  // e1 x e2
    auto prod = psi::mul(3, x12, x23);
    REQUIRE(prod.has_value());
    CHECK(prod->a == 2);
    CHECK(prod->t == 3);
    CHECK(!psi::mul(3, x23, x12).has_value());  // vertices do not chain
    // xi^2 = 0
    psi::PsiMonomial xi12{2, 0, 1}, xi23{3, 0, 1};
    CHECK(!psi::mul(3, xi12, xi23).has_value());
}

TEST_CASE("regular bimodule and simples") {
    for (int p : {2, 3, 5, 7}) {
        auto r = psi::regular(p);
        r.check();
        CHECK(r.dim() == p * p);
        CHECK(psi::psi0(p).dim() == p);
        CHECK(psi::psi0bar_sigma(p).dim() == p - 1);
    }
}

TEST_CASE("M and Mbar") {
    for (int p : {2, 3, 5, 7}) {
        auto M = psi::build_M(p);
        auto Mbar = psi::build_Mbar(p);
        M.check();
        Mbar.check();
        CHECK(M.dim() == 2 * p * p);
        CHECK(Mbar.dim() == 2 * p * p - 1);
        // the removed element sits at (s,t,j,k) = (p,1,0,-1)
        CHECK(M.graded_dims().at(p, 1, 0, -1) == 1);
        CHECK(Mbar.graded_dims().at(p, 1, 0, -1) == 0);
    }
    // named sector entries at p = 3
    auto d = psi::build_M(3).graded_dims();
    CHECK(d.at(3, 1, 0, -1) == 1);
    CHECK(d.at(1, 3, -6, 4) == 1);
}

TEST_CASE("duals and twists") {
    auto M = psi::build_M(3);
    auto Md = psi::dual(M);
    Md.check();
    CHECK(Md.graded_dims() == M.graded_dims().dual());
    // involution restores basis order, degrees and structure constants
    auto Mdd = psi::dual(Md);
    REQUIRE(Mdd.dim() == M.dim());
    for (long i = 0; i < M.dim(); ++i) {
        CHECK(Mdd.basis[i].s == M.basis[i].s);
        CHECK(Mdd.basis[i].j == M.basis[i].j);
    }
    for (int g = 0; g < 4; ++g)
        for (long i = 0; i < M.dim(); ++i) {
            auto a = M.act[g][i];
            auto b = Mdd.act[g][i];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }

    // tau twist squares to the identity
    auto Mt = psi::twist(M, psi::Side::Left, psi::Auto::Tau);
    Mt.check();
    auto Mtt = psi::twist(Mt, psi::Side::Left, psi::Auto::Tau);
    for (int g = 0; g < 4; ++g) CHECK(Mtt.act[g] == M.act[g]);

    // sigma relabels sectors of the degree-zero piece
    auto z = psi::twist(psi::psi0(3), psi::Side::Left, psi::Auto::Sigma);
    CHECK(z.graded_dims().at(3, 1, 0, 0) == 1);
    CHECK_THROWS_AS(psi::twist(M, psi::Side::Left, psi::Auto::Sigma), InvariantError);
}

TEST_CASE("tensor products over the quiver algebra") {
    // All four pairings collapse onto a single shifted copy: <-p-1>[p-1].
    for (int p : {3, 5}) {
        auto M = psi::build_M(p);
        auto Psi = psi::regular(p);
        auto dM = M.graded_dims();
        CHECK(psi::tensor_over_psi(Psi, M, FieldMode::Both, p) == dM);
        CHECK(psi::tensor_over_psi(M, Psi, FieldMode::Both, p) == dM);
        CHECK(psi::tensor_over_psi(M, M, FieldMode::Both, p) ==
              dM.shifted(-p - 1, p - 1));
    }
    auto Mb = psi::build_Mbar(3);
    auto M3 = psi::build_M(3);
    auto dM = M3.graded_dims();
    CHECK(psi::tensor_over_psi(Mb, Mb, FieldMode::Both, 3) == dM.shifted(-4, 2));
    CHECK(psi::tensor_over_psi(Mb, M3, FieldMode::Both, 3) == dM.shifted(-4, 2));
    CHECK(psi::tensor_over_psi(M3, Mb, FieldMode::Both, 3) == dM.shifted(-4, 2));
}

TEST_CASE("symmetric power bimodule at p=2") {
    CHECK_THROWS_AS(psi::build_V(3, 1), InvariantError);
    CHECK(psi::build_V(2, 0).total == 4);
    CHECK(psi::build_V(2, 1).total == 8);
    CHECK(psi::build_V(2, 2).total == 12);
    // sector dims (n, n+1, n+1, n+2)
    auto v2 = psi::build_V(2, 2);
    long s21 = 0, s11 = 0, s22 = 0, s12 = 0;
    for (auto& [key, n] : v2.dims.entries()) {
        if (key.s == 2 && key.t == 1) s21 += n;
        if (key.s == 1 && key.t == 1) s11 += n;
        if (key.s == 2 && key.t == 2) s22 += n;
        if (key.s == 1 && key.t == 2) s12 += n;
    }
    CHECK(s21 == 2);
    CHECK(s11 == 3);
    CHECK(s22 == 3);
    CHECK(s12 == 4);
}
