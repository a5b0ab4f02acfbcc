#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "weylext/report.hpp"

using namespace weylext;
using model::Conventions;
using schur::BlockAlgebra;

namespace {
std::string ref_path() { return report::default_reference_path(3, 2); }
}  // namespace

TEST_CASE("cartan table of the golden block") {
    BlockAlgebra b(3, 2, Conventions{});
    auto ct = report::cartan(b);
    CHECK(ct.total() == b.dim());
    // column of the one-dimensional projective
    report::Vertex v11{1, 1};
    CHECK(ct.column_total(v11) == 1);
    const auto* own = ct.entry(v11, v11);
    REQUIRE(own != nullptr);
    CHECK(own->at({0, 0}) == 1);
}

TEST_CASE("reference match and spot values") {
    BlockAlgebra b(3, 2, Conventions{});
    auto ref = report::load_reference_csv(ref_path());
    CHECK(ref.nvertices == 9);
    auto match = report::match_reference(b, ref);
    REQUIRE(match.ok);
    CHECK(match.solutions == 1);

    auto ct = report::cartan(b);
    const auto& v1 = match.bijection.at(1);
    const auto& v2 = match.bijection.at(2);
    const auto& v3 = match.bijection.at(3);
    // column of vertex 2 is {2 at (0,0), 1 at (1,0), 1 at (-1,1)}
    CHECK(ct.column_total(v2) == 3);
    CHECK(report::ext_dim(ct, v2, v1, 0) == 1);
    CHECK(report::ext_dim(ct, v2, v1, 0, 1) == 1);
    CHECK(report::ext_dim(ct, v2, v1, 1, -1) == 1);
    CHECK(report::ext_dim(ct, v1, v1, 0) == 1);
    CHECK(report::ext_dim(ct, v1, v1, 1) == 0);
    // column of vertex 3 carries five factors
    CHECK(ct.column_total(v3) == 5);
    // generating function of the (1,2) entry
    auto poly = report::poincare(ct, v1, v2);
    CHECK(report::poincare_str(poly) == "x^-1*y + x");

    // total over all pairs equals the block dimension at p=2, q=1
    BlockAlgebra small(2, 1, Conventions{});
    CHECK(report::cartan(small).total() == small.dim());
}

TEST_CASE("perturbed reference fails with a pinpointed diff") {
    auto ref = report::load_reference_csv(ref_path());
    ref.cartan[{3, 1}][{0, 1}] += 1;  // corrupt one multiplicity
    BlockAlgebra b(3, 2, Conventions{});
    auto match = report::match_reference(b, ref);
    CHECK(!match.ok);
    CHECK(!match.diff.empty());
}

TEST_CASE("quiver of the golden block") {
    BlockAlgebra b(3, 2, Conventions{});
    auto qv = report::quiver(b);
    CHECK(qv.arrows.size() == 24);
    for (const auto& a : qv.arrows) CHECK(!(a.j == 0 && a.k == 0));
    auto dot = qv.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("j=") != std::string::npos);
}

TEST_CASE("first-block quiver from the corner reference") {
    BlockAlgebra b(3, 1, Conventions{});
    auto qv = report::quiver(b);
    // arrows s+1 -> s at (1,0) and (-1,1)
    CHECK(qv.arrows.size() == 4);
    for (const auto& a : qv.arrows) {
        CHECK(a.source[0] == a.target[0] + 1);
        bool hom = a.j == 1 && a.k == 0;
        bool ext = a.j == -1 && a.k == 1;
        CHECK((hom || ext));
    }
    // match against the restriction of the q=2 reference to labels 1..3
    auto ref = report::restrict_reference(report::load_reference_csv(ref_path()), {1, 2, 3});
    auto match = report::match_reference(b, ref);
    REQUIRE(match.ok);
    CHECK(match.bijection.at(1) == report::Vertex{1});
}

TEST_CASE("block json serialisation") {
    BlockAlgebra b(2, 1, Conventions{});
    auto text = report::block_to_json(b);
    CHECK(text.find("\"p\": 2") != std::string::npos);
    CHECK(text.find("\"basis\"") != std::string::npos);
}
