#include "doctest.h"
#include "fixtures.hpp"
#include "tilt/endo.hpp"

using namespace tilt;
using namespace fixtures;

namespace {
ModuleMap times(const ModuleMap& g, const ModuleMap& f) { return compose(g, f); }
}  // namespace

TEST_CASE("endomorphism algebra of the 4-cycle complex") {
    auto a = cycle4(Field::prime(2));
    EndoAlgebra b = endomorphism_algebra(cycle4_complex(a));
    CHECK(b.algebra.dim == 6);
    CHECK(b.algebra.is_associative());
    QuiverPresentation q = present_as_quiver_algebra(b.algebra);
    CHECK(q.vertices == 4);
    std::vector<std::pair<int, int>> expected{{1, 0}, {3, 2}};
    CHECK(q.arrows == expected);
    CHECK(q.loewy_length == 2);
}

TEST_CASE("bimodule actions respect the product") {
    for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
        auto a = cycle4(f);
        EndoAlgebra b = endomorphism_algebra(cycle4_complex(a));
        const auto& s = b.algebra;
        for (std::size_t i = 0; i < s.dim; ++i)
            for (std::size_t j = 0; j < s.dim; ++j) {
                Vec prod = s.mult[i][j];
                CHECK(rho_of(b, prod).comp == times(b.rho[j], b.rho[i]).comp);
                CHECK(lambda_of(b, prod).comp == times(b.lambda[i], b.lambda[j]).comp);
            }
        CHECK(rho_of(b, s.unit).comp == identity_map(b.bundle.H0).comp);
        CHECK(lambda_of(b, s.unit).comp == identity_map(b.bundle.H1dual).comp);
        for (auto& r : b.rho) CHECK(is_module_map(b.bundle.H0, b.bundle.H0, r));
        for (auto& l : b.lambda) CHECK(is_module_map(b.bundle.H1dual, b.bundle.H1dual, l));
    }
}

TEST_CASE("presentations of small algebras") {
    auto a = a2(Field::rationals());
    EndoAlgebra b = endomorphism_algebra(free_complex(a));
    CHECK(b.algebra.dim == 3);
    QuiverPresentation q = present_as_quiver_algebra(b.algebra);
    CHECK(q.vertices == 2);
    std::vector<std::pair<int, int>> expected{{1, 0}};
    CHECK(q.arrows == expected);

    QuiverPresentation k = present_as_quiver_algebra(as_struct_algebra(one_vertex(Field::prime(5))));
    CHECK(k.vertices == 1);
    CHECK(k.arrows.empty());

    TwoTermComplex c = make_complex(a, {0}, {0});
    c.entry(0, 0) = a->vertex(0);
    CHECK(endomorphism_algebra(c).algebra.dim == 0);

    // a non-basic algebra: End(P(1) + P(1)) is 2x2 matrices
    EndoAlgebra m = endomorphism_algebra(stalk_projective(a, {1, 1}));
    QuiverPresentation mq = present_as_quiver_algebra(m.algebra);
    CHECK(m.algebra.dim == 4);
    CHECK(mq.vertices == 1);
    CHECK(mq.multiplicities == std::vector<std::size_t>{2});
}
