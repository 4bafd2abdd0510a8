#include "doctest.h"
#include "fixtures.hpp"
#include "tilt/matalg.hpp"

using namespace tilt;
using namespace fixtures;

TEST_CASE("path algebra dimensions") {
    CHECK(one_vertex(Field::rationals())->dim() == 1);
    CHECK(a2(Field::rationals())->dim() == 3);
    auto c = cycle4(Field::prime(2));
    CHECK(c->dim() == 8);
    CHECK(opposite(c)->dim() == 8);
}

TEST_CASE("projectives and injectives of the two-vertex path algebra") {
    auto a = a2(Field::rationals());
    CHECK(projective(a, 0).total() == 2);
    CHECK(projective(a, 1).total() == 1);
    CHECK(injective(a, 1).total() == 2);
    CHECK(injective(a, 0).total() == 1);
}

TEST_CASE("right multiplication by alpha on the 4-cycle") {
    auto a = cycle4(Field::prime(2));
    ProjSum from = realize_projectives(a, {1});
    ProjSum to = realize_projectives(a, {0});
    ModuleMap f = realize_entries(from, to, {arrow_elem(a, "alpha")});
    CHECK(is_module_map(from.rep, to.rep, f));
    SubModule k = kernel(from.rep, to.rep, f);
    QuotientModule c = cokernel(from.rep, to.rep, f);
    CHECK(is_isomorphic(k.rep, simple(a, 2)));
    CHECK(is_isomorphic(c.rep, simple(a, 0)));
}

TEST_CASE("decomposition splits P(1) + S(2)") {
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto a = a2(f);
        Rep m = direct_sum({projective(a, 0), simple(a, 1)});
        auto parts = indecomposable_summands(m);
        REQUIRE(parts.size() == 2);
        bool ok = (is_isomorphic(parts[0], projective(a, 0)) && is_isomorphic(parts[1], simple(a, 1))) ||
                  (is_isomorphic(parts[1], projective(a, 0)) && is_isomorphic(parts[0], simple(a, 1)));
        CHECK(ok);
    }
}

TEST_CASE("ext and tor") {
    auto a = a2(Field::rationals());
    CHECK(ext1(simple(a, 0), simple(a, 1)) == 1);
    CHECK(ext1(projective(a, 0), simple(a, 1)) == 0);
    auto c = cycle4(Field::prime(2));
    CHECK(ext2(simple(c, 0), simple(c, 2)) == 1);
    auto aop = opposite(a);
    CHECK(tensor_over_A(simple(aop, 1), simple(a, 1)).dim == 1);
}
