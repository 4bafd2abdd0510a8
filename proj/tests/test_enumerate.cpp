#include "doctest.h"
#include "fixtures.hpp"
#include "tilt/enumerate.hpp"

#include <chrono>

using namespace tilt;
using namespace fixtures;

namespace {
// Independent count: all arrow tuples, bucketed by pairwise isomorphism tests.
std::size_t brute_force_classes(const AlgPtr& a, const std::vector<std::size_t>& d) {
    const std::uint32_t p = a->field().p;
    std::size_t entries = 0;
    for (auto& ar : a->quiver().arrows) entries += d[ar.tgt] * d[ar.src];
    std::uint64_t n = 1;
    for (std::size_t k = 0; k < entries; ++k) n *= p;
    std::vector<Rep> classes;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        Rep r;
        r.alg = a;
        r.dim = d;
        std::uint64_t x = idx;
        for (auto& ar : a->quiver().arrows) {
            Matrix m(a->field(), d[ar.tgt], d[ar.src]);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    m.at(i, j) = Scalar::from_int(a->field(), static_cast<long long>(x % p));
                    x /= p;
                }
            r.maps.push_back(m);
        }
        try {
            r.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        bool fresh = true;
        for (auto& c : classes)
            if (is_isomorphic(c, r)) fresh = false;
        if (fresh) classes.push_back(r);
    }
    return classes.size();
}
}  // namespace

TEST_CASE("one vertex over F2") {
    auto inv = enumerate(one_vertex(Field::prime(2)), {1});
    CHECK(inv.reps.size() == 2);
}

TEST_CASE("two-vertex path algebra over F2 at (1,1)") {
    auto a = a2(Field::prime(2));
    auto inv = enumerate(a, {1, 1});
    CHECK(inv.reps.size() == 5);
}

TEST_CASE("enumeration agrees with brute force") {
    for (std::uint32_t p : {2u, 3u}) {
        auto a = a2(Field::prime(p));
        auto inv = enumerate(a, {2, 2});
        std::size_t expected = 0;
        for (std::size_t x = 0; x <= 2; ++x)
            for (std::size_t y = 0; y <= 2; ++y) expected += brute_force_classes(a, {x, y});
        CHECK(inv.reps.size() == expected);
        for (std::size_t i = 0; i < inv.reps.size(); ++i)
            for (std::size_t j = i + 1; j < inv.reps.size(); ++j) CHECK_FALSE(is_isomorphic(inv.reps[i], inv.reps[j]));
    }
}

TEST_CASE("4-cycle inventory contains the simples") {
    auto a = cycle4(Field::prime(2));
    auto inv = enumerate(a, {1, 1, 1, 1});
    for (int v = 0; v < 4; ++v) {
        bool found = false;
        for (auto& r : inv.reps) found = found || is_isomorphic(r, simple(a, v));
        CHECK(found);
    }
    auto start = std::chrono::steady_clock::now();
    auto big = enumerate(a, {2, 2, 2, 2});
    MESSAGE("4-cycle at (2,2,2,2): " << big.reps.size() << " classes in "
            << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            << " ms");
    for (auto& r : big.reps) r.validate();
}

TEST_CASE("budget") {
    auto a = a2(Field::prime(2));
    CHECK_THROWS_AS(enumerate(a, {3, 3}, 100), BudgetExceeded);
    CHECK_THROWS_AS(enumerate(a2(Field::rationals()), {1, 1}), std::invalid_argument);
}
