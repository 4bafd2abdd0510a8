#pragma once
// Small algebras shared by the test binaries.

#include "tilt/algebra.hpp"
#include "tilt/proj.hpp"

namespace fixtures {

using namespace tilt;

inline Path path_of(const Quiver& q, std::vector<std::string> written) {
    // written in function style: last factor applies first
    Path p;
    for (auto it = written.rbegin(); it != written.rend(); ++it) p.arrows.push_back(q.arrow_index(*it));
    p.src = q.arrows[p.arrows.front()].src;
    p.tgt = q.arrows[p.arrows.back()].tgt;
    return p;
}

inline AlgPtr one_vertex(Field f) {
    Quiver q;
    q.n = 1;
    return build_algebra(q, {}, f);
}

inline AlgPtr a2(Field f) {
    Quiver q;
    q.n = 2;
    q.arrows = {{"alpha", 0, 1}};
    return build_algebra(q, {}, f);
}

// 4-cycle 1 -> 2 -> 3 -> 4 -> 1, all length-two paths zero.
inline AlgPtr cycle4(Field f) {
    Quiver q;
    q.n = 4;
    q.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 3}, {"delta", 3, 0}};
    std::vector<Relation> rels;
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"beta", "alpha"}, {"gamma", "beta"}, {"delta", "gamma"}, {"alpha", "delta"}})
        rels.push_back({Term{Scalar::one(f), path_of(q, {x, y})}});
    return build_algebra(q, rels, f);
}

inline Elem arrow_elem(const AlgPtr& a, const std::string& name) { return a->arrow(a->quiver().arrow_index(name)); }

// P(2)^2 + P(4)^2 -> P(1) + P(3) with entries alpha at (1,1) and gamma at (2,3).
inline TwoTermComplex cycle4_complex(const AlgPtr& a) {
    TwoTermComplex p = make_complex(a, {1, 1, 3, 3}, {0, 2});
    p.entry(0, 0) = arrow_elem(a, "alpha");
    p.entry(1, 2) = arrow_elem(a, "gamma");
    return p;
}

// (P(2) -> P(1)) + (0 -> P(1)).
inline TwoTermComplex a2_tilt(const AlgPtr& a) {
    TwoTermComplex p = make_complex(a, {1}, {0, 0});
    p.entry(0, 0) = arrow_elem(a, "alpha");
    return p;
}

}  // namespace fixtures
