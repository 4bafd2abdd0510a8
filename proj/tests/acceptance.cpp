// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "fixtures.hpp"
#include "tilt/commands.hpp"
#include "tilt/endo.hpp"
#include "tilt/tilting.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace tilt;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

int failures = 0;

void run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  ("
              << elapsed_ms(t0) << " ms)\n";
    for (auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.pass) ++failures;
}

std::string data(const std::string& name) { return std::string(TILT_DATA_DIR) + "/" + name; }

std::string get(const Report& r, const std::string& key) {
    auto it = r.machine.find(key);
    return it == r.machine.end() ? "<missing>" : it->second;
}

// 1 -> 2 -> 3 with the length-two path zero.
AlgPtr a3_rad2(Field f) {
    Quiver q;
    q.n = 3;
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return build_algebra(q, {{Term{Scalar::one(f), path_of(q, {"b", "a"})}}}, f);
}

AlgPtr kronecker(Field f) {
    Quiver q;
    q.n = 2;
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return build_algebra(q, {}, f);
}

TwoTermComplex random_complex(const AlgPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> vert(0, a->vertices() - 1), len(0, 3), coeff(-1, 2), coin(0, 3);
    std::vector<int> m1, z;
    for (int i = len(rng); i > 0; --i) m1.push_back(vert(rng));
    for (int i = len(rng); i > 0; --i) z.push_back(vert(rng));
    TwoTermComplex p = make_complex(a, m1, z);
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < m1.size(); ++c)
            for (std::size_t b : a->between(z[r], m1[c])) {
                if (a->basis_path(b).length() == 0 && coin(rng) != 0) continue;  // keep identities rare
                Scalar s = Scalar::from_int(a->field(), coeff(rng));
                p.entry(r, c) = elem_add(p.entry(r, c), elem_scale(a->basis_elem(b), s));
            }
    return p;
}

std::vector<Rep> module_pool(const AlgPtr& a, std::mt19937_64& rng) {
    std::vector<Rep> pool{zero_module(a)};
    for (int v = 0; v < a->vertices(); ++v) {
        pool.push_back(simple(a, v));
        pool.push_back(projective(a, v));
        pool.push_back(injective(a, v));
    }
    for (int i = 0; i < 6; ++i) {
        CohomologyBundle b = cohomology(random_complex(a, rng));
        pool.push_back(b.H0);
        pool.push_back(b.Hminus1);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 4; ++i) pool.push_back(direct_sum(a, {pool[pick(rng)], pool[pick(rng)]}));
    return pool;
}

Vec flatten_map(const ModuleMap& f) {
    Vec out;
    for (const Matrix& m : f.comp) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

// Rank of f -> f o d on Hom(P^0, X), computed on realized modules rather than in Yoneda coordinates.
std::size_t precompose_rank(const RealizedComplex& rc, const Rep& x) {
    auto homs = hom_space(rc.zero.rep, x);
    std::vector<Vec> images;
    for (auto& f : homs) images.push_back(flatten_map(compose(f, rc.d)));
    std::size_t len = 0;
    for (int v = 0; v < x.alg->vertices(); ++v) len += x.dim[v] * rc.minus1.rep.dim[v];
    return from_columns(images, x.alg->field(), len).rank();
}

struct Identity {
    std::string name;
    std::size_t checked = 0, failed = 0;
};

}  // namespace

int main() {
    run(1, "4-cycle complex: tilting refuted, torsion pair verified at (2,2,2,2), End has quiver 2->1, 4->3",
        [](Outcome& o) {
            auto t0 = Clock::now();
            AlgDocument doc = load_alg(data("ex310.alg"));
            CommandOptions opt;
            opt.bound = std::vector<std::size_t>{2, 2, 2, 2};
            Report check = cmd_check(doc, "P", opt);
            o.require(get(check, "tilting.verdict") == "refuted", "tilting.verdict = " + get(check, "tilting.verdict"));
            o.require(get(check, "torsion.verdict") == "verified", "torsion.verdict = " + get(check, "torsion.verdict"));
            o.require(check.exit_code() == 1, "check exit code");
            Report endo = cmd_endo(doc, "P", opt);
            o.require(get(endo, "endo.vertices") == "4", "endo.vertices = " + get(endo, "endo.vertices"));
            o.require(get(endo, "endo.arrows") == "2->1, 4->3", "endo.arrows = " + get(endo, "endo.arrows"));
            o.require(get(endo, "endo.dim") == "6", "endo.dim = " + get(endo, "endo.dim"));
            o.require(elapsed_ms(t0) < 10000, "runtime under 10 s");
        });

    run(2, "4-cycle complex: H0 = S(1)+S(3), canonical sequence of P(2) is S(3) -> P(2) -> S(2)", [](Outcome& o) {
        auto a = cycle4(Field::prime(2));
        Membership m(cycle4_complex(a));
        const Rep& h0 = m.bundle().H0;
        o.require(h0.dim == std::vector<std::size_t>{1, 0, 1, 0}, "H0 dimension vector " + h0.dim_str());
        o.require(is_isomorphic(h0, direct_sum(a, {simple(a, 0), simple(a, 2)})), "H0 isomorphic to S(1)+S(3)");
        CanonicalSequence cs = m.canonical_sequence(projective(a, 1));
        o.require(cs.tau.dim == std::vector<std::size_t>{0, 0, 1, 0} && is_isomorphic(cs.tau, simple(a, 2)),
                  "torsion part " + cs.tau.dim_str());
        o.require(cs.pi.dim == std::vector<std::size_t>{0, 1, 0, 0} && is_isomorphic(cs.pi, simple(a, 1)),
                  "torsion-free part " + cs.pi.dim_str());
    });

    run(3, "(0 -> A) is tilting with pair (mod A, 0) on every fixture algebra", [](Outcome& o) {
        std::vector<std::pair<AlgPtr, std::vector<std::size_t>>> algs{
            {one_vertex(Field::rationals()), {}}, {a2(Field::rationals()), {}},
            {a2(Field::prime(2)), {1, 2}},       {cycle4(Field::prime(2)), {2, 2, 2, 2}},
            {cycle4(Field::prime(3)), {1, 1, 1, 1}}, {a3_rad2(Field::rationals()), {}},
            {kronecker(Field::prime(2)), {1, 2}}};
        for (const auto& [a, bound] : algs) {
            Membership m(free_complex(a));
            std::vector<Rep> universe;
            const bool finite = a->field().is_finite();
            universe = finite ? enumerate(a, bound, default_budget()).reps : small_universe(a, {});
            TiltingVerdict v = is_tilting(m, finite ? &universe : nullptr);
            o.require(v.overall == Verdict::verified, "free complex verified over " + a->field().name());
            for (const Rep& x : universe) {
                o.require(m.in_X(x), "module " + x.dim_str() + " in X");
                o.require(m.in_Y(x) == x.is_zero(), "only zero in Y, module " + x.dim_str());
            }
        }
    });

    run(4, "A2 tilting complex rebuilt from H0 and H-1 of its Nakayama image is add-equal to itself", [](Outcome& o) {
        auto t0 = Clock::now();
        for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
            auto a = a2(f);
            TwoTermComplex p = a2_tilt(a);
            Membership m(p);
            const bool finite = f.is_finite();
            std::vector<Rep> universe = finite ? enumerate(a, default_bound(a), default_budget()).reps
                                               : small_universe(a, {m.bundle().H0, m.bundle().Hminus1_nu});
            o.require(is_tilting(m, finite ? &universe : nullptr).overall == Verdict::verified,
                      "original verified over " + f.name());
            ConstructReport c = construct_from_torsion(m.bundle().H0, m.bundle().Hminus1_nu, universe, finite);
            o.require(add_equal(c.complex, p), "add_equal over " + f.name());
            o.require(c.x_mismatches == 0 && c.y_mismatches == 0, "classes agree over " + f.name());
        }
        o.require(elapsed_ms(t0) < 5000, "runtime under 5 s");
    });

    run(5, "homological identities on random (algebra, complex, module) triples over F2, F3, Q", [](Outcome& o) {
        std::mt19937_64 rng(20261016);
        std::vector<std::function<AlgPtr(Field)>> makers{one_vertex, a2, cycle4, a3_rad2, kronecker};
        std::vector<Identity> ids{{"ker Hom(d,X) = degree-0 homotopy classes"},
                                  {"coker Hom(d,X) = degree-1 homotopy classes"},
                                  {"homotopy classes vanish in degrees -1 and 2"},
                                  {"degree-0 classes = Hom(H0, X)"},
                                  {"degree-1 classes = H1dual (x) X"},
                                  {"dual of H1dual = H-1 of the Nakayama image"},
                                  {"H1dual (x) X = Hom(X, H-1 nu)"},
                                  {"Tor1(H1dual, X) = Ext1(X, H-1 nu)"},
                                  {"X in X-class => Ext1(H0, X) = 0"},
                                  {"X in Y-class => Tor1(H1dual, X) = 0"},
                                  {"H0 in X iff no shift-1 classes"},
                                  {"H-1 in Y iff no shift-(-1) classes"}};
        auto record = [&](std::size_t i, bool ok) {
            ++ids[i].checked;
            if (!ok) ++ids[i].failed;
        };
        std::size_t triples = 0;
        for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()})
            for (auto& make : makers) {
                AlgPtr a = make(f);
                std::vector<Rep> pool = module_pool(a, rng);
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                for (int k = 0; k < 4; ++k) {
                    TwoTermComplex p = random_complex(a, rng);
                    RealizedComplex rc = realize(p);
                    Membership m(p);
                    const CohomologyBundle& b = m.bundle();
                    record(5, is_isomorphic(dualize(b.H1dual), b.Hminus1_nu));
                    record(10, m.in_X(b.H0) == (hom_homotopy(p, p, 1).dim == 0));
                    record(11, m.in_Y(b.Hminus1) == (hom_homotopy(p, p, -1).dim == 0));
                    for (int t = 0; t < 4; ++t) {
                        const Rep& x = pool[pick(rng)];
                        ++triples;
                        ModuleComplex sx = stalk(x);
                        std::size_t rank = precompose_rank(rc, x);
                        std::size_t h0 = hom_homotopy(p, sx, 0).dim, h1 = hom_homotopy(p, sx, 1).dim;
                        record(0, h0 == hom_dim(rc.zero.rep, x) - rank);
                        record(1, h1 == hom_dim(rc.minus1.rep, x) - rank);
                        record(2, hom_homotopy(p, sx, -1).dim == 0 && hom_homotopy(p, sx, 2).dim == 0);
                        record(3, h0 == hom_dim(b.H0, x));
                        std::size_t tens = tensor_over_A(b.H1dual, x).dim;
                        record(4, h1 == tens);
                        record(6, tens == hom_dim(x, b.Hminus1_nu));
                        record(7, tor1(b.H1dual, x) == ext1(x, b.Hminus1_nu));
                        if (m.in_X(x)) record(8, ext1(b.H0, x) == 0);
                        if (m.in_Y(x)) record(9, tor1(b.H1dual, x) == 0);
                    }
                }
            }
        o.require(triples >= 200, "at least 200 triples, got " + std::to_string(triples));
        o.notes.push_back(std::to_string(triples) + " triples");
        for (auto& id : ids) {
            o.require(id.checked > 0, id.name + " never exercised");
            o.require(id.failed == 0, id.name + ": " + std::to_string(id.failed) + " of " + std::to_string(id.checked));
        }
    });

    run(6, "equivalences round trip on X and Y for the A2 tilting complex and a searched 4-cycle complex",
        [](Outcome& o) {
            auto t0 = Clock::now();
            auto check = [&](const TwoTermComplex& p, const std::vector<Rep>& universe, const std::string& label) {
                Membership m(p);
                o.require(is_tilting(m, &universe).overall == Verdict::verified, label + " verified tilting");
                EndoAlgebra b = endomorphism_algebra(p);
                RoundTripReport r = bb_round_trips(b, m, universe);
                o.require(r.ok(), label + " round trips");
                for (auto& f : r.failures) o.notes.push_back(label + ": " + f);
                o.notes.push_back(label + ": " + std::to_string(r.x_members) + " in X, " +
                                  std::to_string(r.y_members) + " in Y");
            };
            auto a = a2(Field::prime(2));
            check(a2_tilt(a), enumerate(a, {2, 2}, default_budget()).reps, "A2");
            auto c = cycle4(Field::prime(2));
            auto found = search_tilting(c);
            o.require(found.has_value(), "search found a complex");
            if (found) {
                o.require(!add_equal(*found, free_complex(c)), "searched complex differs from A");
                check(*found, enumerate(c, {2, 2, 2, 2}, default_budget()).reps, "4-cycle");
            }
            o.require(elapsed_ms(t0) < 60000, "runtime under 60 s");
        });

    run(7, "every verified tilting complex over A2 is splitting", [](Outcome& o) {
        for (Field f : {Field::prime(2), Field::prime(3)}) {
            auto a = a2(f);
            auto universe = enumerate(a, default_bound(a), default_budget()).reps;
            auto cands = elementary_complexes(a);
            std::size_t verified = 0;
            for (std::size_t i = 0; i < cands.size(); ++i)
                for (std::size_t j = i + 1; j < cands.size(); ++j) {
                    Membership m(direct_sum({cands[i], cands[j]}));
                    if (is_tilting(m, &universe).overall != Verdict::verified) continue;
                    ++verified;
                    o.require(is_splitting(m, true, universe, universe).splitting, "splitting over " + f.name());
                }
            o.require(verified >= 3, "found " + std::to_string(verified) + " tilting complexes over " + f.name());
            o.notes.push_back(std::to_string(verified) + " tilting complexes over " + f.name());
        }
    });

    run(8, "A2 over F2 at bound (1,1) has exactly 5 isomorphism classes", [](Outcome& o) {
        auto inv = enumerate(a2(Field::prime(2)), {1, 1}, default_budget());
        o.require(inv.reps.size() == 5, "got " + std::to_string(inv.reps.size()));
    });

    std::cout << (failures == 0 ? "all criteria pass\n" : std::to_string(failures) + " criteria fail\n");
    return failures == 0 ? 0 : 1;
}
