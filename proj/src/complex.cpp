#include "tilt/complex.hpp"

#include "tilt/matalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilt {

RealizedComplex realize(const TwoTermComplex& p) {
    RealizedComplex r;
    r.minus1 = realize_projectives(p.alg, p.minus1);
    r.zero = realize_projectives(p.alg, p.zero);
    r.d = realize_entries(r.minus1, r.zero, p.d);
    return r;
}

ModuleComplex stalk(const Rep& x) {
    ModuleComplex c;
    c.minus1 = zero_module(x.alg);
    c.zero = x;
    c.d = zero_map(c.minus1, x);
    return c;
}

ModuleComplex as_module_complex(const RealizedComplex& r) { return {r.minus1.rep, r.zero.rep, r.d}; }

TwoTermComplex a_dual(const TwoTermComplex& p) {
    TwoTermComplex q = make_complex(opposite(p.alg), p.zero, p.minus1);
    for (std::size_t r = 0; r < p.zero.size(); ++r)
        for (std::size_t c = 0; c < p.minus1.size(); ++c) q.entry(c, r) = p.entry(r, c);
    return q;
}

InjectiveComplex nakayama_complex(const TwoTermComplex& p) {
    RealizedComplex rd = realize(a_dual(p));
    InjectiveComplex n;
    n.minus1 = p.minus1;
    n.zero = p.zero;
    n.i_minus1 = dualize(rd.zero.rep);
    n.i_zero = dualize(rd.minus1.rep);
    n.d = dualize_map(rd.d);
    return n;
}

CohomologyBundle cohomology(const TwoTermComplex& p) {
    CohomologyBundle b;
    RealizedComplex r = realize(p);
    b.H0_quotient = cokernel(r.minus1.rep, r.zero.rep, r.d);
    b.Hminus1_sub = kernel(r.minus1.rep, r.zero.rep, r.d);
    RealizedComplex rd = realize(a_dual(p));
    b.H1dual_quotient = cokernel(rd.minus1.rep, rd.zero.rep, rd.d);
    InjectiveComplex n = nakayama_complex(p);
    b.H0 = b.H0_quotient.rep;
    b.Hminus1 = b.Hminus1_sub.rep;
    b.H1dual = b.H1dual_quotient.rep;
    b.Hminus1_nu = kernel(n.i_minus1, n.i_zero, n.d).rep;
    return b;
}

// ---------------------------------------------------------------- homotopy Hom

namespace {

std::size_t yoneda_len(const std::vector<int>& verts, const Rep& t) {
    std::size_t n = 0;
    for (int v : verts) n += t.dim[v];
    return n;
}

// phi: P^0 -> T  |->  phi o d : P^{-1} -> T, in Yoneda coordinates.
Matrix precompose_d(const TwoTermComplex& p, const Rep& t) {
    const Field f = p.alg->field();
    Matrix m(f, yoneda_len(p.minus1, t), yoneda_len(p.zero, t));
    std::size_t ro = 0;
    for (std::size_t c = 0; c < p.minus1.size(); ++c) {
        std::size_t co = 0;
        for (std::size_t r = 0; r < p.zero.size(); ++r) {
            m.set_block(ro, co, t.act(p.entry(r, c), p.zero[r], p.minus1[c]));
            co += t.dim[p.zero[r]];
        }
        ro += t.dim[p.minus1[c]];
    }
    return m;
}

// phi: P -> T  |->  g o phi : P -> T'.
Matrix postcompose(const ModuleMap& g, const Rep& from, const Rep& to, const std::vector<int>& verts) {
    const Field f = from.alg->field();
    Matrix m(f, yoneda_len(verts, to), yoneda_len(verts, from));
    std::size_t ro = 0, co = 0;
    for (int v : verts) {
        m.set_block(ro, co, g.comp[v]);
        ro += to.dim[v];
        co += from.dim[v];
    }
    return m;
}

}  // namespace

HomClasses hom_homotopy(const TwoTermComplex& p, const ModuleComplex& q, int shift) {
    if (!same_algebra(p.alg, q.zero.alg)) throw std::invalid_argument("hom_homotopy: different algebras");
    const Field f = p.alg->field();
    HomClasses h;
    h.shift = shift;
    Matrix bd;
    if (shift == 0) {
        const std::size_t n1 = yoneda_len(p.minus1, q.minus1), n0 = yoneda_len(p.zero, q.zero);
        h.coord_len = n1 + n0;
        Matrix lhs = postcompose(q.d, q.minus1, q.zero, p.minus1);
        Matrix rhs = precompose_d(p, q.zero);
        Matrix eq = Matrix::hstack({lhs, rhs.scaled(-Scalar::one(f))}, f, lhs.rows());
        h.cycles = nullspace_basis(eq);
        bd = Matrix::vstack({precompose_d(p, q.minus1), postcompose(q.d, q.minus1, q.zero, p.zero)}, f,
                            yoneda_len(p.zero, q.minus1));
    } else if (shift == 1) {
        h.coord_len = yoneda_len(p.minus1, q.zero);
        for (std::size_t i = 0; i < h.coord_len; ++i) {
            Vec e = zero_vec(f, h.coord_len);
            e[i] = Scalar::one(f);
            h.cycles.push_back(std::move(e));
        }
        bd = Matrix::hstack({precompose_d(p, q.zero), postcompose(q.d, q.minus1, q.zero, p.minus1)}, f, h.coord_len);
    } else if (shift == -1) {
        h.coord_len = yoneda_len(p.zero, q.minus1);
        Matrix eq = Matrix::vstack({postcompose(q.d, q.minus1, q.zero, p.zero), precompose_d(p, q.minus1)}, f,
                                   h.coord_len);
        h.cycles = nullspace_basis(eq);
        bd = Matrix(f, h.coord_len, 0);
    } else {
        h.note = "zero for degree reasons";
        h.boundaries = Matrix(f, 0, 0);
        return h;
    }
    h.boundaries = column_space(bd);
    const std::size_t b = h.boundaries.cols();
    std::vector<Matrix> parts{h.boundaries, from_columns(h.cycles, f, h.coord_len)};
    RrefResult rr = rref(Matrix::hstack(parts, f, h.coord_len));
    for (std::size_t piv : rr.pivots)
        if (piv >= b) h.representatives.push_back(h.cycles[piv - b]);
    h.dim = h.representatives.size();
    return h;
}

HomClasses hom_homotopy(const TwoTermComplex& p, const TwoTermComplex& q, int shift) {
    return hom_homotopy(p, as_module_complex(realize(q)), shift);
}

Vec class_coordinates(const HomClasses& h, const Vec& chain_map) {
    const Field f = chain_map.empty() ? h.boundaries.field() : chain_map.front().field();
    Matrix m = Matrix::hstack({from_columns(h.representatives, f, h.coord_len), h.boundaries}, f, h.coord_len);
    auto x = solve(m, chain_map);
    if (!x) throw std::logic_error("class_coordinates: not a chain map");
    return Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h.dim));
}

// ---------------------------------------------------------------- chain maps as A-matrices

ChainMap chain_map_from_coordinates(const TwoTermComplex& p, const TwoTermComplex& q, const Vec& coords) {
    ProjSum qm1 = realize_projectives(q.alg, q.minus1), q0 = realize_projectives(q.alg, q.zero);
    ChainMap m;
    m.minus1.assign(q.minus1.size() * p.minus1.size(), p.alg->zero());
    m.zero.assign(q.zero.size() * p.zero.size(), p.alg->zero());
    std::size_t o = 0;
    auto fill = [&](const ProjSum& target, const std::vector<int>& src, std::vector<Elem>& out) {
        for (std::size_t c = 0; c < src.size(); ++c) {
            const std::size_t len = target.rep.dim[src[c]];
            Vec v(coords.begin() + static_cast<std::ptrdiff_t>(o), coords.begin() + static_cast<std::ptrdiff_t>(o + len));
            auto col = vector_to_entries(target, src[c], v);
            for (std::size_t r = 0; r < col.size(); ++r) out[r * src.size() + c] = col[r];
            o += len;
        }
    };
    fill(qm1, p.minus1, m.minus1);
    fill(q0, p.zero, m.zero);
    return m;
}

Vec chain_map_coordinates(const TwoTermComplex& p, const TwoTermComplex& q, const ChainMap& f) {
    ProjSum qm1 = realize_projectives(q.alg, q.minus1), q0 = realize_projectives(q.alg, q.zero);
    Vec out;
    auto emit = [&](const ProjSum& target, const std::vector<int>& src, const std::vector<Elem>& m) {
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::vector<Elem> col;
            for (std::size_t r = 0; r < target.verts.size(); ++r) col.push_back(m[r * src.size() + c]);
            Vec v = entries_to_vector(target, src[c], col);
            out.insert(out.end(), v.begin(), v.end());
        }
    };
    emit(qm1, p.minus1, f.minus1);
    emit(q0, p.zero, f.zero);
    return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f, const TwoTermComplex& src, const TwoTermComplex& mid,
                 const TwoTermComplex& tgt) {
    const AlgPtr& a = src.alg;
    ChainMap h;
    h.minus1 = compose_entries(a, g.minus1, tgt.minus1.size(), f.minus1, mid.minus1.size(), src.minus1.size());
    h.zero = compose_entries(a, g.zero, tgt.zero.size(), f.zero, mid.zero.size(), src.zero.size());
    return h;
}

ChainMap identity_chain_map(const TwoTermComplex& p) {
    ChainMap m;
    m.minus1.assign(p.minus1.size() * p.minus1.size(), p.alg->zero());
    m.zero.assign(p.zero.size() * p.zero.size(), p.alg->zero());
    for (std::size_t i = 0; i < p.minus1.size(); ++i) m.minus1[i * p.minus1.size() + i] = p.alg->vertex(p.minus1[i]);
    for (std::size_t i = 0; i < p.zero.size(); ++i) m.zero[i * p.zero.size() + i] = p.alg->vertex(p.zero[i]);
    return m;
}

bool is_chain_map(const TwoTermComplex& p, const TwoTermComplex& q, const ChainMap& f) {
    const AlgPtr& a = p.alg;
    for (std::size_t r = 0; r < q.minus1.size(); ++r)
        for (std::size_t c = 0; c < p.minus1.size(); ++c)
            if (!a->in_corner(f.minus1[r * p.minus1.size() + c], q.minus1[r], p.minus1[c])) return false;
    for (std::size_t r = 0; r < q.zero.size(); ++r)
        for (std::size_t c = 0; c < p.zero.size(); ++c)
            if (!a->in_corner(f.zero[r * p.zero.size() + c], q.zero[r], p.zero[c])) return false;
    auto lhs = compose_entries(a, q.d, q.zero.size(), f.minus1, q.minus1.size(), p.minus1.size());
    auto rhs = compose_entries(a, f.zero, q.zero.size(), p.d, p.zero.size(), p.minus1.size());
    return lhs == rhs;
}

// ---------------------------------------------------------------- splitting

bool is_contractible(const TwoTermComplex& p) {
    RealizedComplex r = realize(p);
    return cokernel(r.minus1.rep, r.zero.rep, r.d).rep.is_zero() &&
           kernel(r.minus1.rep, r.zero.rep, r.d).rep.is_zero();
}

namespace {

struct Generators {
    std::vector<int> verts;
    std::vector<Vec> vecs;  // in the ambient module, at vertex verts[i]
};

// Top generators of a (projective) submodule.
Generators top_generators(const Rep& ambient, const Subspace& s) {
    const Field f = ambient.alg->field();
    SubModule sub = restrict_to(ambient, s);
    Subspace rad = radical_subspace(sub.rep);
    Generators g;
    for (int v = 0; v < ambient.alg->vertices(); ++v) {
        Matrix comp = quotient_by(rad[v], sub.rep.dim[v], f).complement;
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            g.verts.push_back(v);
            g.vecs.push_back(sub.incl.comp[v].apply(comp.col(j)));
        }
    }
    return g;
}

// The subcomplex cut out by summand subspaces of the realized terms, written in A-matrix form.
TwoTermComplex extract(const TwoTermComplex& p, const RealizedComplex& r, const Subspace& s_m1, const Subspace& s_0) {
    const AlgPtr& a = p.alg;
    const Field f = a->field();
    Generators gm1 = top_generators(r.minus1.rep, s_m1);
    Generators g0 = top_generators(r.zero.rep, s_0);
    TwoTermComplex q = make_complex(a, gm1.verts, g0.verts);
    for (std::size_t c = 0; c < gm1.verts.size(); ++c) {
        const int w = gm1.verts[c];
        Vec target = r.d.comp[w].apply(gm1.vecs[c]);
        std::vector<Vec> cols;
        std::vector<std::pair<std::size_t, std::size_t>> who;
        for (std::size_t row = 0; row < g0.verts.size(); ++row)
            for (std::size_t b : a->between(g0.verts[row], w)) {
                cols.push_back(r.zero.rep.act_basis(b).apply(g0.vecs[row]));
                who.emplace_back(row, b);
            }
        auto x = solve(from_columns(cols, f, r.zero.rep.dim[w]), target);
        if (!x) throw std::logic_error("summand extraction: differential leaves the summand");
        for (std::size_t k = 0; k < who.size(); ++k) q.entry(who[k].first, c)[who[k].second] = (*x)[k];
    }
    return q;
}

struct ChainEndos {
    RealizedComplex r;
    std::vector<Matrix> total;  // block diagonal on P^{-1} + P^0
};

ChainEndos chain_endomorphisms(const TwoTermComplex& p) {
    ChainEndos e;
    e.r = realize(p);
    const Field f = p.alg->field();
    HomClasses h = hom_homotopy(p, as_module_complex(e.r), 0);
    const std::size_t t1 = e.r.minus1.rep.total(), t0 = e.r.zero.rep.total();
    for (const Vec& cyc : h.cycles) {
        ChainMap m = chain_map_from_coordinates(p, p, cyc);
        ModuleMap m1 = realize_entries(e.r.minus1, e.r.minus1, m.minus1);
        ModuleMap m0 = realize_entries(e.r.zero, e.r.zero, m.zero);
        Matrix t(f, t1 + t0, t1 + t0);
        t.set_block(0, 0, total_matrix(e.r.minus1.rep, e.r.minus1.rep, m1));
        t.set_block(t1, t1, total_matrix(e.r.zero.rep, e.r.zero.rep, m0));
        e.total.push_back(std::move(t));
    }
    return e;
}

void split_complex(const TwoTermComplex& p, std::uint64_t seed, std::vector<TwoTermComplex>& out) {
    if (p.minus1.empty() && p.zero.empty()) return;
    const Field f = p.alg->field();
    ChainEndos e = chain_endomorphisms(p);
    std::vector<Matrix> rad = radical_basis(e.total, f);
    std::optional<Matrix> psi;
    if (e.total.size() - rad.size() > 1) psi = find_splitting_element(e.total, rad, f, seed);
    if (!psi) {
        if (!is_contractible(p)) out.push_back(p);
        return;
    }
    Matrix big = matrix_power(*psi, psi->rows());
    const std::size_t t1 = e.r.minus1.rep.total();
    Subspace k1, i1, k0, i0;
    auto cut = [&](const Rep& m, std::size_t base, Subspace& ker, Subspace& img) {
        for (int v = 0; v < p.alg->vertices(); ++v) {
            const std::size_t o = base + m.offset(v), d = m.dim[v];
            Matrix blk = big.block(o, o, d, d);
            ker.push_back(from_columns(nullspace_basis(blk), f, d));
            img.push_back(column_space(blk));
        }
    };
    cut(e.r.minus1.rep, 0, k1, i1);
    cut(e.r.zero.rep, t1, k0, i0);
    split_complex(extract(p, e.r, k1, k0), seed + 1, out);
    split_complex(extract(p, e.r, i1, i0), seed + 2, out);
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<TwoTermComplex> complex_summands(const TwoTermComplex& p, std::uint64_t seed) {
    std::vector<TwoTermComplex> out;
    split_complex(p, seed, out);
    return out;
}

bool complexes_isomorphic(const TwoTermComplex& p, const TwoTermComplex& q, std::uint64_t seed) {
    if (!same_algebra(p.alg, q.alg)) throw std::invalid_argument("complexes over different algebras");
    if (sorted(p.minus1) != sorted(q.minus1) || sorted(p.zero) != sorted(q.zero)) return false;
    if (p.minus1.empty() && p.zero.empty()) return true;
    RealizedComplex rp = realize(p), rq = realize(q);
    HomClasses h = hom_homotopy(p, as_module_complex(rq), 0);
    std::vector<std::vector<Matrix>> blocks;
    for (const Vec& cyc : h.cycles) {
        ChainMap m = chain_map_from_coordinates(p, q, cyc);
        std::vector<Matrix> parts = realize_entries(rp.minus1, rq.minus1, m.minus1).comp;
        for (Matrix& x : realize_entries(rp.zero, rq.zero, m.zero).comp) parts.push_back(std::move(x));
        blocks.push_back(std::move(parts));
    }
    return find_invertible(blocks, p.alg->field(), seed);
}

std::vector<TwoTermComplex> distinct_summands(const TwoTermComplex& p, std::uint64_t seed) {
    std::vector<TwoTermComplex> out;
    for (auto& s : complex_summands(p, seed)) {
        bool seen = false;
        for (auto& t : out)
            if (complexes_isomorphic(s, t, seed)) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(s);
    }
    return out;
}

bool add_equal(const TwoTermComplex& p, const TwoTermComplex& q, std::uint64_t seed) {
    auto sp = distinct_summands(p, seed), sq = distinct_summands(q, seed);
    if (sp.size() != sq.size()) return false;
    for (auto& s : sp) {
        bool found = false;
        for (auto& t : sq)
            if (complexes_isomorphic(s, t, seed)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace tilt
