#include "tilt/proj.hpp"

#include <stdexcept>

namespace tilt {

ProjSum realize_projectives(const AlgPtr& a, const std::vector<int>& verts) {
    ProjSum p;
    p.alg = a;
    p.verts = verts;
    std::vector<Rep> parts;
    const int V = a->vertices();
    std::vector<std::size_t> used(V, 0);
    for (int v : verts) {
        if (v < 0 || v >= V) throw std::out_of_range("projective vertex out of range");
        parts.push_back(projective(a, v));
        std::vector<std::size_t> loc(a->dim(), SIZE_MAX);
        for (int u = 0; u < V; ++u) {
            const auto& bs = a->between(v, u);
            for (std::size_t i = 0; i < bs.size(); ++i) loc[bs[i]] = used[u] + i;
            used[u] += bs.size();
        }
        p.local.push_back(std::move(loc));
    }
    p.rep = direct_sum(a, parts);
    return p;
}

ModuleMap realize_entries(const ProjSum& from, const ProjSum& to, const std::vector<Elem>& entries) {
    const AlgPtr& a = from.alg;
    if (entries.size() != to.verts.size() * from.verts.size())
        throw std::invalid_argument("realize_entries: entry count mismatch");
    ModuleMap f = zero_map(from.rep, to.rep);
    const std::size_t C = from.verts.size();
    for (std::size_t c = 0; c < C; ++c) {
        const int w = from.verts[c];
        for (int u = 0; u < a->vertices(); ++u)
            for (std::size_t b : a->between(w, u))
                for (std::size_t r = 0; r < to.verts.size(); ++r) {
                    const Elem& e = entries[r * C + c];
                    for (std::size_t k = 0; k < e.size(); ++k) {
                        if (e[k].is_zero()) continue;
                        for (auto& [res, s] : a->mul_basis(b, k))
                            f.comp[u].at(to.local[r][res], from.local[c][b]) += e[k] * s;
                    }
                }
    }
    return f;
}

ModuleMap yoneda_map(const ProjSum& from, const Rep& target, const std::vector<Vec>& images) {
    const AlgPtr& a = from.alg;
    ModuleMap f = zero_map(from.rep, target);
    for (std::size_t r = 0; r < from.verts.size(); ++r) {
        const int v = from.verts[r];
        for (int u = 0; u < a->vertices(); ++u)
            for (std::size_t b : a->between(v, u)) {
                Vec img = target.act_basis(b).apply(images[r]);
                for (std::size_t i = 0; i < img.size(); ++i) f.comp[u].at(i, from.local[r][b]) = img[i];
            }
    }
    return f;
}

std::vector<Elem> vector_to_entries(const ProjSum& p, int u, const Vec& v) {
    std::vector<Elem> out;
    for (std::size_t r = 0; r < p.verts.size(); ++r) {
        Elem e = p.alg->zero();
        for (std::size_t b : p.alg->between(p.verts[r], u)) e[b] = v[p.local[r][b]];
        out.push_back(std::move(e));
    }
    return out;
}

Vec entries_to_vector(const ProjSum& p, int u, const std::vector<Elem>& e) {
    Vec v = zero_vec(p.alg->field(), p.rep.dim[u]);
    for (std::size_t r = 0; r < p.verts.size(); ++r)
        for (std::size_t b : p.alg->between(p.verts[r], u)) v[p.local[r][b]] = e[r][b];
    return v;
}

void TwoTermComplex::validate() const {
    if (d.size() != zero.size() * minus1.size()) throw std::invalid_argument("differential has the wrong size");
    for (int v : minus1)
        if (v < 0 || v >= alg->vertices()) throw std::out_of_range("summand vertex out of range");
    for (int v : zero)
        if (v < 0 || v >= alg->vertices()) throw std::out_of_range("summand vertex out of range");
    for (std::size_t r = 0; r < zero.size(); ++r)
        for (std::size_t c = 0; c < minus1.size(); ++c)
            if (!alg->in_corner(entry(r, c), zero[r], minus1[c]))
                throw std::invalid_argument("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                            ") is not a combination of paths from vertex " +
                                            std::to_string(zero[r] + 1) + " to vertex " +
                                            std::to_string(minus1[c] + 1));
}

TwoTermComplex make_complex(const AlgPtr& a, std::vector<int> minus1, std::vector<int> zero) {
    TwoTermComplex p;
    p.alg = a;
    p.minus1 = std::move(minus1);
    p.zero = std::move(zero);
    p.d.assign(p.minus1.size() * p.zero.size(), a->zero());
    return p;
}

TwoTermComplex stalk_projective(const AlgPtr& a, const std::vector<int>& verts) { return make_complex(a, {}, verts); }

TwoTermComplex free_complex(const AlgPtr& a) {
    std::vector<int> all;
    for (int v = 0; v < a->vertices(); ++v) all.push_back(v);
    return stalk_projective(a, all);
}

TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of an empty list of complexes");
    std::vector<int> m1, z;
    for (auto& p : parts) {
        m1.insert(m1.end(), p.minus1.begin(), p.minus1.end());
        z.insert(z.end(), p.zero.begin(), p.zero.end());
    }
    TwoTermComplex s = make_complex(parts.front().alg, m1, z);
    std::size_t r0 = 0, c0 = 0;
    for (auto& p : parts) {
        for (std::size_t r = 0; r < p.zero.size(); ++r)
            for (std::size_t c = 0; c < p.minus1.size(); ++c) s.entry(r0 + r, c0 + c) = p.entry(r, c);
        r0 += p.zero.size();
        c0 += p.minus1.size();
    }
    return s;
}

std::vector<Elem> compose_entries(const AlgPtr& a, const std::vector<Elem>& g, std::size_t g_rows,
                                  const std::vector<Elem>& f, std::size_t f_rows, std::size_t f_cols) {
    std::vector<Elem> h(g_rows * f_cols, a->zero());
    for (std::size_t t = 0; t < g_rows; ++t)
        for (std::size_t r = 0; r < f_cols; ++r)
            for (std::size_t s = 0; s < f_rows; ++s)
                h[t * f_cols + r] = elem_add(h[t * f_cols + r], a->mul(f[s * f_cols + r], g[t * f_rows + s]));
    return h;
}

// ---------------------------------------------------------------- covers and presentations

Cover projective_cover(const Rep& m) {
    const Field f = m.alg->field();
    Subspace rad = radical_subspace(m);
    std::vector<int> verts;
    std::vector<Vec> images;
    for (int v = 0; v < m.alg->vertices(); ++v) {
        Matrix comp = quotient_by(rad[v], m.dim[v], f).complement;
        for (std::size_t j = 0; j < comp.cols(); ++j) {
            verts.push_back(v);
            images.push_back(comp.col(j));
        }
    }
    Cover c;
    c.proj = realize_projectives(m.alg, verts);
    c.map = yoneda_map(c.proj, m, images);
    return c;
}

Envelope injective_envelope(const Rep& m) {
    Cover c = projective_cover(dualize(m));
    Envelope e;
    e.verts = c.proj.verts;
    e.inj = dualize(c.proj.rep);
    e.map = dualize_map(c.map);
    return e;
}

TwoTermComplex min_proj_presentation(const Rep& m) {
    Cover c0 = projective_cover(m);
    SubModule k = kernel(c0.proj.rep, m, c0.map);
    Cover c1 = projective_cover(k.rep);
    TwoTermComplex p = make_complex(m.alg, c1.proj.verts, c0.proj.verts);
    // generator j of the syzygy, written in the coordinates of P^0
    for (std::size_t j = 0; j < c1.proj.verts.size(); ++j) {
        const int u = c1.proj.verts[j];
        Vec gen_in_k = c1.map.comp[u].col(c1.proj.local[j][m.alg->between(u, u).front()]);
        Vec gen = k.incl.comp[u].apply(gen_in_k);
        auto entries = vector_to_entries(c0.proj, u, gen);
        for (std::size_t r = 0; r < entries.size(); ++r) p.entry(r, j) = entries[r];
    }
    return p;
}

InjectivePresentation min_inj_presentation(const Rep& m) {
    InjectivePresentation ip;
    ip.dual_presentation = min_proj_presentation(dualize(m));
    const auto& dp = ip.dual_presentation;
    ProjSum p1 = realize_projectives(dp.alg, dp.minus1);
    ProjSum p0 = realize_projectives(dp.alg, dp.zero);
    ModuleMap d = realize_entries(p1, p0, dp.d);
    ip.i0 = dualize(p0.rep);
    ip.i1 = dualize(p1.rep);
    ip.d = dualize_map(d);
    return ip;
}

// ---------------------------------------------------------------- Ext / Tor

namespace {

std::size_t ext_via_syzygy(const Rep& m, const Rep& n, int level) {
    if (!same_algebra(m.alg, n.alg)) throw std::invalid_argument("ext: modules over different algebras");
    Rep cur = m;
    Cover c = projective_cover(cur);
    SubModule k = kernel(c.proj.rep, cur, c.map);
    for (int l = 1; l < level; ++l) {
        cur = k.rep;
        c = projective_cover(cur);
        k = kernel(c.proj.rep, cur, c.map);
    }
    const Field f = m.alg->field();
    std::vector<Vec> restricted;
    for (std::size_t r = 0; r < c.proj.verts.size(); ++r) {
        const int v = c.proj.verts[r];
        for (std::size_t e = 0; e < n.dim[v]; ++e) {
            std::vector<Vec> images;
            for (std::size_t r2 = 0; r2 < c.proj.verts.size(); ++r2)
                images.push_back(zero_vec(f, n.dim[c.proj.verts[r2]]));
            images[r][e] = Scalar::one(f);
            ModuleMap phi = compose(yoneda_map(c.proj, n, images), k.incl);
            Vec flat;
            for (auto& mat : phi.comp) flat.insert(flat.end(), mat.data().begin(), mat.data().end());
            restricted.push_back(std::move(flat));
        }
    }
    std::size_t flat_len = 0;
    for (int v = 0; v < m.alg->vertices(); ++v) flat_len += n.dim[v] * k.rep.dim[v];
    std::size_t rank = from_columns(restricted, f, flat_len).rank();
    return hom_dim(k.rep, n) - rank;
}

}  // namespace

std::size_t ext1(const Rep& m, const Rep& n) { return ext_via_syzygy(m, n, 1); }
std::size_t ext2(const Rep& m, const Rep& n) { return ext_via_syzygy(m, n, 2); }

std::size_t tor1(const Rep& right, const Rep& left) {
    Cover c = projective_cover(left);
    SubModule k = kernel(c.proj.rep, left, c.map);
    TensorResult t1 = tensor_over_A(right, k.rep);
    TensorResult t0 = tensor_over_A(right, c.proj.rep);
    Matrix m = tensor_map(right, k.rep, t1, right, c.proj.rep, t0, identity_map(right), k.incl);
    return t1.dim - m.rank();
}

std::size_t tor1_via_right(const Rep& right, const Rep& left) {
    Cover c = projective_cover(right);
    SubModule k = kernel(c.proj.rep, right, c.map);
    TensorResult t1 = tensor_over_A(k.rep, left);
    TensorResult t0 = tensor_over_A(c.proj.rep, left);
    Matrix m = tensor_map(k.rep, left, t1, c.proj.rep, left, t0, k.incl, identity_map(left));
    return t1.dim - m.rank();
}

}  // namespace tilt
