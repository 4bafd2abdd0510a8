#include "tilt/module.hpp"

#include <stdexcept>

namespace tilt {

std::size_t Rep::total() const {
    std::size_t t = 0;
    for (auto d : dim) t += d;
    return t;
}

std::size_t Rep::offset(int v) const {
    std::size_t t = 0;
    for (int u = 0; u < v; ++u) t += dim[u];
    return t;
}

Matrix Rep::act_basis(std::size_t b) const {
    const Path& p = alg->basis_path(b);
    Matrix m = Matrix::identity(alg->field(), dim[p.src]);
    for (int a : p.arrows) m = maps[a] * m;
    return m;
}

Matrix Rep::act(const Elem& x, int from, int to) const {
    Matrix m(alg->field(), dim[to], dim[from]);
    for (std::size_t b : alg->between(from, to))
        if (!x[b].is_zero()) m = m + act_basis(b).scaled(x[b]);
    return m;
}

void Rep::validate() const {
    const Quiver& q = alg->quiver();
    if (dim.size() != static_cast<std::size_t>(q.n)) throw std::invalid_argument("dimension vector has wrong length");
    if (maps.size() != q.arrows.size()) throw std::invalid_argument("wrong number of arrow matrices");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const Matrix& m = maps[a];
        if (m.rows() != dim[q.arrows[a].tgt] || m.cols() != dim[q.arrows[a].src])
            throw std::invalid_argument("matrix for arrow " + q.arrows[a].name + " has the wrong shape");
        if (m.field() != alg->field()) throw std::invalid_argument("mixed field tags");
    }
    for (const Relation& r : alg->relations()) {
        const Path& p0 = r[0].path;
        Matrix sum(alg->field(), dim[p0.tgt], dim[p0.src]);
        for (const Term& t : r) {
            Matrix m = Matrix::identity(alg->field(), dim[p0.src]);
            for (int a : t.path.arrows) m = maps[a] * m;
            sum = sum + m.scaled(t.coeff);
        }
        if (!sum.is_zero()) throw std::invalid_argument("representation violates a relation");
    }
    if (!is_nilpotent_rep(*this)) throw std::invalid_argument("arrows do not act nilpotently");
}

bool is_nilpotent_rep(const Rep& m) {
    const Field f = m.alg->field();
    const auto& arrows = m.alg->quiver().arrows;
    std::vector<Matrix> layer;
    for (int v = 0; v < m.alg->vertices(); ++v) layer.push_back(Matrix::identity(f, m.dim[v]));
    for (std::size_t step = 0; step <= m.total(); ++step) {
        bool empty = true;
        for (auto& l : layer) empty = empty && l.cols() == 0;
        if (empty) return true;
        std::vector<std::vector<Matrix>> parts(layer.size());
        for (std::size_t k = 0; k < arrows.size(); ++k) parts[arrows[k].tgt].push_back(m.maps[k] * layer[arrows[k].src]);
        for (std::size_t v = 0; v < layer.size(); ++v) layer[v] = column_space(Matrix::hstack(parts[v], f, m.dim[v]));
    }
    return false;
}

std::string Rep::dim_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dim.size(); ++i) s += (i ? "," : "") + std::to_string(dim[i]);
    return s + ")";
}

Rep zero_module(const AlgPtr& a) {
    Rep m;
    m.alg = a;
    m.dim.assign(a->vertices(), 0);
    for (const Arrow& ar : a->quiver().arrows) {
        (void)ar;
        m.maps.emplace_back(a->field(), 0, 0);
    }
    return m;
}

Rep simple(const AlgPtr& a, int i) {
    if (i < 0 || i >= a->vertices()) throw std::out_of_range("vertex index out of range");
    Rep m = zero_module(a);
    m.dim[i] = 1;
    const auto& arrows = a->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        m.maps[k] = Matrix(a->field(), m.dim[arrows[k].tgt], m.dim[arrows[k].src]);
    return m;
}

Rep projective(const AlgPtr& a, int i) {
    if (i < 0 || i >= a->vertices()) throw std::out_of_range("vertex index out of range");
    Rep m;
    m.alg = a;
    const int n = a->vertices();
    for (int u = 0; u < n; ++u) m.dim.push_back(a->between(i, u).size());
    const auto& arrows = a->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const int s = arrows[k].src, t = arrows[k].tgt;
        const auto& cols = a->between(i, s);
        const auto& rows = a->between(i, t);
        Matrix mat(a->field(), rows.size(), cols.size());
        Elem ar = a->arrow(static_cast<int>(k));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Elem prod = a->mul(ar, a->basis_elem(cols[j]));
            for (std::size_t r = 0; r < rows.size(); ++r) mat.at(r, j) = prod[rows[r]];
        }
        m.maps.push_back(std::move(mat));
    }
    return m;
}

Rep injective(const AlgPtr& a, int i) { return dualize(projective(opposite(a), i)); }

Rep nakayama_projective(const AlgPtr& a, int i) { return injective(a, i); }

Rep regular_module(const AlgPtr& a) {
    std::vector<Rep> parts;
    for (int v = 0; v < a->vertices(); ++v) parts.push_back(projective(a, v));
    return direct_sum(a, parts);
}

Rep dualize(const Rep& m) {
    Rep d;
    d.alg = opposite(m.alg);
    d.dim = m.dim;
    for (const Matrix& x : m.maps) d.maps.push_back(x.transpose());
    return d;
}

ModuleMap dualize_map(const ModuleMap& f) {
    ModuleMap g;
    for (const Matrix& x : f.comp) g.comp.push_back(x.transpose());
    return g;
}

Rep direct_sum(const AlgPtr& a, const std::vector<Rep>& parts) {
    Rep s = zero_module(a);
    for (const Rep& p : parts) {
        if (!same_algebra(p.alg, a)) throw std::invalid_argument("direct sum over different algebras");
        for (std::size_t v = 0; v < s.dim.size(); ++v) s.dim[v] += p.dim[v];
    }
    const auto& arrows = a->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        Matrix m(a->field(), s.dim[arrows[k].tgt], s.dim[arrows[k].src]);
        std::size_t r0 = 0, c0 = 0;
        for (const Rep& p : parts) {
            m.set_block(r0, c0, p.maps[k]);
            r0 += p.dim[arrows[k].tgt];
            c0 += p.dim[arrows[k].src];
        }
        s.maps[k] = std::move(m);
    }
    return s;
}

Rep direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of an empty list needs an algebra");
    return direct_sum(parts.front().alg, parts);
}

ModuleMap identity_map(const Rep& m) {
    ModuleMap f;
    for (auto d : m.dim) f.comp.push_back(Matrix::identity(m.alg->field(), d));
    return f;
}

ModuleMap zero_map(const Rep& from, const Rep& to) {
    ModuleMap f;
    for (std::size_t v = 0; v < from.dim.size(); ++v) f.comp.emplace_back(from.alg->field(), to.dim[v], from.dim[v]);
    return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    ModuleMap h;
    for (std::size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
    return h;
}

bool is_module_map(const Rep& from, const Rep& to, const ModuleMap& f) {
    const auto& arrows = from.alg->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        if (to.maps[k] * f.comp[arrows[k].src] != f.comp[arrows[k].tgt] * from.maps[k]) return false;
    return true;
}

Matrix total_matrix(const Rep& from, const Rep& to, const ModuleMap& f) {
    Matrix m(from.alg->field(), to.total(), from.total());
    std::size_t r0 = 0, c0 = 0;
    for (std::size_t v = 0; v < f.comp.size(); ++v) {
        m.set_block(r0, c0, f.comp[v]);
        r0 += to.dim[v];
        c0 += from.dim[v];
    }
    return m;
}

bool is_zero_map(const ModuleMap& f) {
    for (auto& c : f.comp)
        if (!c.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- Hom

namespace {

Matrix hom_equations(const Rep& m, const Rep& n, std::vector<std::size_t>& off) {
    const Field f = m.alg->field();
    const int V = m.alg->vertices();
    off.assign(V + 1, 0);
    for (int v = 0; v < V; ++v) off[v + 1] = off[v] + n.dim[v] * m.dim[v];
    const auto& arrows = m.alg->quiver().arrows;
    std::size_t rows = 0;
    for (const Arrow& a : arrows) rows += n.dim[a.tgt] * m.dim[a.src];
    Matrix eq(f, rows, off[V]);
    std::size_t r0 = 0;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const int s = arrows[k].src, t = arrows[k].tgt;
        const Matrix& na = n.maps[k];
        const Matrix& ma = m.maps[k];
        // (N_a f_s - f_t M_a)[i][j]
        for (std::size_t i = 0; i < n.dim[t]; ++i)
            for (std::size_t j = 0; j < m.dim[s]; ++j) {
                std::size_t row = r0 + i * m.dim[s] + j;
                for (std::size_t kk = 0; kk < n.dim[s]; ++kk)
                    if (!na.at(i, kk).is_zero()) eq.at(row, off[s] + kk * m.dim[s] + j) += na.at(i, kk);
                for (std::size_t kk = 0; kk < m.dim[t]; ++kk)
                    if (!ma.at(kk, j).is_zero()) eq.at(row, off[t] + i * m.dim[t] + kk) -= ma.at(kk, j);
            }
        r0 += n.dim[t] * m.dim[s];
    }
    return eq;
}

}  // namespace

std::vector<ModuleMap> hom_space(const Rep& m, const Rep& n) {
    if (!same_algebra(m.alg, n.alg)) throw std::invalid_argument("hom_space: modules over different algebras");
    std::vector<std::size_t> off;
    Matrix eq = hom_equations(m, n, off);
    std::vector<ModuleMap> out;
    for (const Vec& v : nullspace_basis(eq)) {
        ModuleMap f;
        for (int u = 0; u < m.alg->vertices(); ++u) {
            Matrix c(m.alg->field(), n.dim[u], m.dim[u]);
            for (std::size_t i = 0; i < n.dim[u]; ++i)
                for (std::size_t j = 0; j < m.dim[u]; ++j) c.at(i, j) = v[off[u] + i * m.dim[u] + j];
            f.comp.push_back(std::move(c));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
    if (!same_algebra(m.alg, n.alg)) throw std::invalid_argument("hom_dim: modules over different algebras");
    std::vector<std::size_t> off;
    Matrix eq = hom_equations(m, n, off);
    return eq.cols() - eq.rank();
}

// ---------------------------------------------------------------- sub / quotient

SubModule restrict_to(const Rep& m, const Subspace& s) {
    const Field f = m.alg->field();
    SubModule out;
    out.rep.alg = m.alg;
    std::vector<Matrix> left;  // left inverses
    for (std::size_t v = 0; v < s.size(); ++v) {
        out.rep.dim.push_back(s[v].cols());
        out.incl.comp.push_back(s[v]);
        Matrix full = Matrix::hstack({s[v], quotient_by(s[v], m.dim[v], f).complement}, f, m.dim[v]);
        left.push_back(inverse(full)->block(0, 0, s[v].cols(), m.dim[v]));
    }
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        out.rep.maps.push_back(left[arrows[k].tgt] * m.maps[k] * s[arrows[k].src]);
    return out;
}

QuotientModule quotient(const Rep& m, const Subspace& s) {
    const Field f = m.alg->field();
    QuotientModule out;
    out.rep.alg = m.alg;
    std::vector<Matrix> lift;
    for (std::size_t v = 0; v < s.size(); ++v) {
        QuotientData q = quotient_by(s[v], m.dim[v], f);
        out.rep.dim.push_back(q.projection.rows());
        out.proj.comp.push_back(q.projection);
        lift.push_back(q.complement);
    }
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        out.rep.maps.push_back(out.proj.comp[arrows[k].tgt] * m.maps[k] * lift[arrows[k].src]);
    return out;
}

bool is_submodule(const Rep& m, const Subspace& s) {
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        Matrix img = m.maps[k] * s[arrows[k].src];
        const Matrix& tgt = s[arrows[k].tgt];
        if (Matrix::hstack({tgt, img}, m.alg->field(), tgt.rows()).rank() != tgt.rank()) return false;
    }
    return true;
}

Subspace generated_subspace(const Rep& m, const Subspace& seeds) {
    const Field f = m.alg->field();
    Subspace s;
    for (std::size_t v = 0; v < seeds.size(); ++v) s.push_back(column_space(seeds[v]));
    const auto& arrows = m.alg->quiver().arrows;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            const int src = arrows[k].src, t = arrows[k].tgt;
            Matrix img = m.maps[k] * s[src];
            Matrix joined = column_space(Matrix::hstack({s[t], img}, f, m.dim[t]));
            if (joined.cols() != s[t].cols()) {
                s[t] = joined;
                changed = true;
            }
        }
    }
    return s;
}

SubModule kernel(const Rep& from, const Rep& to, const ModuleMap& f) {
    (void)to;
    Subspace s;
    for (std::size_t v = 0; v < from.dim.size(); ++v)
        s.push_back(from_columns(nullspace_basis(f.comp[v]), from.alg->field(), from.dim[v]));
    return restrict_to(from, s);
}

QuotientModule cokernel(const Rep& from, const Rep& to, const ModuleMap& f) {
    (void)from;
    Subspace s;
    for (std::size_t v = 0; v < to.dim.size(); ++v) s.push_back(column_space(f.comp[v]));
    return quotient(to, s);
}

SubModule image(const Rep& from, const Rep& to, const ModuleMap& f) {
    (void)from;
    Subspace s;
    for (std::size_t v = 0; v < to.dim.size(); ++v) s.push_back(column_space(f.comp[v]));
    return restrict_to(to, s);
}

Subspace radical_subspace(const Rep& m) {
    const Field f = m.alg->field();
    const auto& arrows = m.alg->quiver().arrows;
    Subspace s;
    for (int v = 0; v < m.alg->vertices(); ++v) {
        std::vector<Matrix> parts;
        for (std::size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].tgt == v) parts.push_back(m.maps[k]);
        s.push_back(column_space(Matrix::hstack(parts, f, m.dim[v])));
    }
    return s;
}

Subspace socle_subspace(const Rep& m) {
    const Field f = m.alg->field();
    const auto& arrows = m.alg->quiver().arrows;
    Subspace s;
    for (int v = 0; v < m.alg->vertices(); ++v) {
        std::vector<Matrix> parts;
        for (std::size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].src == v) parts.push_back(m.maps[k]);
        s.push_back(from_columns(nullspace_basis(Matrix::vstack(parts, f, m.dim[v])), f, m.dim[v]));
    }
    return s;
}

SubModule radical(const Rep& m) { return restrict_to(m, radical_subspace(m)); }
QuotientModule top(const Rep& m) { return quotient(m, radical_subspace(m)); }
SubModule socle(const Rep& m) { return restrict_to(m, socle_subspace(m)); }

std::vector<std::size_t> top_multiplicities(const Rep& m) {
    Subspace r = radical_subspace(m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < r.size(); ++v) out.push_back(m.dim[v] - r[v].cols());
    return out;
}

CanonicalSequence trace(const Rep& generator, const Rep& x) {
    const Field f = x.alg->field();
    auto homs = hom_space(generator, x);
    Subspace s;
    for (int v = 0; v < x.alg->vertices(); ++v) {
        std::vector<Matrix> parts;
        for (auto& h : homs) parts.push_back(h.comp[v]);
        s.push_back(column_space(Matrix::hstack(parts, f, x.dim[v])));
    }
    CanonicalSequence cs;
    SubModule sub = restrict_to(x, s);
    QuotientModule q = quotient(x, s);
    cs.tau = sub.rep;
    cs.incl = sub.incl;
    cs.pi = q.rep;
    cs.proj = q.proj;
    return cs;
}

// ---------------------------------------------------------------- tensor

TensorResult tensor_over_A(const Rep& right, const Rep& left) {
    if (!same_algebra(opposite(left.alg), right.alg))
        throw std::invalid_argument("tensor_over_A: first argument must be a module over the opposite algebra");
    const Field f = left.alg->field();
    const int V = left.alg->vertices();
    TensorResult t;
    for (int v = 0; v < V; ++v) {
        t.block.push_back(t.big);
        t.big += right.dim[v] * left.dim[v];
    }
    const auto& arrows = left.alg->quiver().arrows;
    std::vector<Vec> rels;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const int s = arrows[k].src, tg = arrows[k].tgt;
        const Matrix& ra = right.maps[k];  // right_t -> right_s
        const Matrix& la = left.maps[k];   // left_s -> left_t
        for (std::size_t i = 0; i < right.dim[tg]; ++i)
            for (std::size_t j = 0; j < left.dim[s]; ++j) {
                Vec v = zero_vec(f, t.big);
                for (std::size_t i2 = 0; i2 < right.dim[s]; ++i2)
                    if (!ra.at(i2, i).is_zero()) v[t.block[s] + i2 * left.dim[s] + j] += ra.at(i2, i);
                for (std::size_t j2 = 0; j2 < left.dim[tg]; ++j2)
                    if (!la.at(j2, j).is_zero()) v[t.block[tg] + i * left.dim[tg] + j2] -= la.at(j2, j);
                if (!is_zero_vec(v)) rels.push_back(std::move(v));
            }
    }
    QuotientData q = quotient_by(from_columns(rels, f, t.big), t.big, f);
    t.dim = q.projection.rows();
    t.proj = q.projection;
    t.lift = q.complement;
    return t;
}

Matrix tensor_map(const Rep& m1, const Rep& n1, const TensorResult& t1, const Rep& m2, const Rep& n2,
                  const TensorResult& t2, const ModuleMap& fr, const ModuleMap& gl) {
    const Field f = n1.alg->field();
    Matrix big(f, t2.big, t1.big);
    for (int v = 0; v < n1.alg->vertices(); ++v) {
        const Matrix& a = fr.comp[v];  // m2_v x m1_v
        const Matrix& b = gl.comp[v];  // n2_v x n1_v
        for (std::size_t i = 0; i < m1.dim[v]; ++i)
            for (std::size_t j = 0; j < n1.dim[v]; ++j)
                for (std::size_t i2 = 0; i2 < m2.dim[v]; ++i2) {
                    if (a.at(i2, i).is_zero()) continue;
                    for (std::size_t j2 = 0; j2 < n2.dim[v]; ++j2)
                        if (!b.at(j2, j).is_zero())
                            big.at(t2.block[v] + i2 * n2.dim[v] + j2, t1.block[v] + i * n1.dim[v] + j) +=
                                a.at(i2, i) * b.at(j2, j);
                }
    }
    return t2.proj * big * t1.lift;
}

}  // namespace tilt
