#include "tilt/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilt {

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.src < b.src;
}

Elem elem_add(const Elem& x, const Elem& y) {
    Elem z = x;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
    return z;
}

Elem elem_scale(const Elem& x, const Scalar& s) {
    Elem z = x;
    for (auto& v : z) v *= s;
    return z;
}

bool elem_is_zero(const Elem& x) { return is_zero_vec(x); }

namespace {

Path concat(const Path& first, const Path& then) {
    // `first` applied before `then`
    Path p;
    p.src = first.src;
    p.tgt = then.tgt;
    p.arrows = first.arrows;
    p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
    return p;
}

// All paths of exactly the given length, in length-lex order.
std::vector<std::vector<Path>> paths_by_length(const Quiver& q, std::size_t maxlen) {
    std::vector<std::vector<Path>> out(maxlen + 1);
    for (int v = 0; v < q.n; ++v) out[0].push_back(Path{v, v, {}});
    for (std::size_t L = 1; L <= maxlen; ++L) {
        for (const Path& p : out[L - 1])
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].src == p.tgt) {
                    Path np = p;
                    np.arrows.push_back(static_cast<int>(a));
                    np.tgt = q.arrows[a].tgt;
                    out[L].push_back(np);
                }
        std::sort(out[L].begin(), out[L].end(), path_less);
    }
    return out;
}

struct Generator {
    std::vector<std::pair<Path, Scalar>> terms;
};

}  // namespace

AlgPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field f, BuildOptions opt) {
    for (const Arrow& a : q.arrows)
        if (a.src < 0 || a.src >= q.n || a.tgt < 0 || a.tgt >= q.n)
            throw std::invalid_argument("arrow " + a.name + " has an endpoint out of range");
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[i].name == q.arrows[j].name)
                throw std::invalid_argument("duplicate arrow name " + q.arrows[i].name);

    std::size_t min_rel_len = SIZE_MAX;
    for (const Relation& r : rels) {
        if (r.empty()) throw std::invalid_argument("empty relation");
        for (const Term& t : r) {
            if (t.coeff.field() != f) throw std::invalid_argument("mixed field tags");
            if (t.path.src != r[0].path.src || t.path.tgt != r[0].path.tgt)
                throw std::invalid_argument("relation terms are not parallel paths");
            if (t.path.length() < 2) throw std::invalid_argument("relation term of length < 2 is not admissible");
            min_rel_len = std::min(min_rel_len, t.path.length());
        }
    }

    const std::size_t bound = opt.max_length;
    auto by_len = paths_by_length(q, bound);

    // Ideal elements u*r*v, terms of length > N dropped.
    auto generators = [&](std::size_t N) {
        std::vector<Generator> gens;
        for (const Relation& r : rels) {
            std::size_t rmin = SIZE_MAX;
            for (const Term& t : r) rmin = std::min(rmin, t.path.length());
            for (std::size_t lv = 0; lv + rmin <= N; ++lv)
                for (const Path& v : by_len[lv]) {
                    if (v.tgt != r[0].path.src) continue;
                    for (std::size_t lu = 0; lv + lu + rmin <= N; ++lu)
                        for (const Path& u : by_len[lu]) {
                            if (u.src != r[0].path.tgt) continue;
                            Generator g;
                            for (const Term& t : r) {
                                Path p = concat(concat(v, t.path), u);
                                if (p.length() <= N && !t.coeff.is_zero()) g.terms.push_back({p, t.coeff});
                            }
                            if (!g.terms.empty()) gens.push_back(std::move(g));
                        }
                }
        }
        return gens;
    };

    // Columns: paths of length <= N, longest / lex-largest first.
    auto column_order = [&](std::size_t N) {
        std::vector<Path> cols;
        for (std::size_t L = N + 1; L-- > 0;)
            for (auto it = by_len[L].rbegin(); it != by_len[L].rend(); ++it) cols.push_back(*it);
        return cols;
    };
    auto reduce_rows = [&](const std::vector<Generator>& gens, const std::vector<Path>& cols) {
        std::map<std::pair<int, std::vector<int>>, std::size_t> idx;
        for (std::size_t i = 0; i < cols.size(); ++i) idx[{cols[i].src, cols[i].arrows}] = i;
        Matrix m(f, gens.size(), cols.size());
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (auto& [p, c] : gens[g].terms) {
                auto it = idx.find({p.src, p.arrows});
                if (it != idx.end()) m.at(g, it->second) += c;
            }
        return rref(m);
    };

    std::size_t N = 0;
    for (std::size_t cand = 1;; ++cand) {
        if (cand > bound)
            throw std::runtime_error("infinite-dimensional or bound too low: paths of length " + std::to_string(bound) +
                                     " survive the relations");
        if (by_len[cand].empty()) {
            N = cand;
            break;
        }
        if (rels.empty() || cand < min_rel_len) continue;
        auto cols = column_order(cand);
        RrefResult rr = reduce_rows(generators(cand), cols);
        // Is every path of length `cand` in the span (modulo longer paths)?
        bool all = true;
        std::size_t top = by_len[cand].size();  // these are the first `top` columns
        std::vector<bool> pivot(cols.size(), false);
        for (auto p : rr.pivots) pivot[p] = true;
        for (std::size_t c = 0; c < top && all; ++c) {
            Vec v = zero_vec(f, cols.size());
            v[c] = Scalar::one(f);
            for (std::size_t k = 0; k < rr.rank; ++k) {
                const Scalar x = v[rr.pivots[k]];
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (!rr.reduced.at(k, j).is_zero()) v[j] -= x * rr.reduced.at(k, j);
            }
            all = is_zero_vec(v);
        }
        if (all) {
            N = cand;
            break;
        }
    }

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->field_ = f;
    alg->quiver_ = q;
    alg->relations_ = rels;
    alg->bound_ = N;

    // Normal forms of all paths of length < N.
    auto cols = column_order(N - 1);
    RrefResult rr = reduce_rows(generators(N - 1), cols);
    std::vector<bool> pivot(cols.size(), false);
    for (auto p : rr.pivots) pivot[p] = true;
    std::vector<std::size_t> basis_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!pivot[c]) basis_cols.push_back(c);
    std::sort(basis_cols.begin(), basis_cols.end(),
              [&](std::size_t a, std::size_t b) { return path_less(cols[a], cols[b]); });
    std::vector<long> basis_of_col(cols.size(), -1);
    for (std::size_t i = 0; i < basis_cols.size(); ++i) {
        basis_of_col[basis_cols[i]] = static_cast<long>(i);
        alg->basis_.push_back(cols[basis_cols[i]]);
    }
    const std::size_t D = basis_cols.size();
    std::vector<long> row_of_pivot(cols.size(), -1);
    for (std::size_t k = 0; k < rr.rank; ++k) row_of_pivot[rr.pivots[k]] = static_cast<long>(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Elem e = zero_vec(f, D);
        if (!pivot[c]) {
            e[basis_of_col[c]] = Scalar::one(f);
        } else {
            std::size_t k = row_of_pivot[c];
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (!pivot[j] && !rr.reduced.at(k, j).is_zero()) e[basis_of_col[j]] -= rr.reduced.at(k, j);
        }
        alg->normal_[{cols[c].src, cols[c].arrows}] = std::move(e);
    }

    alg->table_.assign(D * D, {});
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            const Path& pi = alg->basis_[i];
            const Path& pj = alg->basis_[j];
            if (pi.src != pj.tgt) continue;
            Elem e = alg->path_elem(concat(pj, pi));
            for (std::size_t k = 0; k < D; ++k)
                if (!e[k].is_zero()) alg->table_[i * D + j].push_back({k, e[k]});
        }
    alg->index_between();
    return alg;
}

void Algebra::index_between() {
    between_.assign(quiver_.n, std::vector<std::vector<std::size_t>>(quiver_.n));
    for (std::size_t b = 0; b < basis_.size(); ++b) between_[basis_[b].src][basis_[b].tgt].push_back(b);
}

const std::vector<std::size_t>& Algebra::between(int from, int to) const { return between_.at(from).at(to); }

Elem Algebra::vertex(int i) const {
    if (i < 0 || i >= quiver_.n) throw std::out_of_range("vertex index out of range");
    return path_elem(Path{i, i, {}});
}

Elem Algebra::arrow(int a) const {
    const Arrow& ar = quiver_.arrows.at(a);
    return path_elem(Path{ar.src, ar.tgt, {a}});
}

Elem Algebra::basis_elem(std::size_t b) const {
    Elem e = zero();
    e.at(b) = Scalar::one(field_);
    return e;
}

Elem Algebra::path_elem(const Path& p) const {
    if (p.length() >= bound_) return zero();
    auto it = normal_.find({p.src, p.arrows});
    if (it == normal_.end()) throw std::invalid_argument("not a path of the quiver");
    return it->second;
}

Elem Algebra::mul(const Elem& x, const Elem& y) const {
    Elem z = zero();
    const std::size_t D = dim();
    for (std::size_t i = 0; i < D; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < D; ++j) {
            if (y[j].is_zero()) continue;
            const auto& t = table_[i * D + j];
            if (t.empty()) continue;
            Scalar c = x[i] * y[j];
            for (auto& [k, s] : t) z[k] += c * s;
        }
    }
    return z;
}

bool Algebra::in_corner(const Elem& x, int from, int to) const {
    for (std::size_t b = 0; b < dim(); ++b)
        if (!x[b].is_zero() && (basis_[b].src != from || basis_[b].tgt != to)) return false;
    return true;
}

std::string Algebra::path_name(const Path& p) const {
    if (p.arrows.empty()) return "e" + std::to_string(p.src + 1);
    std::string s;
    for (std::size_t i = p.arrows.size(); i-- > 0;) {
        s += quiver_.arrows[p.arrows[i]].name;
        if (i > 0) s += "*";
    }
    return s;
}

std::string Algebra::elem_str(const Elem& x) const {
    std::string s;
    for (std::size_t b = 0; b < dim(); ++b) {
        if (x[b].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (!x[b].is_one()) s += x[b].str() + "*";
        s += path_name(basis_[b]);
    }
    return s.empty() ? "0" : s;
}

namespace {
Path reverse_path(const Path& p) {
    Path r;
    r.src = p.tgt;
    r.tgt = p.src;
    r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return r;
}
}  // namespace

AlgPtr opposite(const AlgPtr& a) {
    if (a->op_strong_) return a->op_strong_;
    if (auto back = a->op_weak_.lock()) return back;
    auto op = std::shared_ptr<Algebra>(new Algebra());
    op->field_ = a->field_;
    op->quiver_ = a->quiver_;
    for (Arrow& ar : op->quiver_.arrows) std::swap(ar.src, ar.tgt);
    for (const Relation& r : a->relations_) {
        Relation rr;
        for (const Term& t : r) rr.push_back({t.coeff, reverse_path(t.path)});
        op->relations_.push_back(rr);
    }
    for (const Path& p : a->basis_) op->basis_.push_back(reverse_path(p));
    const std::size_t D = a->dim();
    op->table_.assign(D * D, {});
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) op->table_[i * D + j] = a->table_[j * D + i];
    for (auto& [key, e] : a->normal_) {
        Path p{key.first, 0, key.second};
        p.tgt = key.second.empty() ? key.first : a->quiver_.arrows[key.second.back()].tgt;
        Path r = reverse_path(p);
        op->normal_[{r.src, r.arrows}] = e;
    }
    op->bound_ = a->bound_;
    op->reversed_ = !a->reversed_;
    op->index_between();
    op->op_weak_ = a;
    a->op_strong_ = op;
    return op;
}

bool same_algebra(const AlgPtr& a, const AlgPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->field() != b->field() || a->vertices() != b->vertices() || a->dim() != b->dim()) return false;
    const auto& qa = a->quiver().arrows;
    const auto& qb = b->quiver().arrows;
    if (qa.size() != qb.size()) return false;
    for (std::size_t i = 0; i < qa.size(); ++i)
        if (qa[i].name != qb[i].name || qa[i].src != qb[i].src || qa[i].tgt != qb[i].tgt) return false;
    return a->basis() == b->basis();
}

}  // namespace tilt
