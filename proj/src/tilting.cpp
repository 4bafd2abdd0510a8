#include "tilt/tilting.hpp"

#include <stdexcept>

namespace tilt {

// ---------------------------------------------------------------- K0

std::vector<long long> k0_class(const TwoTermComplex& p) {
    std::vector<long long> c(static_cast<std::size_t>(p.alg->vertices()), 0);
    for (int v : p.zero) ++c[v];
    for (int v : p.minus1) --c[v];
    return c;
}

bool k0_spans(const std::vector<TwoTermComplex>& summands, int vertices) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& s : summands) {
        std::vector<mpz_class> r;
        for (long long x : k0_class(s)) r.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(r));
    }
    std::size_t top = 0;
    for (int col = 0; col < vertices; ++col) {
        // Euclid on the column below `top`
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
            if (best == rows.size()) return false;  // zero column: rank deficient
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                mpz_class q = rows[i][col] / rows[top][col];
                for (int k = col; k < vertices; ++k) rows[i][k] -= q * rows[top][k];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (abs(rows[top][col]) != 1) return false;
        ++top;
    }
    return true;
}

// ---------------------------------------------------------------- verdict

TiltingVerdict is_tilting(const Membership& m, const std::vector<Rep>* universe, std::uint64_t seed) {
    TiltingVerdict v;
    const TwoTermComplex& p = m.complex();
    const CohomologyBundle& b = m.bundle();
    v.presilting_up = hom_homotopy(p, p, 1).dim == 0;
    v.presilting_down = hom_homotopy(p, p, -1).dim == 0;
    v.h0_in_X = m.in_X(b.H0);
    v.hminus1_in_Y = m.in_Y(b.Hminus1);
    if (v.h0_in_X != v.presilting_up)
        throw std::logic_error("cross-check failed: H0 in X disagrees with Hom_K(P, P[1]) = 0");
    if (v.hminus1_in_Y != v.presilting_down)
        throw std::logic_error("cross-check failed: H-1 in Y disagrees with Hom_K(P, P[-1]) = 0");
    v.cross_checks.push_back("h0_in_X agrees with shift 1 vanishing");
    v.cross_checks.push_back("hminus1_in_Y agrees with shift -1 vanishing");
    if (m.in_X(b.H0) != m.in_X_by_tensor(b.H0)) throw std::logic_error("cross-check failed: two tests of X disagree");
    v.cross_checks.push_back("X membership of H0 agrees between Hom and tensor tests");

    auto sums = distinct_summands(p, seed);
    v.summands = sums.size();
    v.simples = p.alg->vertices();
    v.summand_heuristic = v.summands == static_cast<std::size_t>(v.simples);
    v.k0_spans = k0_spans(sums, v.simples);

    std::optional<Rep> oracle;
    if (universe) oracle = search_intersection(m, *universe);
    if (!v.k0_spans) {
        v.generation = "refuted";
        v.witness = oracle;
    } else if (v.presilting_up) {
        v.generation = "K0-exact";
        if (oracle) throw std::logic_error("cross-check failed: K0 certificate contradicted by an oracle witness");
        if (universe) v.cross_checks.push_back("oracle finds no module in both classes");
    } else if (universe) {
        v.generation = oracle ? "refuted" : "oracle-bounded";
        v.witness = oracle;
    } else {
        v.generation = "heuristic-summand-count";
    }

    if (!v.presilting_up || !v.presilting_down || v.generation == "refuted")
        v.overall = Verdict::refuted;
    else if (v.generation == "K0-exact" || v.generation == "oracle-bounded")
        v.overall = Verdict::verified;
    else
        v.overall = Verdict::inconclusive;
    return v;
}

// ---------------------------------------------------------------- construction

bool generated_by(const Rep& gen, const Rep& m) { return m.is_zero() || trace(gen, m).pi.is_zero(); }

bool cogenerated_by(const Rep& cogen, const Rep& m) {
    if (m.is_zero()) return true;
    auto homs = hom_space(m, cogen);
    if (homs.empty()) return false;
    std::vector<Matrix> parts;
    for (auto& h : homs) parts.push_back(total_matrix(m, cogen, h));
    return Matrix::vstack(parts, m.alg->field(), m.total()).rank() == m.total();
}

Rep nakayama_module(const Rep& m) {
    if (m.is_zero()) return m;
    InjectiveComplex n = nakayama_complex(min_proj_presentation(m));
    return cokernel(n.i_minus1, n.i_zero, n.d).rep;
}

TwoTermComplex torsion_complex(const Rep& x_gen, const Rep& y_cogen) {
    const AlgPtr& a = x_gen.alg;
    std::vector<TwoTermComplex> parts{make_complex(a, {}, {})};
    if (!x_gen.is_zero()) parts.push_back(min_proj_presentation(x_gen));
    if (!y_cogen.is_zero()) {
        TwoTermComplex shifted = a_dual(min_inj_presentation(y_cogen).dual_presentation);
        if (!same_algebra(shifted.alg, a)) throw std::logic_error("double opposite lost its identity");
        parts.push_back(shifted);
    }
    return direct_sum(parts);
}

ConstructReport construct_from_torsion(const Rep& x_gen, const Rep& y_cogen, const std::vector<Rep>& universe,
                                       bool universe_exhaustive) {
    if (!same_algebra(x_gen.alg, y_cogen.alg)) throw std::invalid_argument("inputs over different algebras");
    ConstructReport r;
    r.universe_size = universe.size();
    if (!universe_exhaustive)
        r.warnings.push_back("universe is not exhaustive; preconditions were checked on a finite sample");
    if (hom_dim(x_gen, y_cogen) != 0) throw PreconditionFailure("x-gen maps nontrivially into y-cogen", y_cogen);
    std::vector<const Rep*> gen, cogen;
    for (const Rep& m : universe) {
        if (generated_by(x_gen, m)) gen.push_back(&m);
        if (cogenerated_by(y_cogen, m)) cogen.push_back(&m);
    }
    for (const Rep* m : gen)
        if (ext1(x_gen, *m) != 0) throw PreconditionFailure("x-gen is not Ext-projective in the class it generates", *m);
    for (const Rep* n : cogen)
        if (ext1(*n, y_cogen) != 0)
            throw PreconditionFailure("y-cogen is not Ext-injective in the class it cogenerates", *n);
    for (const Rep* m : gen)
        if (!generated_by(x_gen, nakayama_module(*m)))
            throw PreconditionFailure("the class generated by x-gen is not stable under DA (x)_A -", *m);
    for (const Rep& m : universe)
        if (!cogenerated_by(y_cogen, trace(x_gen, m).pi))
            throw PreconditionFailure("module whose quotient by its x-gen trace is not cogenerated by y-cogen", m);

    r.complex = torsion_complex(x_gen, y_cogen);
    Membership mem(r.complex);
    for (const Rep& m : universe) {
        if (mem.in_X(m) != generated_by(x_gen, m)) ++r.x_mismatches;
        if (mem.in_Y(m) != cogenerated_by(y_cogen, m)) ++r.y_mismatches;
    }
    return r;
}

std::vector<Rep> small_universe(const AlgPtr& a, const std::vector<Rep>& extra, std::uint64_t seed) {
    std::vector<Rep> u{zero_module(a)};
    for (int v = 0; v < a->vertices(); ++v) {
        u.push_back(simple(a, v));
        u.push_back(projective(a, v));
        u.push_back(injective(a, v));
    }
    for (const Rep& e : extra) {
        u.push_back(e);
        for (Rep& s : indecomposable_summands(e, seed)) u.push_back(std::move(s));
    }
    return u;
}

// ---------------------------------------------------------------- B-modules

namespace {

Vec flatten_map(const ModuleMap& f) {
    Vec out;
    for (const Matrix& m : f.comp) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

Matrix kron_identity(const Matrix& m, std::size_t k) {
    Matrix out(m.field(), m.rows() * k, m.cols() * k);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                for (std::size_t t = 0; t < k; ++t) out.at(i * k + t, j * k + t) = m.at(i, j);
    return out;
}

}  // namespace

bool is_B_module(const EndoAlgebra& b, const BBModule& m) {
    const StructAlgebra& s = b.algebra;
    const Field f = s.field;
    if (m.action.size() != s.dim) return false;
    auto combo = [&](const Vec& x) {
        Matrix out(f, m.dim, m.dim);
        for (std::size_t k = 0; k < s.dim; ++k)
            if (!x[k].is_zero()) out = out + m.action[k].scaled(x[k]);
        return out;
    };
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            if (m.action[i] * m.action[j] != combo(s.mult[i][j])) return false;
    return s.dim == 0 ? m.dim == 0 : combo(s.unit) == Matrix::identity(f, m.dim);
}

BBModule to_B_module_X(const EndoAlgebra& b, const Membership& mem, const Rep& m) {
    if (!mem.in_X(m)) throw std::invalid_argument("module is not in X");
    const Field f = m.alg->field();
    const Rep& h0 = b.bundle.H0;
    auto homs = hom_space(h0, m);
    BBModule out;
    out.dim = homs.size();
    std::vector<Vec> flat;
    for (auto& h : homs) flat.push_back(flatten_map(h));
    std::size_t len = 0;
    for (int v = 0; v < m.alg->vertices(); ++v) len += m.dim[v] * h0.dim[v];
    Matrix basis = from_columns(flat, f, len);
    for (std::size_t i = 0; i < b.algebra.dim; ++i) {
        Matrix act(f, out.dim, out.dim);
        for (std::size_t j = 0; j < homs.size(); ++j) {
            auto x = solve(basis, flatten_map(compose(homs[j], b.rho[i])));
            if (!x) throw std::logic_error("Hom(H0, M) is not closed under the B-action");
            for (std::size_t k = 0; k < out.dim; ++k) act.at(k, j) = (*x)[k];
        }
        out.action.push_back(std::move(act));
    }
    return out;
}

BBModule to_B_module_Y(const EndoAlgebra& b, const Membership& mem, const Rep& n) {
    if (!mem.in_Y(n)) throw std::invalid_argument("module is not in Y");
    const Rep& h1 = b.bundle.H1dual;
    TensorResult t = tensor_over_A(h1, n);
    BBModule out;
    out.dim = t.dim;
    for (std::size_t i = 0; i < b.algebra.dim; ++i)
        out.action.push_back(tensor_map(h1, n, t, h1, n, t, b.lambda[i], identity_map(n)));
    return out;
}

Rep from_B_module_V(const EndoAlgebra& b, const BBModule& v) {
    const Rep& h0 = b.bundle.H0;
    const AlgPtr& a = h0.alg;
    const Field f = a->field();
    const std::size_t k = v.dim;
    Rep out;
    out.alg = a;
    std::vector<QuotientData> qs;
    for (int x = 0; x < a->vertices(); ++x) {
        const std::size_t hd = h0.dim[x], big = hd * k;
        std::vector<Vec> rels;
        for (std::size_t i = 0; i < b.algebra.dim; ++i) {
            const Matrix& rho = b.rho[i].comp[x];
            for (std::size_t h = 0; h < hd; ++h)
                for (std::size_t e = 0; e < k; ++e) {
                    Vec r = zero_vec(f, big);
                    for (std::size_t h2 = 0; h2 < hd; ++h2) r[h2 * k + e] += rho.at(h2, h);
                    for (std::size_t e2 = 0; e2 < k; ++e2) r[h * k + e2] -= v.action[i].at(e2, e);
                    if (!is_zero_vec(r)) rels.push_back(std::move(r));
                }
        }
        qs.push_back(quotient_by(column_space(from_columns(rels, f, big)), big, f));
        out.dim.push_back(qs.back().projection.rows());
    }
    const auto& arrows = a->quiver().arrows;
    for (std::size_t ar = 0; ar < arrows.size(); ++ar)
        out.maps.push_back(qs[arrows[ar].tgt].projection * kron_identity(h0.maps[ar], k) *
                           qs[arrows[ar].src].complement);
    return out;
}

Rep from_B_module_U(const EndoAlgebra& b, const BBModule& u) {
    const Rep& h1 = b.bundle.H1dual;
    const AlgPtr a = opposite(h1.alg);
    const Field f = a->field();
    const std::size_t k = u.dim;
    Rep out;
    out.alg = a;
    std::vector<Matrix> bases;  // columns: flattened maps H1dual_x -> U, row-major k x h
    for (int x = 0; x < a->vertices(); ++x) {
        const std::size_t h = h1.dim[x], n = k * h;
        std::vector<Matrix> eqs;
        for (std::size_t i = 0; i < b.algebra.dim; ++i) {
            const Matrix& lam = b.lambda[i].comp[x];
            const Matrix& act = u.action[i];
            Matrix e(f, n, n);  // (f lam - act f) flattened
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < h; ++c) {
                    for (std::size_t t = 0; t < h; ++t) e.at(r * h + c, r * h + t) += lam.at(t, c);
                    for (std::size_t t = 0; t < k; ++t) e.at(r * h + c, t * h + c) -= act.at(r, t);
                }
            eqs.push_back(std::move(e));
        }
        Matrix sys = eqs.empty() ? Matrix(f, 0, n) : Matrix::vstack(eqs, f, n);
        bases.push_back(from_columns(nullspace_basis(sys), f, n));
        out.dim.push_back(bases.back().cols());
    }
    const auto& arrows = a->quiver().arrows;
    for (std::size_t ar = 0; ar < arrows.size(); ++ar) {
        const int s = arrows[ar].src, t = arrows[ar].tgt;
        const Matrix& ra = h1.maps[ar];  // H1dual_t -> H1dual_s
        const std::size_t hs = h1.dim[s], ht = h1.dim[t];
        Matrix m(f, out.dim[t], out.dim[s]);
        for (std::size_t j = 0; j < out.dim[s]; ++j) {
            Matrix fs(f, k, hs);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < hs; ++c) fs.at(r, c) = bases[s].at(r * hs + c, j);
            Matrix g = fs * ra;
            Vec flat = zero_vec(f, k * ht);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < ht; ++c) flat[r * ht + c] = g.at(r, c);
            auto x = solve(bases[t], flat);
            if (!x) throw std::logic_error("Hom_B(H1dual, U) is not closed under the A-action");
            for (std::size_t i = 0; i < out.dim[t]; ++i) m.at(i, j) = (*x)[i];
        }
        out.maps.push_back(std::move(m));
    }
    return out;
}

bool in_U(const EndoAlgebra& b, const BBModule& u) { return from_B_module_V(b, u).is_zero(); }
bool in_V(const EndoAlgebra& b, const BBModule& v) { return from_B_module_U(b, v).is_zero(); }

RoundTripReport bb_round_trips(const EndoAlgebra& b, const Membership& mem, const std::vector<Rep>& universe,
                               std::uint64_t seed) {
    RoundTripReport r;
    for (const Rep& m : universe) {
        if (mem.in_X(m)) {
            ++r.x_members;
            BBModule fm = to_B_module_X(b, mem, m);
            if (!is_B_module(b, fm) || !in_V(b, fm)) {
                ++r.membership_failures;
                r.failures.push_back("Hom(H0, M) outside V for M of dimension " + m.dim_str());
            }
            if (!is_isomorphic(from_B_module_V(b, fm), m, seed)) {
                ++r.x_failures;
                r.failures.push_back("X round trip fails for M of dimension " + m.dim_str());
            }
        }
        if (mem.in_Y(m)) {
            ++r.y_members;
            BBModule gn = to_B_module_Y(b, mem, m);
            if (!is_B_module(b, gn) || !in_U(b, gn)) {
                ++r.membership_failures;
                r.failures.push_back("H1dual (x) N outside U for N of dimension " + m.dim_str());
            }
            if (!is_isomorphic(from_B_module_U(b, gn), m, seed)) {
                ++r.y_failures;
                r.failures.push_back("Y round trip fails for N of dimension " + m.dim_str());
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- search

std::vector<TwoTermComplex> elementary_complexes(const AlgPtr& a) {
    std::vector<TwoTermComplex> out;
    for (int v = 0; v < a->vertices(); ++v) out.push_back(make_complex(a, {}, {v}));
    for (int v = 0; v < a->vertices(); ++v) out.push_back(make_complex(a, {v}, {}));
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const Path& p = a->basis_path(b);
        if (p.length() == 0) continue;
        TwoTermComplex c = make_complex(a, {p.tgt}, {p.src});
        c.entry(0, 0) = a->basis_elem(b);
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<TwoTermComplex> search_tilting(const AlgPtr& a, std::uint64_t seed) {
    (void)seed;
    auto cands = elementary_complexes(a);
    const std::size_t n = cands.size();
    const std::size_t want = static_cast<std::size_t>(a->vertices());
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ok[i][j] = hom_homotopy(cands[i], cands[j], 1).dim == 0 && hom_homotopy(cands[i], cands[j], -1).dim == 0;
    std::vector<std::size_t> chosen;
    std::optional<TwoTermComplex> found, shifted;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (found) return;
        if (chosen.size() == want) {
            bool has_differential = false, has_minus1 = false;
            std::vector<TwoTermComplex> parts;
            for (auto i : chosen) {
                has_differential = has_differential || (!cands[i].minus1.empty() && !cands[i].zero.empty());
                has_minus1 = has_minus1 || !cands[i].minus1.empty();
                parts.push_back(cands[i]);
            }
            if (!has_minus1 || !k0_spans(parts, a->vertices())) return;
            if (has_differential)
                found = direct_sum(parts);
            else if (!shifted)
                shifted = direct_sum(parts);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            if (!ok[i][i]) continue;
            bool fits = true;
            for (auto j : chosen) fits = fits && ok[i][j] && ok[j][i];
            if (!fits) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return found ? found : shifted;
}

}  // namespace tilt
