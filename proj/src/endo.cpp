#include "tilt/endo.hpp"

#include "tilt/matalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilt {

Vec StructAlgebra::product(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar s = x[i] * y[j];
            const Vec& m = mult[i][j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!m[k].is_zero()) out[k] += s * m[k];
        }
    }
    return out;
}

Vec StructAlgebra::basis_elem(std::size_t i) const {
    Vec e = zero_vec(field, dim);
    e[i] = Scalar::one(field);
    return e;
}

Matrix StructAlgebra::left_mult(const Vec& x) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec c = product(x, basis_elem(j));
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = c[k];
    }
    return m;
}

bool StructAlgebra::is_associative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (product(product(basis_elem(i), basis_elem(j)), basis_elem(k)) !=
                    product(basis_elem(i), product(basis_elem(j), basis_elem(k))))
                    return false;
    return true;
}

StructAlgebra as_struct_algebra(const AlgPtr& a) {
    StructAlgebra s;
    s.field = a->field();
    s.dim = a->dim();
    s.mult.assign(s.dim, std::vector<Vec>(s.dim));
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
            Vec v = a->zero();
            for (auto& [k, c] : a->mul_basis(i, j)) v[k] += c;
            s.mult[i][j] = std::move(v);
        }
    s.unit = a->zero();
    for (int v = 0; v < a->vertices(); ++v) s.unit = elem_add(s.unit, a->vertex(v));
    return s;
}

// ---------------------------------------------------------------- endomorphism algebra

namespace {

ModuleMap induced_on_quotient(const QuotientModule& q, const ModuleMap& f) {
    ModuleMap out;
    for (std::size_t v = 0; v < f.comp.size(); ++v) {
        const Matrix& pr = q.proj.comp[v];
        if (pr.rows() == 0) {
            out.comp.push_back(Matrix(pr.field(), 0, 0));
            continue;
        }
        out.comp.push_back(pr * f.comp[v] * right_inverse(pr));
    }
    return out;
}

ModuleMap combine_maps(const std::vector<ModuleMap>& maps, const Vec& x, const Rep& m) {
    ModuleMap out = zero_map(m, m);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t v = 0; v < out.comp.size(); ++v) out.comp[v] = out.comp[v] + maps[i].comp[v].scaled(x[i]);
    }
    return out;
}

}  // namespace

EndoAlgebra endomorphism_algebra(const TwoTermComplex& p) {
    EndoAlgebra b;
    b.complex = p;
    b.bundle = cohomology(p);
    RealizedComplex r = realize(p);
    b.classes = hom_homotopy(p, as_module_complex(r), 0);
    const std::size_t n = b.classes.dim;
    const Field f = p.alg->field();
    for (const Vec& rep : b.classes.representatives) b.basis.push_back(chain_map_from_coordinates(p, p, rep));

    StructAlgebra& s = b.algebra;
    s.field = f;
    s.dim = n;
    s.mult.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ChainMap c = compose(b.basis[j], b.basis[i], p, p, p);
            s.mult[i][j] = class_coordinates(b.classes, chain_map_coordinates(p, p, c));
        }
    s.unit = n ? class_coordinates(b.classes, chain_map_coordinates(p, p, identity_chain_map(p))) : Vec{};

    RealizedComplex rd = realize(a_dual(p));
    for (const ChainMap& m : b.basis) {
        b.rho.push_back(induced_on_quotient(b.bundle.H0_quotient, realize_entries(r.zero, r.zero, m.zero)));
        std::vector<Elem> transposed(m.minus1.size());
        const std::size_t k = p.minus1.size();
        for (std::size_t row = 0; row < k; ++row)
            for (std::size_t col = 0; col < k; ++col) transposed[col * k + row] = m.minus1[row * k + col];
        b.lambda.push_back(induced_on_quotient(b.bundle.H1dual_quotient, realize_entries(rd.zero, rd.zero, transposed)));
    }
    return b;
}

ModuleMap rho_of(const EndoAlgebra& b, const Vec& x) { return combine_maps(b.rho, x, b.bundle.H0); }
ModuleMap lambda_of(const EndoAlgebra& b, const Vec& x) { return combine_maps(b.lambda, x, b.bundle.H1dual); }

// ---------------------------------------------------------------- quiver presentation

namespace {

// Span of the given vectors as an independent list.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, Field f, std::size_t n) {
    std::vector<Vec> out;
    for (auto i : independent_indices(vs, f, n)) out.push_back(vs[i]);
    return out;
}

std::size_t span_dim(const std::vector<Vec>& vs, Field f, std::size_t n) {
    return vs.empty() ? 0 : from_columns(vs, f, n).rank();
}

struct Splitter {
    const StructAlgebra& b;
    std::uint64_t seed;
    std::vector<Vec> primitive;

    void split(const Vec& e, std::uint64_t s) {
        const Field f = b.field;
        const std::size_t n = b.dim;
        std::vector<Vec> spanning;
        for (std::size_t i = 0; i < n; ++i) spanning.push_back(b.product(b.product(e, b.basis_elem(i)), e));
        std::vector<Vec> corner = span_basis(spanning, f, n);
        const std::size_t m = corner.size();
        Matrix cm = from_columns(corner, f, n);
        auto coords = [&](const Vec& y) { return *solve(cm, y); };
        std::vector<Matrix> ops;
        for (const Vec& c : corner) {
            Matrix op(f, m, m);
            for (std::size_t j = 0; j < m; ++j) {
                Vec col = coords(b.product(c, corner[j]));
                for (std::size_t k = 0; k < m; ++k) op.at(k, j) = col[k];
            }
            ops.push_back(std::move(op));
        }
        std::vector<Matrix> rad = radical_basis(ops, f);
        std::optional<Matrix> psi;
        if (m - rad.size() > 1) psi = find_splitting_element(ops, rad, f, s);
        if (!psi) {
            primitive.push_back(e);
            return;
        }
        Matrix y = matrix_power(*psi, m);
        std::vector<Vec> ker = nullspace_basis(y);
        Matrix img = column_space(y);
        Matrix both = Matrix::hstack({img, from_columns(ker, f, m)}, f, m);
        Vec z = *solve(both, coords(e));
        Vec uc = zero_vec(f, m), vc = zero_vec(f, m);
        for (std::size_t k = 0; k < img.cols(); ++k)
            for (std::size_t i = 0; i < m; ++i) uc[i] += img.at(i, k) * z[k];
        for (std::size_t k = 0; k < ker.size(); ++k)
            for (std::size_t i = 0; i < m; ++i) vc[i] += ker[k][i] * z[img.cols() + k];
        split(cm.apply(uc), s * 2 + 1);
        split(cm.apply(vc), s * 2 + 2);
    }
};

}  // namespace

QuiverPresentation present_as_quiver_algebra(const StructAlgebra& b, std::uint64_t seed) {
    QuiverPresentation qp;
    qp.dim = b.dim;
    if (b.dim == 0) return qp;
    const Field f = b.field;
    const std::size_t n = b.dim;

    std::vector<Matrix> regular;
    for (std::size_t i = 0; i < n; ++i) regular.push_back(b.left_mult(b.basis_elem(i)));
    std::vector<Vec> jac;
    for (const Matrix& m : radical_basis(regular, f)) jac.push_back(m.apply(b.unit));

    // powers of the radical
    std::vector<std::vector<Vec>> powers{jac};
    while (!powers.back().empty()) {
        std::vector<Vec> prods;
        for (const Vec& x : powers.back())
            for (const Vec& y : jac) prods.push_back(b.product(x, y));
        powers.push_back(span_basis(prods, f, n));
    }
    qp.loewy_length = powers.size();
    qp.layers.push_back(n - jac.size());
    for (std::size_t k = 0; k + 1 < powers.size(); ++k) qp.layers.push_back(powers[k].size() - powers[k + 1].size());

    Splitter sp{b, seed, {}};
    sp.split(b.unit, seed);
    const auto& prim = sp.primitive;
    const std::size_t k = prim.size();

    auto corner = [&](const Vec& ei, const std::vector<Vec>& space, const Vec& ej) {
        std::vector<Vec> out;
        for (const Vec& x : space) out.push_back(b.product(b.product(ei, x), ej));
        return out;
    };
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(b.basis_elem(i));

    // isomorphism classes of the projectives B e
    std::vector<int> cls(k, -1);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < reps.size() && cls[i] < 0; ++c) {
            const Vec& ej = prim[reps[c]];
            auto xs = corner(prim[i], all, ej), ys = corner(ej, all, prim[i]);
            std::vector<Vec> test = jac;
            const std::size_t jd = span_dim(jac, f, n);
            for (const Vec& x : xs)
                for (const Vec& y : ys) {
                    test.push_back(b.product(x, y));
                    if (span_dim(test, f, n) > jd) {
                        cls[i] = static_cast<int>(c);
                        break;
                    }
                    test.pop_back();
                }
        }
        if (cls[i] < 0) {
            cls[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    }
    const std::size_t v = reps.size();
    std::vector<std::size_t> pdim(v), mult(v, 0);
    for (std::size_t c = 0; c < v; ++c) {
        std::vector<Vec> be;
        for (const Vec& x : all) be.push_back(b.product(x, prim[reps[c]]));
        pdim[c] = span_dim(be, f, n);
    }
    for (std::size_t i = 0; i < k; ++i) ++mult[cls[i]];

    // connected components through nonzero corners
    std::vector<int> comp(v, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < v; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t d = 0; d < v; ++d) {
                if (comp[d] >= 0) continue;
                if (span_dim(corner(prim[reps[c]], all, prim[reps[d]]), f, n) ||
                    span_dim(corner(prim[reps[d]], all, prim[reps[c]]), f, n)) {
                    comp[d] = ncomp;
                    stack.push_back(d);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::size_t> order(v);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (comp[x] != comp[y]) return comp[x] < comp[y];
        return pdim[x] < pdim[y];
    });
    std::vector<int> label(v);
    for (std::size_t i = 0; i < v; ++i) label[order[i]] = static_cast<int>(i);

    qp.vertices = static_cast<int>(v);
    qp.projective_dims.resize(v);
    qp.multiplicities.resize(v);
    qp.idempotents.resize(v);
    for (std::size_t c = 0; c < v; ++c) {
        qp.projective_dims[label[c]] = pdim[c];
        qp.multiplicities[label[c]] = mult[c];
        qp.idempotents[label[c]] = prim[reps[c]];
    }
    const std::vector<Vec>& jac2 = powers.size() > 1 ? powers[1] : powers[0];
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            const Vec& ei = qp.idempotents[i];
            const Vec& ej = qp.idempotents[j];
            std::size_t count = span_dim(corner(ej, jac, ei), f, n) - span_dim(corner(ej, jac2, ei), f, n);
            for (std::size_t t = 0; t < count; ++t) qp.arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return qp;
}

}  // namespace tilt
