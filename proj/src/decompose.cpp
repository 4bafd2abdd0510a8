#include "tilt/matalg.hpp"
#include "tilt/module.hpp"

#include <stdexcept>

namespace tilt {

namespace {

std::vector<Matrix> endo_matrices(const Rep& m) {
    std::vector<Matrix> out;
    for (const ModuleMap& phi : hom_space(m, m)) out.push_back(total_matrix(m, m, phi));
    return out;
}

void split_into(const Rep& m, std::uint64_t seed, std::vector<Rep>& out) {
    if (m.is_zero()) return;
    const Field f = m.alg->field();
    std::vector<Matrix> endo = endo_matrices(m);
    std::vector<Matrix> rad = radical_basis(endo, f);
    if (endo.size() - rad.size() <= 1) {
        out.push_back(m);
        return;
    }
    auto psi = find_splitting_element(endo, rad, f, seed);
    if (!psi) {
        out.push_back(m);
        return;
    }
    // Fitting: m = ker psi^N + im psi^N
    Matrix big = matrix_power(*psi, m.total());
    Subspace ker, img;
    for (int v = 0; v < m.alg->vertices(); ++v) {
        const std::size_t o = m.offset(v), d = m.dim[v];
        Matrix blk = big.block(o, o, d, d);
        ker.push_back(from_columns(nullspace_basis(blk), f, d));
        img.push_back(column_space(blk));
    }
    split_into(restrict_to(m, ker).rep, seed + 1, out);
    split_into(restrict_to(m, img).rep, seed + 2, out);
}

}  // namespace

std::vector<Rep> indecomposable_summands(const Rep& m, std::uint64_t seed) {
    std::vector<Rep> out;
    split_into(m, seed, out);
    return out;
}

bool is_indecomposable(const Rep& m, std::uint64_t seed) {
    if (m.is_zero()) return false;
    return indecomposable_summands(m, seed).size() == 1;
}

bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed) {
    if (!same_algebra(m.alg, n.alg)) throw std::invalid_argument("is_isomorphic: modules over different algebras");
    if (m.dim != n.dim) return false;
    if (m.is_zero()) return true;
    const std::size_t e = hom_dim(m, m);
    if (hom_dim(n, n) != e || hom_dim(m, n) != e || hom_dim(n, m) != e) return false;
    std::vector<std::vector<Matrix>> blocks;
    for (ModuleMap& phi : hom_space(m, n)) blocks.push_back(std::move(phi.comp));
    return find_invertible(blocks, m.alg->field(), seed);
}

}  // namespace tilt
