#pragma once
// Finite-dimensional left modules as quiver representations, and their homological primitives.

#include "tilt/algebra.hpp"

#include <cstdint>
#include <vector>

namespace tilt {

struct Rep {
    AlgPtr alg;
    std::vector<std::size_t> dim;  // one entry per vertex
    std::vector<Matrix> maps;      // maps[a] : dim[src(a)] -> dim[tgt(a)], i.e. dim[tgt] x dim[src]

    std::size_t total() const;
    std::size_t offset(int v) const;
    bool is_zero() const { return total() == 0; }
    // Action of a basis path: a dim[tgt] x dim[src] matrix.
    Matrix act_basis(std::size_t b) const;
    // Action of the e_to x e_from component of x.
    Matrix act(const Elem& x, int from, int to) const;
    // Shapes and relations; throws on violation.
    void validate() const;
    std::string dim_str() const;
};

// One matrix per vertex, target-space x source-space.
struct ModuleMap {
    std::vector<Matrix> comp;
};

Rep zero_module(const AlgPtr& a);
Rep simple(const AlgPtr& a, int i);
Rep projective(const AlgPtr& a, int i);
Rep injective(const AlgPtr& a, int i);
Rep regular_module(const AlgPtr& a);
// Vector-space dual: a module over the opposite algebra.
Rep dualize(const Rep& m);
ModuleMap dualize_map(const ModuleMap& f);
Rep nakayama_projective(const AlgPtr& a, int i);
Rep direct_sum(const std::vector<Rep>& parts);
Rep direct_sum(const AlgPtr& a, const std::vector<Rep>& parts);

// Every long enough path acts as zero.
bool is_nilpotent_rep(const Rep& m);

ModuleMap identity_map(const Rep& m);
ModuleMap zero_map(const Rep& from, const Rep& to);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool is_module_map(const Rep& from, const Rep& to, const ModuleMap& f);
Matrix total_matrix(const Rep& from, const Rep& to, const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);

std::vector<ModuleMap> hom_space(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);

// Subspaces per vertex, as matrices with independent columns.
using Subspace = std::vector<Matrix>;

struct SubModule {
    Rep rep;
    ModuleMap incl;
};
struct QuotientModule {
    Rep rep;
    ModuleMap proj;
};
// The submodule spanned per vertex by the given columns (caller guarantees invariance).
SubModule restrict_to(const Rep& m, const Subspace& s);
QuotientModule quotient(const Rep& m, const Subspace& s);
bool is_submodule(const Rep& m, const Subspace& s);
// Smallest submodule containing the given vectors (vertex, vector).
Subspace generated_subspace(const Rep& m, const Subspace& seeds);

SubModule kernel(const Rep& from, const Rep& to, const ModuleMap& f);
QuotientModule cokernel(const Rep& from, const Rep& to, const ModuleMap& f);
SubModule image(const Rep& from, const Rep& to, const ModuleMap& f);

Subspace radical_subspace(const Rep& m);
Subspace socle_subspace(const Rep& m);
SubModule radical(const Rep& m);
QuotientModule top(const Rep& m);
SubModule socle(const Rep& m);
// Multiplicity of each simple in top(m).
std::vector<std::size_t> top_multiplicities(const Rep& m);

struct CanonicalSequence {
    Rep tau;
    ModuleMap incl;
    Rep pi;
    ModuleMap proj;
};
CanonicalSequence trace(const Rep& generator, const Rep& x);

struct TensorResult {
    std::size_t dim = 0;
    std::vector<std::size_t> block;  // offset of M_v (x) N_v inside the big space
    std::size_t big = 0;
    Matrix proj;  // dim x big
    Matrix lift;  // big x dim
};
// M is a right module given as a representation of the opposite algebra.
TensorResult tensor_over_A(const Rep& right, const Rep& left);
// Map induced on tensor products by module maps f: M -> M' (over the opposite) and g: N -> N'.
Matrix tensor_map(const Rep& m1, const Rep& n1, const TensorResult& t1, const Rep& m2, const Rep& n2,
                  const TensorResult& t2, const ModuleMap& f, const ModuleMap& g);

std::size_t ext1(const Rep& m, const Rep& n);
std::size_t ext2(const Rep& m, const Rep& n);
// Via a presentation of the left module.
std::size_t tor1(const Rep& right, const Rep& left);
// Via a presentation of the right module.
std::size_t tor1_via_right(const Rep& right, const Rep& left);

bool is_isomorphic(const Rep& m, const Rep& n, std::uint64_t seed = 0);
std::vector<Rep> indecomposable_summands(const Rep& m, std::uint64_t seed = 0);
bool is_indecomposable(const Rep& m, std::uint64_t seed = 0);

}  // namespace tilt
