#pragma once
// The opposite endomorphism algebra of a two-term complex in the homotopy category,
// its bimodule actions on the cohomologies, and its presentation by a quiver.

#include "tilt/complex.hpp"

namespace tilt {

// An algebra given by structure constants over a basis.
struct StructAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::vector<Vec>> mult;  // mult[i][j] = b_i * b_j
    Vec unit;

    Vec product(const Vec& x, const Vec& y) const;
    Vec basis_elem(std::size_t i) const;
    // Matrix of y |-> x * y.
    Matrix left_mult(const Vec& x) const;
    bool is_associative() const;
};
StructAlgebra as_struct_algebra(const AlgPtr& a);

struct EndoAlgebra {
    TwoTermComplex complex;
    CohomologyBundle bundle;
    HomClasses classes;
    std::vector<ChainMap> basis;
    StructAlgebra algebra;  // product b_i * b_j is the chain map b_j after b_i
    // rho[i]: action of basis element i on H0 (H0 is a right B-module: h.b = rho(b) h).
    std::vector<ModuleMap> rho;
    // lambda[i]: action on H1dual (a left B-module).
    std::vector<ModuleMap> lambda;
};
EndoAlgebra endomorphism_algebra(const TwoTermComplex& p);

ModuleMap rho_of(const EndoAlgebra& b, const Vec& x);
ModuleMap lambda_of(const EndoAlgebra& b, const Vec& x);

struct QuiverPresentation {
    std::size_t dim = 0;
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based labels
    std::size_t loewy_length = 0;
    std::vector<std::size_t> layers;           // dim of J^k / J^{k+1}
    std::vector<std::size_t> projective_dims;  // dim of B e for each vertex
    std::vector<std::size_t> multiplicities;   // primitive idempotents per vertex class
    std::vector<Vec> idempotents;              // one primitive idempotent per vertex
};
// Vertices are grouped by connected component in order of discovery and, inside a component,
// sorted by the dimension of the projective B e.  An arrow i -> j records e_j (J / J^2) e_i.
QuiverPresentation present_as_quiver_algebra(const StructAlgebra& b, std::uint64_t seed = 0);

}  // namespace tilt
