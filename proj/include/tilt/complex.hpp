#pragma once
// Two-term complexes of projectives: realization, cohomology, A-dual, Nakayama image,
// morphisms in the homotopy category, and Krull-Schmidt splitting up to homotopy.

#include "tilt/proj.hpp"

#include <cstdint>

namespace tilt {

struct RealizedComplex {
    ProjSum minus1, zero;
    ModuleMap d;
};
RealizedComplex realize(const TwoTermComplex& p);

// A complex of modules in degrees -1 and 0.
struct ModuleComplex {
    Rep minus1, zero;
    ModuleMap d;
};
ModuleComplex stalk(const Rep& x);
ModuleComplex as_module_complex(const RealizedComplex& r);

struct CohomologyBundle {
    Rep H0;          // coker d
    Rep Hminus1;     // ker d
    Rep H1dual;      // coker of the A-dual differential (over the opposite algebra)
    Rep Hminus1_nu;  // ker of the Nakayama image
    QuotientModule H0_quotient;
    SubModule Hminus1_sub;
    QuotientModule H1dual_quotient;
};
CohomologyBundle cohomology(const TwoTermComplex& p);

// Hom_A(-, A) applied termwise, over the opposite algebra: degree 0 of the result is the dual of
// P^0 and sits in the `minus1` slot, the dual of P^{-1} in the `zero` slot (so its H0 is H^1 of the dual).
TwoTermComplex a_dual(const TwoTermComplex& p);

struct InjectiveComplex {
    std::vector<int> minus1, zero;
    Rep i_minus1, i_zero;
    ModuleMap d;
};
InjectiveComplex nakayama_complex(const TwoTermComplex& p);

// Morphisms P -> Q[shift] in the homotopy category.  Coordinates of a morphism follow Yoneda:
//   shift 0:  images of the generators of P^{-1} in Q^{-1}, then of P^0 in Q^0;
//   shift 1:  images of the generators of P^{-1} in Q^0;
//   shift -1: images of the generators of P^0 in Q^{-1}.
struct HomClasses {
    int shift = 0;
    std::size_t dim = 0;
    std::size_t coord_len = 0;
    std::vector<Vec> representatives;  // one per class, independent modulo null-homotopic maps
    Matrix boundaries;                 // columns span the null-homotopic maps
    std::vector<Vec> cycles;           // all chain maps
    std::string note;
};
HomClasses hom_homotopy(const TwoTermComplex& p, const ModuleComplex& q, int shift);
HomClasses hom_homotopy(const TwoTermComplex& p, const TwoTermComplex& q, int shift);
// Class coordinates (with respect to `representatives`) of a chain map given in Yoneda coordinates.
Vec class_coordinates(const HomClasses& h, const Vec& chain_map);

// Chain map between complexes of projectives in A-matrix form.
struct ChainMap {
    std::vector<Elem> minus1;  // target.minus1 x source.minus1
    std::vector<Elem> zero;    // target.zero x source.zero
};
ChainMap chain_map_from_coordinates(const TwoTermComplex& p, const TwoTermComplex& q, const Vec& coords);
// g after f, for f: src -> mid and g: mid -> tgt.
ChainMap compose(const ChainMap& g, const ChainMap& f, const TwoTermComplex& src, const TwoTermComplex& mid,
                 const TwoTermComplex& tgt);
ChainMap identity_chain_map(const TwoTermComplex& p);
Vec chain_map_coordinates(const TwoTermComplex& p, const TwoTermComplex& q, const ChainMap& f);
bool is_chain_map(const TwoTermComplex& p, const TwoTermComplex& q, const ChainMap& f);

bool is_contractible(const TwoTermComplex& p);
// Indecomposable summands up to homotopy, contractible ones removed.
std::vector<TwoTermComplex> complex_summands(const TwoTermComplex& p, std::uint64_t seed = 0);
// Isomorphism of complexes (for complexes without contractible summands this is homotopy equivalence).
bool complexes_isomorphic(const TwoTermComplex& p, const TwoTermComplex& q, std::uint64_t seed = 0);
bool add_equal(const TwoTermComplex& p, const TwoTermComplex& q, std::uint64_t seed = 0);
// Summands grouped into isomorphism classes (one representative each).
std::vector<TwoTermComplex> distinct_summands(const TwoTermComplex& p, std::uint64_t seed = 0);

}  // namespace tilt
