#pragma once
// Direct sums of indecomposable projectives, maps between them as matrices over the algebra,
// and minimal projective / injective presentations.

#include "tilt/module.hpp"

namespace tilt {

// A realized direct sum P(v_1) + ... + P(v_k).
struct ProjSum {
    AlgPtr alg;
    std::vector<int> verts;
    Rep rep;
    // local[r][b]: position of basis path b of P(verts[r]) inside rep's space at vertex tgt(b)
    std::vector<std::vector<std::size_t>> local;
};
ProjSum realize_projectives(const AlgPtr& a, const std::vector<int>& verts);

// Map between realized sums; entries is to.size() x from.size() row-major, and entry (r, c)
// lies in e_{from[c]} A e_{to[r]} and acts by right multiplication from summand c into summand r.
ModuleMap realize_entries(const ProjSum& from, const ProjSum& to, const std::vector<Elem>& entries);
// Map out of a realized sum fixed by the images of the summand generators (images[r] in target at verts[r]).
ModuleMap yoneda_map(const ProjSum& from, const Rep& target, const std::vector<Vec>& images);
// A vector of the realized sum at vertex u, split into one algebra element per summand.
std::vector<Elem> vector_to_entries(const ProjSum& p, int u, const Vec& v);
Vec entries_to_vector(const ProjSum& p, int u, const std::vector<Elem>& e);

// P^{-1} -> P^0 with entries as above (rows index degree 0, columns degree -1).
struct TwoTermComplex {
    AlgPtr alg;
    std::vector<int> minus1;
    std::vector<int> zero;
    std::vector<Elem> d;

    const Elem& entry(std::size_t r, std::size_t c) const { return d[r * minus1.size() + c]; }
    Elem& entry(std::size_t r, std::size_t c) { return d[r * minus1.size() + c]; }
    void validate() const;
};
TwoTermComplex make_complex(const AlgPtr& a, std::vector<int> minus1, std::vector<int> zero);
TwoTermComplex stalk_projective(const AlgPtr& a, const std::vector<int>& verts);  // 0 -> sum P(v)
TwoTermComplex free_complex(const AlgPtr& a);                                      // 0 -> A
TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts);
// Composite of A-matrices: g after f.
std::vector<Elem> compose_entries(const AlgPtr& a, const std::vector<Elem>& g, std::size_t g_rows,
                                  const std::vector<Elem>& f, std::size_t f_rows, std::size_t f_cols);

struct Cover {
    ProjSum proj;
    ModuleMap map;  // proj.rep -> module
};
Cover projective_cover(const Rep& m);

struct Envelope {
    std::vector<int> verts;
    Rep inj;
    ModuleMap map;  // module -> inj
};
Envelope injective_envelope(const Rep& m);

TwoTermComplex min_proj_presentation(const Rep& m);

// 0 -> M -> I^0 -> I^1, obtained by dualizing a minimal projective presentation of D(M).
struct InjectivePresentation {
    TwoTermComplex dual_presentation;  // over the opposite algebra
    Rep i0, i1;
    ModuleMap d;
};
InjectivePresentation min_inj_presentation(const Rep& m);

}  // namespace tilt
