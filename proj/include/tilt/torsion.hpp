#pragma once
// The classes X(P) = Ker Hom(-, H^{-1}(nu P)) and Y(P) = Ker Hom(H^0(P), -), canonical sequences,
// and torsion-pair verification against a finite universe of modules.

#include "tilt/complex.hpp"
#include "tilt/enumerate.hpp"

#include <optional>
#include <string>

namespace tilt {

enum class Verdict { verified, refuted, inconclusive };
std::string verdict_name(Verdict v);

class Membership {
public:
    explicit Membership(const TwoTermComplex& p);
    const TwoTermComplex& complex() const { return p_; }
    const CohomologyBundle& bundle() const { return b_; }
    bool in_X(const Rep& m) const;             // Hom(M, H^{-1}(nu P)) = 0
    bool in_X_by_tensor(const Rep& m) const;   // H^1(P*) (x)_A M = 0
    bool in_Y(const Rep& m) const;             // Hom(H^0 P, M) = 0
    CanonicalSequence canonical_sequence(const Rep& m) const;

private:
    TwoTermComplex p_;
    CohomologyBundle b_;
};

std::optional<Rep> search_intersection(const Membership& m, const std::vector<Rep>& universe);

struct TorsionPairReport {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Rep> witness;
    bool h0_in_X = false;
    std::string intersection_zero;  // refuted | certified-up-to-bound | unchecked
    std::size_t universe_size = 0;
    std::size_t canonical_checks = 0;
    std::size_t canonical_failures = 0;
    std::size_t closure_failures = 0;
    std::optional<bool> splitting;
    std::vector<std::string> notes;
};
// `universe` is the enumerated inventory when the field is finite, absent otherwise.
// `generation_exact` passes in an exact proof that X and Y meet only in zero (from the K0 test).
TorsionPairReport verify_torsion_pair(const Membership& m, const std::vector<Rep>* universe, bool generation_exact);

// Every sampled member M of X has Ext^1(H0, M) = 0.
bool ext_projective_check(const Membership& m, const std::vector<Rep>& sample);
// Every sampled member N of Y has Ext^1(N, H^{-1}(nu P)) = 0.
bool ext_injective_check(const Membership& m, const std::vector<Rep>& sample);

struct SplittingResult {
    bool splitting = true;
    std::optional<std::pair<Rep, Rep>> witness;
};
// Ext^2(X, Y) = 0 over the samples; the caller must have verified that the complex is tilting.
SplittingResult is_splitting(const Membership& m, bool tilting_verified, const std::vector<Rep>& x_sample,
                             const std::vector<Rep>& y_sample);

}  // namespace tilt
