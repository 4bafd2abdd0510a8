#include "tilt/commands.hpp"

#include "tilt/endo.hpp"
#include "tilt/tilting.hpp"

namespace tilt {

std::string Report::render() const {
    std::string s;
    for (auto& [k, v] : machine) s += k + ": " + v + "\n";
    if (!human.empty()) s += "\n";
    for (auto& line : human) s += line + "\n";
    if (!appendix.empty()) s += "\n" + appendix;
    return s;
}

int Report::exit_code() const {
    auto it = machine.find("verdict");
    if (it == machine.end()) return 3;
    if (it->second == "verified" || it->second == "ok") return 0;
    if (it->second == "refuted") return 1;
    if (it->second == "inconclusive") return 2;
    return 3;
}

Report error_report(const std::string& message) {
    Report r;
    r.set("verdict", std::string("error"));
    r.set("error", message);
    return r;
}

namespace {

std::string join_dims(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
}

std::string witness_text(const std::optional<Rep>& w) { return w ? w->dim_str() : "none"; }

struct Universe {
    std::vector<Rep> reps;
    bool enumerated = false;
    std::vector<std::size_t> bound;
    const std::vector<Rep>* oracle() const { return enumerated ? &reps : nullptr; }
};

// Enumerated inventory over a finite field; over Q a small hand-picked sample that is not an oracle.
Universe universe_for(const AlgPtr& a, const CommandOptions& opt, const std::vector<Rep>& extra) {
    Universe u;
    if (a->field().is_finite()) {
        u.bound = opt.bound ? *opt.bound : default_bound(a);
        if (u.bound.size() != static_cast<std::size_t>(a->vertices()))
            throw std::invalid_argument("bound has " + std::to_string(u.bound.size()) + " entries, expected " +
                                        std::to_string(a->vertices()));
        u.reps = enumerate(a, u.bound, default_budget()).reps;
        u.enumerated = true;
    } else {
        u.reps = small_universe(a, extra, opt.seed);
    }
    return u;
}

void describe_algebra(Report& r, const AlgPtr& a) {
    r.set("algebra.field", a->field().name());
    r.set("algebra.vertices", static_cast<std::size_t>(a->vertices()));
    r.set("algebra.dim", a->dim());
}

void describe_universe(Report& r, const Universe& u) {
    r.set("universe.kind", std::string(u.enumerated ? "enumerated" : "sample"));
    r.set("universe.bound", u.enumerated ? join_dims(u.bound) : std::string("none"));
    r.set("universe.size", u.reps.size());
}

void put_tilting(Report& r, const TiltingVerdict& v) {
    r.set("tilting.verdict", verdict_name(v.overall));
    r.set("tilting.presilting_up", v.presilting_up);
    r.set("tilting.presilting_down", v.presilting_down);
    r.set("tilting.h0_in_X", v.h0_in_X);
    r.set("tilting.hminus1_in_Y", v.hminus1_in_Y);
    r.set("tilting.k0_spans", v.k0_spans);
    r.set("tilting.generation", v.generation);
    r.set("tilting.summands", v.summands);
    r.set("tilting.simples", static_cast<std::size_t>(v.simples));
    r.set("tilting.summand_heuristic", v.summand_heuristic);
    r.set("tilting.cross_checks", v.cross_checks.size());
    r.set("tilting.witness", witness_text(v.witness));
    for (auto& c : v.cross_checks) r.human.push_back("cross-check: " + c);
}

void put_torsion(Report& r, const TorsionPairReport& t) {
    r.set("torsion.verdict", verdict_name(t.verdict));
    r.set("torsion.h0_in_X", t.h0_in_X);
    r.set("torsion.intersection_zero", t.intersection_zero);
    r.set("torsion.universe_size", t.universe_size);
    r.set("torsion.sample_canonical_checks", t.canonical_checks);
    r.set("torsion.canonical_failures", t.canonical_failures);
    r.set("torsion.splitting", t.splitting ? std::string(*t.splitting ? "true" : "false") : std::string("unchecked"));
    r.set("torsion.witness", witness_text(t.witness));
    for (auto& n : t.notes) r.human.push_back("torsion: " + n);
}

void describe_cohomology(Report& r, const CohomologyBundle& b) {
    r.human.push_back("H0 has dimension vector " + b.H0.dim_str());
    r.human.push_back("H-1 has dimension vector " + b.Hminus1.dim_str());
    r.human.push_back("H-1 of the Nakayama complex has dimension vector " + b.Hminus1_nu.dim_str());
}

struct Analysis {
    TiltingVerdict tilting;
    TorsionPairReport torsion;
};

Analysis analyse(const Membership& mem, const Universe& u, std::uint64_t seed) {
    Analysis a;
    a.tilting = is_tilting(mem, u.oracle(), seed);
    a.torsion = verify_torsion_pair(mem, u.oracle(), a.tilting.generation == "K0-exact");
    if (!u.enumerated && a.torsion.verdict != Verdict::refuted) {
        // a sample cannot certify, but a module in both classes still refutes
        if (auto w = search_intersection(mem, u.reps)) {
            if (a.tilting.generation == "K0-exact")
                throw std::logic_error("cross-check failed: K0 certificate contradicted by a sample module");
            a.torsion.verdict = Verdict::refuted;
            a.torsion.intersection_zero = "refuted";
            a.torsion.witness = w;
            a.torsion.notes.assign(1, "witness found in the sample universe");
        }
    }
    if (a.tilting.overall == Verdict::verified && u.enumerated)
        a.torsion.splitting = is_splitting(mem, true, u.reps, u.reps).splitting;
    return a;
}

}  // namespace

Report cmd_check(const AlgDocument& doc, const std::string& name, const CommandOptions& opt) {
    Report r;
    const TwoTermComplex& p = doc.complex(name);
    Membership mem(p);
    Universe u = universe_for(doc.alg, opt, {});
    Analysis a = analyse(mem, u, opt.seed);
    describe_algebra(r, doc.alg);
    describe_universe(r, u);
    r.set("complex", name);
    put_tilting(r, a.tilting);
    put_torsion(r, a.torsion);
    r.set("verdict", verdict_name(a.tilting.overall));
    describe_cohomology(r, mem.bundle());
    if (a.tilting.witness) r.appendix += emit_module("tilting_witness", *a.tilting.witness);
    if (a.torsion.witness) r.appendix += emit_module("torsion_witness", *a.torsion.witness);
    return r;
}

Report cmd_torsion(const AlgDocument& doc, const std::string& name, const CommandOptions& opt) {
    Report r;
    const TwoTermComplex& p = doc.complex(name);
    Membership mem(p);
    Universe u = universe_for(doc.alg, opt, {});
    Analysis a = analyse(mem, u, opt.seed);
    describe_algebra(r, doc.alg);
    describe_universe(r, u);
    r.set("complex", name);
    put_torsion(r, a.torsion);
    if (u.enumerated) {
        r.set("torsion.ext_projective", ext_projective_check(mem, u.reps));
        r.set("torsion.ext_injective", ext_injective_check(mem, u.reps));
        std::size_t xs = 0, ys = 0;
        for (const Rep& m : u.reps) {
            xs += mem.in_X(m) ? 1 : 0;
            ys += mem.in_Y(m) ? 1 : 0;
        }
        r.set("torsion.x_members", xs);
        r.set("torsion.y_members", ys);
    }
    r.set("verdict", verdict_name(a.torsion.verdict));
    describe_cohomology(r, mem.bundle());
    if (a.torsion.witness) r.appendix += emit_module("torsion_witness", *a.torsion.witness);
    return r;
}

Report cmd_endo(const AlgDocument& doc, const std::string& name, const CommandOptions& opt) {
    Report r;
    EndoAlgebra b = endomorphism_algebra(doc.complex(name));
    QuiverPresentation q = present_as_quiver_algebra(b.algebra, opt.seed);
    describe_algebra(r, doc.alg);
    r.set("complex", name);
    r.set("endo.dim", q.dim);
    r.set("endo.vertices", static_cast<std::size_t>(q.vertices));
    std::string arrows;
    for (auto& [s, t] : q.arrows) arrows += (arrows.empty() ? "" : ", ") + std::to_string(s + 1) + "->" + std::to_string(t + 1);
    r.set("endo.arrows", arrows.empty() ? std::string("none") : arrows);
    r.set("endo.arrow_count", q.arrows.size());
    r.set("endo.loewy_length", q.loewy_length);
    r.set("endo.layers", q.layers.empty() ? std::string("none") : join_dims(q.layers));
    r.set("endo.projective_dims", q.projective_dims.empty() ? std::string("none") : join_dims(q.projective_dims));
    r.set("verdict", std::string("ok"));
    r.human.push_back("B = End(P)^op has dimension " + std::to_string(q.dim) + " and " +
                      std::to_string(q.vertices) + " vertices");
    r.human.push_back("relations of B are homogeneous of degree at most " +
                      std::to_string(q.loewy_length > 0 ? q.loewy_length : 0) + " (Loewy length)");
    return r;
}

Report cmd_construct(const AlgDocument& doc, const std::string& x_name, const std::string& y_name,
                     const CommandOptions& opt) {
    Report r;
    const AlgPtr& a = doc.alg;
    Rep x = x_name.empty() ? zero_module(a) : doc.module(x_name);
    Rep y = y_name.empty() ? zero_module(a) : doc.module(y_name);
    Universe u = universe_for(a, opt, {x, y});
    describe_algebra(r, a);
    describe_universe(r, u);
    r.set("construct.x_gen", x_name.empty() ? std::string("0") : x_name);
    r.set("construct.y_cogen", y_name.empty() ? std::string("0") : y_name);
    ConstructReport c;
    try {
        c = construct_from_torsion(x, y, u.reps, false);
    } catch (const PreconditionFailure& e) {
        r.set("verdict", std::string("error"));
        r.set("construct.precondition", std::string(e.what()));
        r.set("construct.witness", e.witness.dim_str());
        r.human.push_back("precondition failed: " + std::string(e.what()));
        r.appendix = emit_module("witness", e.witness);
        return r;
    }
    for (auto& w : c.warnings) r.human.push_back("warning: " + w);
    r.set("construct.universe_exhaustive", false);
    r.set("construct.x_mismatches", c.x_mismatches);
    r.set("construct.y_mismatches", c.y_mismatches);
    Membership mem(c.complex);
    TiltingVerdict v = is_tilting(mem, u.oracle(), opt.seed);
    put_tilting(r, v);
    const bool classes_agree = c.x_mismatches == 0 && c.y_mismatches == 0;
    r.set("construct.classes_agree", classes_agree);
    Verdict overall = v.overall;
    if (!classes_agree) overall = Verdict::refuted;
    r.set("verdict", verdict_name(overall));
    r.appendix = emit_complex("CONSTRUCTED", c.complex);
    return r;
}

Report cmd_bb_verify(const AlgDocument& doc, const std::string& name, const CommandOptions& opt) {
    Report r;
    const TwoTermComplex& p = doc.complex(name);
    Membership mem(p);
    const CohomologyBundle& b = mem.bundle();
    Universe u = universe_for(doc.alg, opt, {b.H0, b.Hminus1, b.Hminus1_nu});
    Analysis a = analyse(mem, u, opt.seed);
    describe_algebra(r, doc.alg);
    describe_universe(r, u);
    r.set("complex", name);
    put_torsion(r, a.torsion);
    if (a.torsion.verdict != Verdict::verified) {
        r.set("verdict", std::string("inconclusive"));
        r.human.push_back("torsion pair not verified; round trips skipped");
        return r;
    }
    EndoAlgebra e = endomorphism_algebra(p);
    RoundTripReport rt = bb_round_trips(e, mem, u.reps, opt.seed);
    r.set("bb.x_members", rt.x_members);
    r.set("bb.y_members", rt.y_members);
    r.set("bb.x_failures", rt.x_failures);
    r.set("bb.y_failures", rt.y_failures);
    r.set("bb.membership_failures", rt.membership_failures);
    r.set("bb.endo_dim", e.algebra.dim);
    for (auto& f : rt.failures) r.human.push_back("failure: " + f);
    r.set("verdict", std::string(rt.ok() ? "verified" : "refuted"));
    return r;
}

Report cmd_enumerate(const AlgDocument& doc, const CommandOptions& opt) {
    Report r;
    const AlgPtr& a = doc.alg;
    auto bound = opt.bound ? *opt.bound : default_bound(a);
    Inventory inv = enumerate(a, bound, default_budget());
    describe_algebra(r, a);
    r.set("enumerate.bound", join_dims(bound));
    r.set("enumerate.classes", inv.reps.size());
    r.set("enumerate.candidates", static_cast<std::size_t>(inv.candidates));
    r.set("verdict", std::string("ok"));
    for (std::size_t i = 0; i < inv.reps.size(); ++i)
        r.appendix += (i ? "\n" : "") + emit_module("M" + std::to_string(i + 1), inv.reps[i]);
    return r;
}

}  // namespace tilt
