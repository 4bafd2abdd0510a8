#include "CLI11.hpp"
#include "tilt/commands.hpp"
#include "tilt/enumerate.hpp"

#include <iostream>

namespace {

struct Args {
    std::string file;
    std::string complex = "P";
    std::string bound;
    std::string field_override;
    std::string x_gen, y_cogen;
    std::uint64_t seed = 0;
};

int run(const std::string& verb, const Args& args) {
    using namespace tilt;
    Report report;
    try {
        std::optional<Field> field;
        if (!args.field_override.empty()) field = parse_field(args.field_override);
        AlgDocument doc = load_alg(args.file, field);
        CommandOptions opt;
        opt.seed = args.seed;
        if (!args.bound.empty()) opt.bound = parse_bound(args.bound, doc.alg->vertices());
        if (verb == "check") report = cmd_check(doc, args.complex, opt);
        else if (verb == "torsion") report = cmd_torsion(doc, args.complex, opt);
        else if (verb == "endo") report = cmd_endo(doc, args.complex, opt);
        else if (verb == "construct") report = cmd_construct(doc, args.x_gen, args.y_cogen, opt);
        else if (verb == "bb-verify") report = cmd_bb_verify(doc, args.complex, opt);
        else report = cmd_enumerate(doc, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        report = error_report(e.what());
    }
    std::cout << report.render();
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-term complexes over quiver algebras: tilting, torsion pairs, equivalences"};
    app.require_subcommand(1);
    Args args;
    std::string chosen;
    auto add = [&](const std::string& verb, const std::string& help, bool complex, bool bound, bool torsion) {
        CLI::App* sub = app.add_subcommand(verb, help);
        sub->add_option("file", args.file, "ALG file")->required();
        if (complex) sub->add_option("--complex", args.complex, "complex name")->capture_default_str();
        if (bound) sub->add_option("--bound", args.bound, "dimension-vector cap, e.g. 2,2,2,2");
        if (torsion) {
            sub->add_option("--x-gen", args.x_gen, "module generating the torsion class");
            sub->add_option("--y-cogen", args.y_cogen, "module cogenerating the torsion-free class");
        }
        sub->add_option("--field-override", args.field_override, "read the file over Q or F<p> instead");
        sub->add_option("--seed", args.seed, "seed for randomized searches")->capture_default_str();
        sub->callback([&chosen, verb] { chosen = verb; });
    };
    add("check", "decide whether a complex is tilting and verify its torsion pair", true, true, false);
    add("torsion", "verify the torsion pair of a complex", true, true, false);
    add("endo", "present End(P)^op as a quiver algebra", true, false, false);
    add("construct", "build a tilting complex from a generator and a cogenerator", false, true, true);
    add("bb-verify", "round-trip modules through the equivalences", true, true, false);
    add("enumerate", "list isomorphism classes of modules up to a bound", false, true, false);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    return run(chosen, args);
}
