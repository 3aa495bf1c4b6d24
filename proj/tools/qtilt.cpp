// Command-line front end: decompositions, characters, presentation checks,
// and the persistent structure-constant table.
//
// Exit codes: 0 success, 1 failed check, 2 malformed input, 3 conservation
// failure, 4 unwritable cache.  All logs go to stderr; with --format json the
// only bytes on stdout form a single JSON document.

#include "qtilt/char_formulas.hpp"
#include "qtilt/fusion.hpp"
#include "qtilt/json_io.hpp"
#include "qtilt/presentation.hpp"
#include "qtilt/table.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace qtilt;

constexpr int kOk = 0;
constexpr int kFailedCheck = 1;
constexpr int kMalformed = 2;
constexpr int kConservation = 3;
constexpr int kCache = 4;

struct Options {
    long long l = 2;
    long long p = 3;
    long long n = 0;
    long long max = 0;
    std::string format = "text";
    std::string cache = "qtilt-cache";
    unsigned long long seed = 1;
    bool no_verify = false;
};

Params params_of(const Options& opt) {
    const Params params{opt.l, opt.p};
    validate(params);
    return params;
}

bool json_mode(const Options& opt) { return opt.format == "json"; }

void add_param_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--l", opt.l, "Quantum parameter (root-of-unity order)");
    cmd->add_option("--p", opt.p, "Classical characteristic (prime, coprime to --l)");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
}

void emit(const Json& report, const Options& opt) {
    if (json_mode(opt)) {
        std::cout << report.dump() << "\n";
    }
}

Json summand_json(const TwistLabel& lbl, const Int& mult, const Params& params) {
    const Character ch = label_character(lbl, params);
    return Json{{"label", label_to_json(lbl)},
                {"mult", coeff_to_json(mult)},
                {"tilting", is_tilting_label(lbl, params)},
                {"simple", is_simple_label(lbl, params)},
                {"character", character_to_json(ch)},
                {"dimension", coeff_to_json(dimension(ch))}};
}

Json weights_json(const std::vector<Weight>& ws) {
    Json out = Json::array();
    for (const Weight w : ws) {
        out.push_back(weight_to_json(w));
    }
    return out;
}

int cmd_decompose(const Options& opt, const std::string& left, const std::string& right) {
    const Params params = params_of(opt);
    const Weight w1 = parse_weight(left);
    const Weight w2 = parse_weight(right);

    const SimpleTensorTrace trace = simple_tensor_simple_trace(w1, w2, params);

    bool verified = false;
    if (!opt.no_verify) {
        const Character lhs = simple_character(w1, params) * simple_character(w2, params);
        const Character rhs = class_vector_character(trace.result, params);
        if (lhs != rhs) {
            std::cerr << "decompose: character conservation failed (internal error)\n";
            return kConservation;
        }
        verified = true;
        std::cerr << "decompose: character conservation verified\n";
    }

    Json layers = Json::array();
    for (std::size_t k = 0; k < trace.layers.size(); ++k) {
        const StrikeOutTrace& layer = trace.layers[k];
        const long long level = static_cast<long long>(k) - 1;
        layers.push_back(Json{{"level", level},
                              {"modulus", level < 0 ? params.ell : params.p},
                              {"listed", weights_json(layer.listed)},
                              {"struck", weights_json(layer.struck)},
                              {"survivors", weights_json(layer.survivors)}});
    }
    Json summands = Json::array();
    for (const auto& [lbl, mult] : trace.result.summands) {
        summands.push_back(summand_json(lbl, mult, params));
    }
    const Json report{{"left", weight_to_json(w1)},
                      {"right", weight_to_json(w2)},
                      {"params", Json{{"l", params.ell}, {"p", params.p}}},
                      {"summands", std::move(summands)},
                      {"layers", std::move(layers)},
                      {"verified", verified}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << "L" << to_string(w1) << " (x) L" << to_string(w2) << " =\n";
        for (const auto& [lbl, mult] : trace.result.summands) {
            std::cout << "  " << mult << " * t" << to_string(lbl)
                      << "  (dim " << dimension(label_character(lbl, params)) << ")\n";
        }
    }
    return kOk;
}

int cmd_character(const Options& opt, const std::string& kind, const std::string& operand) {
    Character ch;
    Json input;
    if (kind == "weyl") {
        const Weight w = parse_weight(operand);
        ch = weyl_character(w);
        input = weight_to_json(w);
    } else if (kind == "tilting") {
        const Weight w = parse_weight(operand);
        ch = tilting_character(w, params_of(opt));
        input = weight_to_json(w);
    } else if (kind == "simple") {
        const Weight w = parse_weight(operand);
        ch = simple_character(w, params_of(opt));
        input = weight_to_json(w);
    } else if (kind == "label") {
        const TwistLabel lbl = parse_label(operand);
        ch = label_character(lbl, params_of(opt));
        input = label_to_json(lbl);
    } else {
        throw std::invalid_argument("character: unknown kind '" + kind + "'");
    }
    const Json report{{"kind", kind},
                      {"input", std::move(input)},
                      {"character", character_to_json(ch)},
                      {"dimension", coeff_to_json(dimension(ch))}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << to_string(ch) << "\ndimension: " << dimension(ch) << "\n";
    }
    return kOk;
}

int cmd_relations(const Options& opt) {
    const Params params = params_of(opt);
    const KernelReport rep = verify_kernel(opt.n, params);
    Json gens = Json::array();
    for (std::size_t i = 0; i < rep.generator_vanishes.size(); ++i) {
        gens.push_back(Json{{"index", i}, {"vanishes", static_cast<bool>(rep.generator_vanishes[i])}});
        if (!rep.generator_vanishes[i]) {
            std::cerr << "relations: generator #" << i << " does not vanish\n";
        }
    }
    if (rep.det_checked && rep.literal_det_relation_vanishes) {
        std::cerr << "relations: literal determinant variant unexpectedly vanishes\n";
    }
    const Json report{{"n", rep.n},
                      {"params", Json{{"l", params.ell}, {"p", params.p}}},
                      {"generators", std::move(gens)},
                      {"det_checked", rep.det_checked},
                      {"det_relation_vanishes", rep.det_relation_vanishes},
                      {"literal_det_relation_vanishes", rep.literal_det_relation_vanishes},
                      {"pass", rep.pass()}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << (rep.pass() ? "pass" : "fail") << " ("
                  << rep.generator_vanishes.size() << " generators)\n";
    }
    return rep.pass() ? kOk : kFailedCheck;
}

int cmd_reduced(const Options& opt) {
    const Params params = params_of(opt);
    const RadicalEvidence rep = radical_evidence(opt.n, params, opt.seed);
    if (!rep.radical) {
        std::cerr << "reduced: radical evidence failed at n=" << rep.n << "\n";
    }
    const Json report{{"n", rep.n},
                      {"params", Json{{"l", params.ell}, {"p", params.p}}},
                      {"exact", rep.exact},
                      {"radical", rep.radical},
                      {"samples", rep.samples},
                      {"full_rank", rep.full_rank},
                      {"seed", rep.seed}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << "radical: " << (rep.radical ? "true" : "false")
                  << (rep.exact ? " (exact)" : " (sampled evidence)") << "\n";
    }
    return rep.radical ? kOk : kFailedCheck;
}

int cmd_identities(const Options& opt) {
    const Params params = params_of(opt);
    const IdentityReport rep = verify_identities(params);
    const std::pair<const char*, bool> checks[] = {
        {"g_derivative", rep.g_derivative},
        {"h_derivative", rep.h_derivative},
        {"p_doubling", rep.p_doubling},
        {"q_doubling", rep.q_doubling},
    };
    Json jchecks = Json::object();
    int passed = 0;
    for (const auto& [key, ok] : checks) {
        jchecks[key] = ok;
        passed += ok ? 1 : 0;
        if (!ok) {
            std::cerr << "identities: " << key << " failed\n";
        }
    }
    const Json report{{"params", Json{{"l", params.ell}, {"p", params.p}}},
                      {"checks", std::move(jchecks)},
                      {"pass", rep.pass()}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << passed << "/4 identities pass\n";
    }
    return rep.pass() ? kOk : kFailedCheck;
}

int cmd_table(const Options& opt) {
    TableOptions topts;
    topts.params = params_of(opt);
    topts.max_length = opt.max;
    topts.cache_dir = opt.cache;
    if (const char* env = std::getenv("QTILT_CACHE"); env != nullptr && *env != '\0') {
        topts.cache_dir = env;
    }
    const TableStats stats = generate_table(topts, &std::cerr);
    const Json report{{"file", stats.file.string()},
                      {"labels", stats.labels},
                      {"records", stats.records},
                      {"reused", stats.reused},
                      {"recomputed", stats.recomputed},
                      {"dropped", stats.dropped}};
    emit(report, opt);
    if (!json_mode(opt)) {
        std::cout << "wrote " << stats.file.string() << " (" << stats.records
                  << " records)\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for the twisted tilting representation ring"};
    app.require_subcommand(1);

    Options opt;
    std::string kind, left, right, operand;

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Decompose a product of two simple modules");
    add_param_flags(decompose, opt);
    decompose->add_flag("--no-verify", opt.no_verify,
                        "Skip the character conservation self-check");
    decompose->add_option("left", left, "First highest weight, written a,b")->required();
    decompose->add_option("right", right, "Second highest weight, written a,b")->required();

    CLI::App* character = app.add_subcommand("character", "Print a character");
    add_param_flags(character, opt);
    character->add_option("kind", kind, "simple | weyl | tilting | label")->required();
    character
        ->add_option("operand", operand,
                     "Weight a,b (label kind: a,b;a0,b0;... with quantum layer first)")
        ->required();

    CLI::App* relations = app.add_subcommand(
        "relations", "Verify that the presentation relations map to zero");
    add_param_flags(relations, opt);
    relations->add_option("--n", opt.n, "Highest classical level");

    CLI::App* reduced = app.add_subcommand(
        "reduced", "Reducedness evidence for the presentation ideal");
    add_param_flags(reduced, opt);
    reduced->add_option("--n", opt.n, "Highest classical level (0 or 1)");
    reduced->add_option("--seed", opt.seed, "Seed for the sampled evidence");

    CLI::App* identities = app.add_subcommand(
        "identities", "Verify the Chebyshev/Dickson identities");
    add_param_flags(identities, opt);

    CLI::App* table = app.add_subcommand(
        "table", "Generate the cached multiplication table");
    add_param_flags(table, opt);
    table->add_option("--max", opt.max, "Length bound for the label basis")->required();
    table->add_option("--cache", opt.cache,
                      "Cache directory (the QTILT_CACHE environment variable wins)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kMalformed;
    }

    try {
        if (decompose->parsed()) {
            return cmd_decompose(opt, left, right);
        }
        if (character->parsed()) {
            return cmd_character(opt, kind, operand);
        }
        if (relations->parsed()) {
            return cmd_relations(opt);
        }
        if (reduced->parsed()) {
            return cmd_reduced(opt);
        }
        if (identities->parsed()) {
            return cmd_identities(opt);
        }
        if (table->parsed()) {
            return cmd_table(opt);
        }
    } catch (const CacheError& e) {
        std::cerr << e.what() << "\n";
        return kCache;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kMalformed;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
