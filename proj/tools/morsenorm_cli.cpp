// morsenorm: command-line front end for the morsenorm library.
//
// Exit codes: 0 success, 1 validation failure or bad input data, 2 usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <morsenorm/morsenorm.hpp>

namespace {

using namespace morsenorm;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ComplexDocument load(const std::string& path) { return parse_document(read_input(path)); }

json simplex_json(const Simplex& s) { return json(std::vector<VertexId>(s.vertices().begin(), s.vertices().end())); }

const RationalFunction& require_morse_entry(const ComplexDocument& doc) {
    if (!doc.morse) throw Error("document has no \"morse\" entry");
    return *doc.morse;
}

// The field a command acts on: the matching if given, else the gradient of
// the morse entry, else the null field.
VectorField field_of(const ComplexDocument& doc) {
    if (doc.matching) return *doc.matching;
    if (doc.morse) return gradient(doc.complex, *doc.morse);
    return {};
}

void print_function(const Complex& k, const HeightFunction& h, bool as_json) {
    if (as_json) {
        std::cout << serialize_function(k, h) << '\n';
        return;
    }
    for (const auto& s : k.simplices()) std::cout << s << ' ' << h(s) << '\n';
}

int cmd_validate(const std::string& path, bool as_json) {
    auto doc = load(path);
    const auto& k = doc.complex;
    bool ok = true;
    json out{{"simplices", k.size()}, {"dimension", k.dimension()}};
    std::vector<std::string> lines;
    lines.push_back("complex: " + std::to_string(k.size()) + " simplices, dimension " +
                    std::to_string(k.dimension()));

    if (doc.matching) {
        auto violations = validate_field(k, *doc.matching);
        json m{{"valid", violations.empty()}, {"violations", json::array()}};
        for (const auto& v : violations) {
            m["violations"].push_back(v.message());
            lines.push_back("matching: " + v.message());
        }
        if (violations.empty()) {
            auto a = is_admissible(k, *doc.matching);
            m["admissible"] = a.admissible;
            lines.push_back(a ? "matching: ok" : "matching: not admissible, closed V-path " + a.witness->to_string());
            ok = ok && a.admissible;
        }
        ok = ok && violations.empty();
        out["matching"] = m;
    }
    if (doc.morse) {
        std::vector<MorseViolation> violations;
        try {
            violations = is_morse(k, *doc.morse);
        } catch (const Error& e) {
            out["morse"] = {{"valid", false}, {"violations", {e.what()}}};
            lines.push_back(std::string("morse: ") + e.what());
            ok = false;
            violations.clear();
            doc.morse.reset();
        }
        if (doc.morse) {
            json m{{"valid", violations.empty()}, {"violations", json::array()}};
            for (const auto& v : violations) {
                m["violations"].push_back(v.message());
                lines.push_back("morse: " + v.message());
            }
            if (violations.empty()) {
                lines.push_back("morse: ok");
                if (doc.matching && validate_field(k, *doc.matching).empty()) {
                    bool same = gradient(k, *doc.morse) == *doc.matching;
                    m["gradient_matches"] = same;
                    lines.push_back(same ? "morse: gradient equals matching" : "morse: gradient differs from matching");
                    ok = ok && same;
                }
            }
            ok = ok && violations.empty();
            out["morse"] = m;
        }
    }
    out["ok"] = ok;
    if (as_json) {
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& l : lines) std::cout << l << '\n';
    }
    return ok ? kOk : kInvalid;
}

int cmd_admissible(const std::string& path, bool as_json) {
    auto doc = load(path);
    auto a = is_admissible(doc.complex, doc.matching.value_or(VectorField{}));
    if (as_json) {
        json out{{"admissible", a.admissible}};
        if (a.witness) {
            json p = json::array();
            for (const auto& s : a.witness->simplices) p.push_back(simplex_json(s));
            out["witness"] = {{"index", a.witness->index}, {"path", p}};
        }
        std::cout << out.dump() << '\n';
    } else if (a) {
        std::cout << "admissible\n";
    } else {
        std::cout << "not admissible: closed V-path " << a.witness->to_string() << '\n';
    }
    return a ? kOk : kInvalid;
}

int cmd_height(const std::string& path, bool oracle, bool as_json) {
    auto doc = load(path);
    auto w = doc.matching.value_or(VectorField{});
    auto h = oracle ? height_oracle(doc.complex, w) : height(doc.complex, w);
    print_function(doc.complex, h, as_json);
    return kOk;
}

int cmd_normalize(const std::string& path, bool ranks, bool early_exit, bool as_json) {
    auto doc = load(path);
    const auto& f = require_morse_entry(doc);
    SweepOptions options;
    options.early_exit = early_exit;
    auto h = ranks ? normalize_sweep(doc.complex, to_integer_ranks(doc.complex, f), options)
                   : normalize_sweep(doc.complex, f, options);
    print_function(doc.complex, h, as_json);
    return kOk;
}

int cmd_gradient(const std::string& path, bool as_json) {
    auto doc = load(path);
    auto v = gradient(doc.complex, require_morse_entry(doc));
    if (as_json) {
        std::cout << serialize_field(v) << '\n';
    } else {
        for (const auto& [src, dst] : v.pairs()) std::cout << src << " -> " << dst << '\n';
    }
    return kOk;
}

int cmd_critical(const std::string& path, bool as_json) {
    auto doc = load(path);
    auto crit = critical_simplices(doc.complex, field_of(doc));
    if (as_json) {
        json out = json::array();
        for (const auto& s : crit) out.push_back(simplex_json(s));
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& s : crit) std::cout << s << '\n';
    }
    return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool as_json) {
    auto da = load(a);
    auto db = load(b);
    if (da.complex.simplices() != db.complex.simplices()) throw Error("documents describe different complexes");
    bool eq = equivalent(da.complex, require_morse_entry(da), require_morse_entry(db));
    if (as_json) {
        std::cout << json{{"equivalent", eq}}.dump() << '\n';
    } else {
        std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
    }
    return kOk;
}

int cmd_dot(const std::string& path, bool with_height) {
    auto doc = load(path);
    auto w = field_of(doc);
    std::optional<HeightFunction> h;
    if (with_height) h = height(doc.complex, w);
    std::cout << emit_dot(doc.complex, w, h);
    return kOk;
}

int cmd_gen(int vertices, int dim, double density, std::uint64_t seed, bool with_field, bool with_morse) {
    auto k = random_complex(vertices, dim, density, seed);
    ComplexDocument doc{k, std::nullopt, std::nullopt};
    if (with_field) doc.matching = random_field(k, seed);
    if (with_morse) {
        doc.morse = doc.matching ? random_morse_for_field(k, *doc.matching, seed) : random_morse(k, seed);
    }
    std::cout << serialize_document(doc) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized discrete Morse functions on simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string file, file_b;
    bool oracle = false, ranks = false, early_exit = false, with_height = false;
    bool with_field = false, with_morse = false;
    int vertices = 4, dim = 2;
    double density = 0.5;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Check the complex, matching and Morse function of a document");
    validate->add_option("file", file, "Input document ('-' for stdin)")->required();
    auto* admissible = app.add_subcommand("admissible", "Check the matching for closed V-paths");
    admissible->add_option("file", file)->required();
    auto* height_cmd = app.add_subcommand("height", "Height function of the matching");
    height_cmd->add_option("file", file)->required();
    height_cmd->add_flag("--oracle", oracle, "Use exhaustive path enumeration");
    auto* normalize = app.add_subcommand("normalize", "Normalize the Morse function by value sweeps");
    normalize->add_option("file", file)->required();
    normalize->add_flag("--ranks", ranks, "Replace values by dense ranks first");
    normalize->add_flag("--early-exit", early_exit, "Stop after a pass that changes nothing");
    auto* gradient_cmd = app.add_subcommand("gradient", "Gradient vector field of the Morse function");
    gradient_cmd->add_option("file", file)->required();
    auto* critical = app.add_subcommand("critical", "Critical simplices");
    critical->add_option("file", file)->required();
    auto* equiv = app.add_subcommand("equiv", "Compare the Morse functions of two documents");
    equiv->add_option("first", file)->required();
    equiv->add_option("second", file_b)->required();
    auto* dot = app.add_subcommand("dot", "Graphviz rendering of the modified Hasse diagram");
    dot->add_option("file", file)->required();
    dot->add_flag("--height", with_height, "Label nodes with their height");
    auto* gen = app.add_subcommand("gen", "Generate a random document");
    gen->add_option("-n,--vertices", vertices, "Number of vertices")->check(CLI::PositiveNumber);
    gen->add_option("-d,--dim", dim, "Top dimension")->check(CLI::NonNegativeNumber);
    gen->add_option("--density", density, "Facet probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed, "Random seed");
    gen->add_flag("--field", with_field, "Include a random admissible matching");
    gen->add_flag("--morse", with_morse, "Include a random Morse function");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(file, as_json);
        if (*admissible) return cmd_admissible(file, as_json);
        if (*height_cmd) return cmd_height(file, oracle, as_json);
        if (*normalize) return cmd_normalize(file, ranks, early_exit, as_json);
        if (*gradient_cmd) return cmd_gradient(file, as_json);
        if (*critical) return cmd_critical(file, as_json);
        if (*equiv) return cmd_equiv(file, file_b, as_json);
        if (*dot) return cmd_dot(file, with_height);
        if (*gen) return cmd_gen(vertices, dim, density, seed, with_field, with_morse);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kUsage;
}
