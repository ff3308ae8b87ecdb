// gekit: command-line front end for the generalized-entanglement toolkit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ge/algebra_catalog.hpp"
#include "ge/coherent.hpp"
#include "ge/cone_lab.hpp"
#include "ge/golden.hpp"
#include "ge/purity.hpp"
#include "ge/state_io.hpp"

namespace {

using namespace ge;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_parse = 2;
constexpr int exit_dimension = 3;
constexpr int exit_infeasible = 4;

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

MaxPurityOptions optimizer_options()
{
    MaxPurityOptions opts;
    if (const char* env = std::getenv("GE_SEED")) {
        try {
            std::size_t used = 0;
            opts.seed = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("GE_SEED: expected an unsigned integer, got '") + env + "'");
        }
    }
    return opts;
}

struct Reference
{
    double value;
    std::string source;
};

Reference resolve_reference(const std::string& rescale, const AlgebraSpec& spec, const ObservableSpace& omega)
{
    const auto known = reference_max_purity(spec);
    if (rescale == "analytic") {
        if (!known || known->source != ReferenceSource::analytic)
            throw UsageError("--rescale analytic: no closed-form maximum for algebra '" + omega.label() + "'");
        return {known->value, "analytic"};
    }
    if (rescale == "auto") {
        if (known)
            return {known->value, to_string(known->source)};
        return {max_purity_estimate(omega, optimizer_options()), "numeric"};
    }
    double v = 0;
    try {
        std::size_t used = 0;
        v = std::stod(rescale, &used);
        if (used != rescale.size())
            throw std::invalid_argument(rescale);
    } catch (const std::exception&) {
        throw UsageError("--rescale: expected auto, analytic or a number, got '" + rescale + "'");
    }
    if (!(v > 0))
        throw UsageError("--rescale: reference must be positive");
    return {v, "user"};
}

struct PurityArgs
{
    std::string state;
    std::string algebra;
    std::string rescale = "auto";
    bool json = false;
    double tol = 1e-8;
};

void check_dims(const QuantumState& s, const ObservableSpace& omega, const PurityArgs& a)
{
    if (s.dim() != omega.dim())
        throw DimensionError("dimension mismatch: --state '" + a.state + "' has dim " + std::to_string(s.dim()) +
                             " but --algebra '" + a.algebra + "' acts on dim " + std::to_string(omega.dim()));
}

using Field = std::pair<std::string, ordered_json>;

// Floats go through format_real in both modes so text and JSON agree.
ordered_json real(double x)
{
    return std::stod(format_real(x));
}

void emit(const std::vector<Field>& fields, bool as_json)
{
    if (as_json) {
        ordered_json j = ordered_json::object();
        for (const auto& [k, v] : fields)
            j[k] = v;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : fields) {
        std::cout << k << "=";
        if (v.is_string())
            std::cout << v.get<std::string>();
        else if (v.is_number_float())
            std::cout << format_real(v.get<double>());
        else
            std::cout << v.dump();
        std::cout << "\n";
    }
}

int cmd_purity(const PurityArgs& a, bool classify)
{
    const QuantumState s = load_state(a.state);
    const AlgebraSpec spec = parse_algebra(a.algebra);
    const ObservableSpace omega = build_algebra(spec);
    check_dims(s, omega, a);
    const Reference ref = resolve_reference(a.rescale, spec, omega);
    const PurityReport r = rescaled_purity(s, omega, ref.value);

    std::vector<Field> fields = {
        {"state", a.state},
        {"algebra", omega.label()},
        {"dim", s.dim()},
        {"raw", real(r.raw)},
        {"rescaled", real(r.rescaled)},
        {"max_reference", real(r.max_reference)},
        {"reference_source", ref.source},
    };
    if (classify) {
        const UnentanglementVerdict v = is_generalized_unentangled(s, omega, ref.value, a.tol);
        fields.emplace_back("unentangled", v.unentangled);
        fields.emplace_back("theorem_direction", to_string(v.direction));
    }
    emit(fields, a.json);
    return 0;
}

std::string table_text(const BipartiteBoxState& s)
{
    std::string out;
    for (Eigen::Index r = 0; r < s.table().rows(); ++r) {
        if (r > 0)
            out += ";";
        for (Eigen::Index c = 0; c < s.table().cols(); ++c) {
            if (c > 0)
                out += ",";
            out += ge::to_string(s.table()(r, c));
        }
    }
    return out;
}

std::string marginals_text(const Marginals& m)
{
    const std::string a = m.alice.to_string(), b = m.bob.to_string();
    return a == b ? a : a + "," + b;
}

struct BoxArgs
{
    std::string size = "2,2,2,2";
    std::string file;
    bool json = false;
};

std::pair<BoxShape, BoxShape> parse_size(const std::string& text)
{
    std::vector<int> v;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("--size: expected four integers NA,MA,NB,MB, got '" + text + "'");
        }
    }
    if (v.size() != 4 || v[0] < 1 || v[1] < 1 || v[2] < 1 || v[3] < 1)
        throw UsageError("--size: expected four positive integers NA,MA,NB,MB, got '" + text + "'");
    return {BoxShape{v[0], v[1]}, BoxShape{v[2], v[3]}};
}

int cmd_box_vertices(const BoxArgs& a)
{
    const auto [alice, bob] = parse_size(a.size);
    const auto vertices = no_signalling_vertices(alice, bob);
    std::size_t product = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VertexClass c = classify_extremal(vertices[i]);
        product += c == VertexClass::product;
        if (a.json)
            std::cout << ordered_json{{"class", to_string(c)}, {"state", box_state_to_json(vertices[i])}}.dump()
                      << "\n";
        else
            std::cout << "vertex=" << i << " class=" << to_string(c) << " p=" << table_text(vertices[i]) << "\n";
    }
    std::cout << "product=" << product << " entangled=" << vertices.size() - product << " total=" << vertices.size()
              << "\n";
    return 0;
}

BipartiteBoxState require_file(const BoxArgs& a)
{
    if (a.file.empty())
        throw UsageError("--file is required");
    return load_box_state(a.file);
}

int cmd_box_classify(const BoxArgs& a)
{
    const BipartiteBoxState s = require_file(a);
    const bool extremal = is_extremal(s);
    const Marginals m = marginals(s);
    std::cout << "extremal=" << (extremal ? "true" : "false");
    if (extremal)
        std::cout << " class=" << to_string(classify_extremal(s));
    std::cout << " marginals=" << marginals_text(m) << "\n";
    std::cout << "unentangled=" << (is_generalized_unentangled_box(s) ? "true" : "false") << "\n";
    return 0;
}

int cmd_box_separable(const BoxArgs& a)
{
    std::cout << "separable=" << (in_separable_tensor_product(require_file(a)) ? "true" : "false") << "\n";
    return 0;
}

int cmd_box_orbit(const BoxArgs& a)
{
    const BipartiteBoxState s = require_file(a);
    if (!s.no_signalling())
        throw SignallingError("orbit: input state is signalling");
    const auto orbit = relabeling_orbit(s);
    for (std::size_t i = 0; i < orbit.size(); ++i)
        std::cout << "member=" << i << " p=" << table_text(orbit[i]) << "\n";
    std::cout << "orbit_size=" << orbit.size() << "\n";
    return 0;
}

int cmd_reproduce(const std::string& table, bool list, const std::string& fault)
{
    if (table != "paper")
        throw UsageError("--table: only 'paper' is available");
    const auto& checks = golden_checks();
    if (list) {
        for (const auto& c : checks)
            std::cout << c.id << "  " << c.description << "\n";
        return 0;
    }
    const GoldenContext ctx{fault};
    std::size_t failed = 0;
    for (const auto& c : checks) {
        const GoldenOutcome o = run_golden(c, ctx);
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description;
        if (!o.detail.empty())
            std::cout << "  [" << o.detail << "]";
        std::cout << "\n";
    }
    std::cout << "passed=" << checks.size() - failed << " failed=" << failed << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gekit: purities, coherent states, fermions and no-signalling boxes"};
    app.require_subcommand(1);

    PurityArgs pa;
    auto* purity = app.add_subcommand("purity", "Omega-purity of a state");
    auto* classify = app.add_subcommand("classify", "maximal-purity unentanglement test");
    for (auto* sub : {purity, classify}) {
        sub->add_option("--state", pa.state, "builtin name or JSON state file")->required();
        sub->add_option("--algebra", pa.algebra, "algebra name")->required();
        sub->add_option("--rescale", pa.rescale, "auto | analytic | <positive number>");
        sub->add_flag("--json", pa.json, "JSON output");
    }
    classify->add_option("--tol", pa.tol, "tolerance on rescaled purity = 1");

    BoxArgs ba;
    auto* boxes = app.add_subcommand("boxes", "two-party no-signalling boxes");
    boxes->require_subcommand(1);
    auto* vertices = boxes->add_subcommand("vertices", "enumerate the vertices of the no-signalling polytope");
    vertices->add_option("--size", ba.size, "NA,MA,NB,MB inputs and outputs per side");
    vertices->add_flag("--json", ba.json, "one JSON object per vertex");
    auto* bclassify = boxes->add_subcommand("classify", "extremality and vertex class of a box state");
    auto* separable = boxes->add_subcommand("separable", "membership in the separable tensor product");
    auto* orbit = boxes->add_subcommand("orbit", "orbit under local relabelings");
    for (auto* sub : {bclassify, separable, orbit})
        sub->add_option("--file", ba.file, "JSON box state")->required();

    std::string table = "paper";
    bool list = false;
    std::string fault;
    auto* reproduce = app.add_subcommand("reproduce", "run the golden reference checks");
    reproduce->add_option("--table", table, "reference table");
    reproduce->add_flag("--list", list, "list checks without running them");
    reproduce->add_option("--inject-fault", fault, "perturb the named builtin state")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (*purity)
            return cmd_purity(pa, false);
        if (*classify)
            return cmd_purity(pa, true);
        if (*vertices)
            return cmd_box_vertices(ba);
        if (*bclassify)
            return cmd_box_classify(ba);
        if (*separable)
            return cmd_box_separable(ba);
        if (*orbit)
            return cmd_box_orbit(ba);
        if (*reproduce)
            return cmd_reproduce(table, list, fault);
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_dimension;
    } catch (const InfeasibleState& e) {
        std::cerr << "error: infeasible state: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const SignallingError& e) {
        std::cerr << "error: signalling state: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_parse;
}
