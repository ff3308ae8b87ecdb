#include "ge/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ge/coherent.hpp"
#include "ge/fermion.hpp"

namespace ge {

using nlohmann::json;

namespace {

bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.rfind(prefix, 0) == 0;
}

std::string after(const std::string& s, const std::string& prefix)
{
    return s.substr(prefix.size());
}

int parse_count(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError(what + ": expected an integer, got '" + text + "'");
    }
    if (used != text.size())
        throw ParseError(what + ": expected an integer, got '" + text + "'");
    return v;
}

ComplexVector basis_vector(Index dim, Index k)
{
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return v;
}

// Index of a bit string with qubit 1 as the most significant bit.
Index bits_index(const std::string& bits)
{
    Index k = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw ParseError("basis state: expected a string of 0 and 1, got '" + bits + "'");
        k = 2 * k + (c == '1');
    }
    return k;
}

ComplexVector bell_vector(const std::string& label)
{
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector v = ComplexVector::Zero(4);
    if (label == "psi+" || label == "psi-") {
        v(0) = r;
        v(3) = label == "psi+" ? r : -r;
    } else if (label == "phi+" || label == "phi-") {
        v(1) = r;
        v(2) = label == "phi+" ? r : -r;
    } else {
        throw ParseError("bell state: expected phi+, phi-, psi+ or psi-, got '" + label + "'");
    }
    return v;
}

QuantumState ghz(int n)
{
    if (n < 2 || n > 10)
        throw ParseError("ghz:n needs 2 <= n <= 10");
    const Index dim = Index{1} << n;
    ComplexVector v = ComplexVector::Zero(dim);
    v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
    return QuantumState::pure(v);
}

QuantumState w_state(int n)
{
    if (n < 2 || n > 10)
        throw ParseError("w:n needs 2 <= n <= 10");
    const Index dim = Index{1} << n;
    ComplexVector v = ComplexVector::Zero(dim);
    for (int q = 0; q < n; ++q)
        v(Index{1} << q) = 1.0 / std::sqrt(static_cast<double>(n));
    return QuantumState::pure(v);
}

QuantumState bisep(const std::string& pair)
{
    if (pair != "12" && pair != "13" && pair != "23")
        throw ParseError("bisep: expected 12, 13 or 23, got '" + pair + "'");
    // (|000> + |1..1..>)/sqrt2 with ones on the two listed qubits.
    std::string ones = "000";
    ones[static_cast<std::size_t>(pair[0] - '1')] = '1';
    ones[static_cast<std::size_t>(pair[1] - '1')] = '1';
    ComplexVector v = ComplexVector::Zero(8);
    v(0) = v(bits_index(ones)) = 1.0 / std::sqrt(2.0);
    return QuantumState::pure(v);
}

QuantumState spin_state(const std::string& args)
{
    const auto comma = args.find(',');
    if (comma == std::string::npos)
        throw ParseError("spin state: expected spin:J,m");
    const double j = parse_half_integer(args.substr(0, comma));
    const double m = parse_half_integer(args.substr(comma + 1));
    if (j <= 0 || j > 50)
        throw ParseError("spin state: J must lie in (0, 50]");
    if (std::abs(m) > j + 1e-12 || std::abs(std::round(j - m) - (j - m)) > 1e-12)
        throw ParseError("spin state: m must be one of J, J-1, ..., -J");
    return QuantumState::pure(spin_system(j).basis_state(m));
}

QuantumState fock_state(const std::string& word)
{
    if (word == "00" || word == "01" || word == "10" || word == "11")
        return jw_state_dictionary(word);
    return jw_map(QuantumState::pure(bell_vector(word)));
}

json complex_pair(Complex z)
{
    return json::array({z.real(), z.imag()});
}

Complex complex_from(const json& j, const std::string& where)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(where + ": expected a number or [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

double parse_half_integer(const std::string& text)
{
    if (text.empty())
        throw ParseError("expected a number, got an empty string");
    const auto slash = text.find('/');
    double v = 0.0;
    try {
        if (slash != std::string::npos) {
            if (text.substr(slash + 1) != "2")
                throw ParseError("half-integer: only denominator 2 is allowed in '" + text + "'");
            v = parse_count(text.substr(0, slash), "half-integer numerator") / 2.0;
        } else {
            std::size_t used = 0;
            v = std::stod(text, &used);
            if (used != text.size())
                throw ParseError("expected a number, got '" + text + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + text + "'");
    }
    if (std::abs(2 * v - std::round(2 * v)) > 1e-12)
        throw ParseError("'" + text + "' is not a multiple of 1/2");
    return v;
}

QuantumState builtin_state(const std::string& name)
{
    if (starts_with(name, "bell:"))
        return QuantumState::pure(bell_vector(after(name, "bell:")));
    if (starts_with(name, "ghz:"))
        return ghz(parse_count(after(name, "ghz:"), "ghz"));
    if (starts_with(name, "w:"))
        return w_state(parse_count(after(name, "w:"), "w"));
    if (starts_with(name, "bisep:"))
        return bisep(after(name, "bisep:"));
    if (starts_with(name, "basis:")) {
        const std::string bits = after(name, "basis:");
        if (bits.empty() || bits.size() > 10)
            throw ParseError("basis state: need 1 to 10 bits");
        return QuantumState::pure(basis_vector(Index{1} << bits.size(), bits_index(bits)));
    }
    if (starts_with(name, "spin:"))
        return spin_state(after(name, "spin:"));
    if (starts_with(name, "fock:m2:")) {
        try {
            return fock_state(after(name, "fock:m2:"));
        } catch (const ParseError&) {
            throw ParseError("fock state: expected 00, 01, 10, 11 or a bell label after fock:m2:");
        }
    }
    throw ParseError("unknown state '" + name + "'");
}

std::vector<std::string> builtin_state_examples()
{
    return {"bell:phi+", "bell:phi-", "bell:psi+", "bell:psi-", "ghz:3",  "w:3",         "bisep:12",
            "bisep:13",  "bisep:23",  "basis:000", "spin:3,3",  "spin:3/2,1/2", "fock:m2:01", "fock:m2:phi+"};
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

QuantumState load_state(const std::string& spec)
{
    if (std::filesystem::is_regular_file(spec)) {
        json j;
        try {
            j = json::parse(read_text_file(spec));
        } catch (const json::parse_error& e) {
            throw ParseError("state file '" + spec + "': " + e.what());
        }
        return state_from_json(j);
    }
    return builtin_state(spec);
}

json state_to_json(const QuantumState& state)
{
    json j;
    j["dim"] = state.dim();
    if (state.is_pure()) {
        j["kind"] = "pure";
        json amps = json::array();
        for (Index i = 0; i < state.dim(); ++i)
            amps.push_back(complex_pair(state.amplitudes()(i)));
        j["amplitudes"] = amps;
    } else {
        j["kind"] = "density";
        const ComplexMatrix rho = state.density_matrix();
        json rows = json::array();
        for (Index r = 0; r < rho.rows(); ++r) {
            json row = json::array();
            for (Index c = 0; c < rho.cols(); ++c)
                row.push_back(complex_pair(rho(r, c)));
            rows.push_back(row);
        }
        j["matrix"] = rows;
    }
    return j;
}

QuantumState state_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("state: expected a JSON object");
    std::string kind;
    if (j.contains("kind")) {
        if (!j["kind"].is_string())
            throw ParseError("state field 'kind': expected \"pure\" or \"density\"");
        kind = j["kind"].get<std::string>();
    } else {
        kind = j.contains("matrix") ? "density" : "pure";
    }
    std::optional<Index> dim;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1 || j["dim"].get<long>() > max_dimension)
            throw ParseError("state field 'dim': expected an integer in [1, " + std::to_string(max_dimension) + "]");
        dim = j["dim"].get<Index>();
    }

    if (kind == "pure") {
        if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
            throw ParseError("state field 'amplitudes': missing or not an array");
        const json& a = j["amplitudes"];
        ComplexVector v(static_cast<Index>(a.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            v(static_cast<Index>(i)) = complex_from(a[i], "state field 'amplitudes[" + std::to_string(i) + "]'");
        if (dim && *dim != v.size())
            throw DimensionError("state field 'amplitudes': length " + std::to_string(v.size()) +
                                 " does not match dim " + std::to_string(*dim));
        return QuantumState::pure(v);
    }
    if (kind == "density") {
        if (!j.contains("matrix") || !j["matrix"].is_array())
            throw ParseError("state field 'matrix': missing or not an array");
        const json& m = j["matrix"];
        const Index n = static_cast<Index>(m.size());
        ComplexMatrix rho(n, n);
        for (Index r = 0; r < n; ++r) {
            const json& row = m[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Index>(row.size()) != n)
                throw DimensionError("state field 'matrix': row " + std::to_string(r) + " has the wrong length");
            for (Index c = 0; c < n; ++c)
                rho(r, c) = complex_from(row[static_cast<std::size_t>(c)],
                                         "state field 'matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]'");
        }
        if (dim && *dim != n)
            throw DimensionError("state field 'matrix': size " + std::to_string(n) + " does not match dim " +
                                 std::to_string(*dim));
        return QuantumState::density(rho);
    }
    throw ParseError("state field 'kind': expected \"pure\" or \"density\", got \"" + kind + "\"");
}

double overlap_fidelity(const QuantumState& a, const QuantumState& b)
{
    if (a.dim() != b.dim())
        throw DimensionError("overlap_fidelity: dimensions differ");
    if (a.is_pure() && b.is_pure())
        return std::norm(a.amplitudes().dot(b.amplitudes()));
    return (a.density_matrix() * b.density_matrix()).trace().real();
}

AlgebraSpec parse_algebra(const std::string& name)
{
    if (name == "omega1")
        return algebra::Local{3, 2};
    if (name == "omega2-literal")
        return algebra::BilocalPair{false};
    if (name == "omega2-paper-values")
        return algebra::BilocalPair{true};
    if (name == "omega3")
        return algebra::Omega3{};
    if (name == "omega4")
        return algebra::Omega4{};
    if (name == "omega-prime-loc")
        return algebra::OmegaPrimeLoc{};
    if (name == "u2")
        return algebra::ZConservingU2{};
    if (name == "u2-fermi")
        return algebra::FermionicU2{};
    if (name == "so4-fermi")
        return algebra::FermionicSo4{};
    if (starts_with(name, "local:")) {
        const std::string body = after(name, "local:");
        const auto x = body.find('x');
        if (x == std::string::npos)
            throw ParseError("algebra local:NxD: missing 'x' in '" + name + "'");
        const int n = parse_count(body.substr(0, x), "algebra local:NxD (N)");
        const int d0 = parse_count(body.substr(x + 1), "algebra local:NxD (D)");
        if (n < 1 || d0 < 2)
            throw ParseError("algebra local:NxD: need N >= 1 and D >= 2");
        return algebra::Local{n, d0};
    }
    if (starts_with(name, "su2-spin:"))
        return algebra::SpinJ{parse_half_integer(after(name, "su2-spin:"))};
    if (starts_with(name, "su2-pair:"))
        return algebra::SpinPair{parse_half_integer(after(name, "su2-pair:"))};
    if (starts_with(name, "full:"))
        return algebra::FullTraceless{parse_count(after(name, "full:"), "algebra full:d")};
    if (starts_with(name, "custom:")) {
        const std::string path = after(name, "custom:");
        std::istringstream in(read_text_file(path));
        algebra::PauliSubset spec;
        spec.label = "custom";
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            std::istringstream words(line);
            std::string w;
            while (words >> w)
                spec.words.push_back(w);
        }
        if (spec.words.empty())
            throw ParseError("custom algebra file '" + path + "' lists no Pauli strings");
        return spec;
    }
    throw ParseError("unknown algebra '" + name + "'");
}

std::vector<std::string> algebra_name_examples()
{
    return {"omega1",    "omega2-literal", "omega2-paper-values", "omega3",     "omega4",
            "omega-prime-loc", "u2",       "u2-fermi",            "so4-fermi",  "local:3x2",
            "su2-spin:3/2",    "su2-pair:1", "full:4",            "custom:<file>"};
}

json box_state_to_json(const BipartiteBoxState& state)
{
    // Integers that fit in 64 bits are numbers, larger ones decimal strings.
    auto integer = [](const boost::multiprecision::mpz_int& z) -> json {
        if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
            return z.convert_to<long long>();
        return z.str();
    };
    json p = json::array();
    const RationalVector flat = state.flatten();
    for (Index i = 0; i < flat.size(); ++i)
        p.push_back(json::array({integer(boost::multiprecision::numerator(flat(i))),
                                 integer(boost::multiprecision::denominator(flat(i)))}));
    return json{{"n_inputs", {state.alice().inputs, state.bob().inputs}},
                {"n_outputs", {state.alice().outputs, state.bob().outputs}},
                {"p", p}};
}

namespace {

Rational rational_from(const json& j, const std::string& where)
{
    auto integer = [&](const json& v) -> boost::multiprecision::mpz_int {
        if (v.is_number_integer())
            return boost::multiprecision::mpz_int(v.get<long long>());
        if (v.is_string()) {
            try {
                return boost::multiprecision::mpz_int(v.get<std::string>());
            } catch (const std::exception&) {
            }
        }
        throw ParseError(where + ": expected an integer");
    };
    if (j.is_number_integer() || j.is_string())
        return Rational(integer(j));
    if (!j.is_array() || j.size() != 2)
        throw ParseError(where + ": expected [num, den]");
    const auto den = integer(j[1]);
    if (den == 0)
        throw ParseError(where + ": zero denominator");
    return Rational(integer(j[0]), den);
}

std::pair<int, int> int_pair(const json& j, const std::string& field)
{
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 || !j[field][0].is_number_integer() ||
        !j[field][1].is_number_integer())
        throw ParseError("box field '" + field + "': expected [A, B] integers");
    return {j[field][0].get<int>(), j[field][1].get<int>()};
}

}  // namespace

BipartiteBoxState box_state_from_json(const json& j)
{
    if (!j.is_object())
        throw ParseError("box state: expected a JSON object");
    const auto [na, nb] = int_pair(j, "n_inputs");
    const auto [ma, mb] = int_pair(j, "n_outputs");
    if (na < 1 || nb < 1 || ma < 1 || mb < 1 || na * ma > 100 || nb * mb > 100)
        throw ParseError("box fields 'n_inputs'/'n_outputs': sizes out of range");
    const BoxShape alice{na, ma}, bob{nb, mb};
    if (!j.contains("p") || !j["p"].is_array())
        throw ParseError("box field 'p': missing or not an array");
    const json& p = j["p"];
    const Index n = alice.size() * bob.size();
    if (static_cast<Index>(p.size()) != n)
        throw DimensionError("box field 'p': expected " + std::to_string(n) + " entries, got " +
                             std::to_string(p.size()));
    RationalVector flat(n);
    for (Index i = 0; i < n; ++i)
        flat(i) = rational_from(p[static_cast<std::size_t>(i)], "box field 'p[" + std::to_string(i) + "]'");
    return BipartiteBoxState::from_flat(alice, bob, flat);
}

BipartiteBoxState load_box_state(const std::string& path)
{
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError("box file '" + path + "': " + e.what());
    }
    return box_state_from_json(j);
}

std::string format_real(double x)
{
    if (std::abs(x) < 1e-12)
        return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace ge
