#ifndef GE_STATE_IO_HPP
#define GE_STATE_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ge/algebra_catalog.hpp"
#include "ge/cone_lab.hpp"
#include "ge/operator_core.hpp"

namespace ge {

class ParseError : public std::invalid_argument
{
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Named states:
///   bell:phi+ bell:phi- bell:psi+ bell:psi-   psi+- = (|00> +- |11>)/sqrt2,
///                                             phi+- = (|01> +- |10>)/sqrt2
///   ghz:n  w:n  basis:<bits>
///   bisep:12 | bisep:13 | bisep:23             bell:psi+ on the pair, |0> elsewhere
///   spin:J,m                                   J and m as integers or p/2
///   fock:m2:<00|01|10|11|phi+|phi-|psi+|psi->  two-mode Fock states
/// Qubit 1 is the leftmost tensor factor.
QuantumState builtin_state(const std::string& name);
std::vector<std::string> builtin_state_examples();

/// Builtin name, or path to a JSON state file.
QuantumState load_state(const std::string& spec);

nlohmann::json state_to_json(const QuantumState& state);
QuantumState state_from_json(const nlohmann::json& j);

/// Tr(rho sigma); equals |<a|b>|^2 for pure states.
double overlap_fidelity(const QuantumState& a, const QuantumState& b);

/// Parses "3", "-1", "3/2", "-1/2" or a decimal into a half-integer.
double parse_half_integer(const std::string& text);

/// Algebra names: omega1, omega2-literal, omega2-paper-values, omega3,
/// omega4, omega-prime-loc, u2, u2-fermi, so4-fermi, local:NxD,
/// su2-spin:J, su2-pair:J, full:d, custom:<file of Pauli strings>.
AlgebraSpec parse_algebra(const std::string& name);
std::vector<std::string> algebra_name_examples();

/// {"n_inputs":[NA,NB],"n_outputs":[MA,MB],"p":[[num,den],...]} row-major.
nlohmann::json box_state_to_json(const BipartiteBoxState& state);
BipartiteBoxState box_state_from_json(const nlohmann::json& j);
BipartiteBoxState load_box_state(const std::string& path);

/// 12 significant digits; |x| < 1e-12 prints as 0.
std::string format_real(double x);

std::string read_text_file(const std::string& path);

}  // namespace ge

#endif  // GE_STATE_IO_HPP
