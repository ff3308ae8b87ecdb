#ifndef GE_TESTS_SUPPORT_HPP
#define GE_TESTS_SUPPORT_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "ge/operator_core.hpp"

namespace test {

// Values produced by tests/oracle/derive.py.
inline const nlohmann::json& oracle()
{
    static const nlohmann::json j = [] {
        std::ifstream in(GE_ORACLE_JSON);
        return nlohmann::json::parse(in);
    }();
    return j;
}

inline double oracle_value(const std::string& key)
{
    return oracle().at(key).get<double>();
}

inline ge::HermitianOperator op(const ge::ComplexMatrix& m)
{
    return ge::HermitianOperator(m);
}

inline ge::QuantumState ket(const std::string& bits)
{
    ge::ComplexVector v = ge::ComplexVector::Zero(ge::Index{1} << bits.size());
    v(std::stoi(bits, nullptr, 2)) = 1.0;
    return ge::QuantumState::pure(v);
}

}  // namespace test

#endif
