/**
 * @brief Symbolic indeterminates.
 *
 * Five variable families: the integration variables x1..xn, the parameters
 * z1..zn, the region variables y1..y(n-1), and the two index-free symbols
 * w (integration dummy) and Z (the argument of p).  The total order
 * X < Z < Y < W < BIGZ, then by index, is fixed and drives the canonical
 * monomial ordering everywhere.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace critval {

enum class VarFamily : std::uint8_t { X = 0, Z = 1, Y = 2, W = 3, BigZ = 4 };

struct VariableId {
    VarFamily family = VarFamily::X;
    std::uint32_t index = 1;  // W and BigZ carry index 0

    friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

inline VariableId var_x(std::uint32_t i) { return {VarFamily::X, i}; }
inline VariableId var_z(std::uint32_t i) { return {VarFamily::Z, i}; }
inline VariableId var_y(std::uint32_t i) { return {VarFamily::Y, i}; }
inline VariableId var_w() { return {VarFamily::W, 0}; }
inline VariableId var_Z() { return {VarFamily::BigZ, 0}; }

inline std::string var_name(const VariableId& v) {
    switch (v.family) {
        case VarFamily::X: return "x" + std::to_string(v.index);
        case VarFamily::Z: return "z" + std::to_string(v.index);
        case VarFamily::Y: return "y" + std::to_string(v.index);
        case VarFamily::W: return "w";
        case VarFamily::BigZ: return "Z";
    }
    throw std::logic_error("var_name: bad family");
}

}  // namespace critval
