// Variable identifiers. T variables are grouped into blocks, S variables are
// the free generators, and the two formal parameters t (torus coordinate) and
// s (flow time) come last. The ordering (kind, block, pos) is the block order
// of the monomial comparison: smaller id = more significant variable.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace workbench {

enum class VarKind : std::uint8_t { T = 0, S = 1, Param = 2 };

struct VarId {
    VarKind kind{VarKind::T};
    std::int32_t block{0};  // T only; 0 for S/Param
    std::int32_t pos{0};    // T: position in block; S: index k; Param: 0 = t, 1 = s

    static VarId T(int block, int pos) { return {VarKind::T, block, pos}; }
    static VarId S(int k) { return {VarKind::S, 0, k}; }
    static VarId param_t() { return {VarKind::Param, 0, 0}; }
    static VarId param_s() { return {VarKind::Param, 0, 1}; }

    bool is_T() const { return kind == VarKind::T; }
    bool is_S() const { return kind == VarKind::S; }
    bool is_param() const { return kind == VarKind::Param; }

    std::string name() const {
        switch (kind) {
            case VarKind::T:
                return "T[" + std::to_string(block) + "][" + std::to_string(pos) + "]";
            case VarKind::S:
                return "S[" + std::to_string(pos) + "]";
            default:
                return pos == 0 ? "t" : "s";
        }
    }

    auto operator<=>(const VarId&) const = default;
};

}  // namespace workbench
