#pragma once

#include <array>
#include <optional>
#include <string>

#include "tenfold/types.hpp"

namespace tenfold {

// The ten Cartan labels.
enum class SymmetryClass { A, AI, AII, C, CI, D, DIII, AIII, BDI, CII };

inline constexpr std::array<SymmetryClass, 10> all_classes = {
    SymmetryClass::A,    SymmetryClass::AI,  SymmetryClass::AII,
    SymmetryClass::C,    SymmetryClass::CI,  SymmetryClass::D,
    SymmetryClass::DIII, SymmetryClass::AIII, SymmetryClass::BDI,
    SymmetryClass::CII};

inline std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::A: return "A";
        case SymmetryClass::AI: return "AI";
        case SymmetryClass::AII: return "AII";
        case SymmetryClass::C: return "C";
        case SymmetryClass::CI: return "CI";
        case SymmetryClass::D: return "D";
        case SymmetryClass::DIII: return "DIII";
        case SymmetryClass::AIII: return "AIII";
        case SymmetryClass::BDI: return "BDI";
        case SymmetryClass::CII: return "CII";
    }
    return "?";
}

inline std::optional<SymmetryClass> class_from_string(const std::string& s) {
    for (auto c : all_classes)
        if (to_string(c) == s) return c;
    return std::nullopt;
}

inline bool is_chiral(SymmetryClass c) {
    return c == SymmetryClass::AIII || c == SymmetryClass::BDI ||
           c == SymmetryClass::CII;
}

}  // namespace tenfold
