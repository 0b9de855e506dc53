#pragma once

// Proof document pieces for the prop/bin exercise.

#include <string>

#include "induction/proofstate.hpp"

namespace fixtures {

inline const std::string kHeader = "exercise: prop-bin\n";
inline const std::string kBase =
    "base p:\n  prop(p)\n  = (definition prop)\n  1\n  ^ 0 + 1\n  = (definition bin)\n  ^ bin(p) + 1\n";
inline const std::string kIH = "IH:\n  prop(phi) = bin(phi) + 1\n  prop(psi) = bin(psi) + 1\n";
inline const std::string kNeg =
    "case ~:\n  prop(~phi)\n  = (definition prop)\n  prop(phi)\n  = (induction hypothesis)\n  bin(phi) + 1\n"
    "  ^ bin(phi) + 1\n  = (definition bin)\n  ^ bin(~phi) + 1\n";
inline const std::string kAnd =
    "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n  = (induction hypothesis)\n"
    "  bin(phi) + 1 + bin(psi) + 1\n  = (calculation)\n  bin(phi) + bin(psi) + 2\n  ^ bin(phi) + bin(psi) + 1 + 1\n"
    "  = (definition bin)\n  ^ bin(phi /\\ psi) + 1\n";
inline const std::string kImp =
    "case ->:\n  prop(phi -> psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n  = (induction hypothesis)\n"
    "  bin(phi) + 1 + bin(psi) + 1\n  = (calculation)\n  bin(phi) + bin(psi) + 2\n  ^ bin(phi) + bin(psi) + 1 + 1\n"
    "  = (definition bin)\n  ^ bin(phi -> psi) + 1\n";
// The /\ case after the lhs unfold, rhs written down.
inline const std::string kAndUnfolded = "case /\\:\n  prop(phi /\\ psi)\n  = (definition prop)\n  prop(phi) + prop(psi)\n";
inline const std::string kAndRhs = "  ^ bin(phi /\\ psi) + 1\n";

inline induction::ProofState doc(const std::string& body) {
  return induction::deserialize(kHeader + body, &induction::catalog_exercise("prop-bin"));
}

}  // namespace fixtures
