#ifndef SVIR_REFERENCE_REWRITER_HPP
#define SVIR_REFERENCE_REWRITER_HPP

#include <vector>

#include "svir/action.hpp"
#include "svir/module_basis.hpp"

namespace svir {

/// Reference evaluation of a generator word on w by a deliberately naive
/// strategy: keep a worklist of (coefficient, word) terms and repeatedly fix
/// the leftmost out-of-order adjacent pair (swap + bracket, eager odd
/// squares), consuming ψ-domain and C factors only when they sit against w.
/// It shares nothing with WhittakerModule::act except the bracket table, so
/// exact agreement between the two is a real confluence check.
ModuleVector reference_act_word(const std::vector<GeneratorIndex>& word,
                                const WhittakerData& data);

}  // namespace svir

#endif  // SVIR_REFERENCE_REWRITER_HPP
