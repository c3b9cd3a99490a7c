#ifndef SVIR_ACTION_HPP
#define SVIR_ACTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "svir/module_basis.hpp"

namespace svir {

/// The Whittaker module W_ε(ψ, c) with its normal-ordering engine. One
/// instance owns a memo cache keyed on (generator, monomial); results are
/// pure values, so use one engine per thread if ever parallelizing.
class WhittakerModule {
  public:
    explicit WhittakerModule(WhittakerData data) : data_(std::move(data)) {}

    const WhittakerData& data() const { return data_; }
    Sector sector() const { return data_.sector; }

    /// g · m, straightened into the PBW basis. Recursion on (g, head, rest):
    ///   - g·w is ψ(g)·w, a single creation factor, or c·w for C;
    ///   - a creation g that may stand left of the head prepends;
    ///   - an odd g equal to the head contracts eagerly: g·g = ½[g,g];
    ///   - otherwise g·f·rest = (-1)^{|g||f|} f·(g·rest) + [g,f]·rest.
    /// Terminates because each step lowers (factor count, inversions)
    /// lexicographically; a depth guard asserts this in debug builds.
    ModuleVector act(const GeneratorIndex& g, const BasisMonomial& m) const;
    ModuleVector act(const GeneratorIndex& g, const ModuleVector& v) const;

    /// A Lie-algebra element acting linearly; its C-component acts as c.
    ModuleVector act(const LieElement& e, const BasisMonomial& m) const;
    ModuleVector act(const LieElement& e, const ModuleVector& v) const;

    /// word = (g_k, ..., g_1) applied right to left: g_k ··· g_1 · v.
    ModuleVector act_word(const std::vector<GeneratorIndex>& word,
                          const ModuleVector& v) const;

    /// All nonzero defects (E, (E - ψ(E))·v) for E over the ψ-domain
    /// generators up to the kill bound of v: L_n for 1 ≤ n ≤ n_max and
    /// G_r for 2-ε ≤ r ≤ n_max+1-ε with n_max = ⌈maxdeg(v)⌉ + 2. Beyond
    /// that bound every E annihilates v termwise, so an empty list is
    /// equivalent to v being a Whittaker vector. Throws on the zero vector.
    std::vector<std::pair<GeneratorIndex, ModuleVector>> whittaker_defect(
        const ModuleVector& v) const;

    /// The ψ-domain generators probed by whittaker_defect for a vector of
    /// the given maximal degree (doubled); also the row set of kernel maps.
    std::vector<GeneratorIndex> defect_generators(int maxdeg_doubled) const;

  private:
    ModuleVector act_uncached(const GeneratorIndex& g, const BasisMonomial& m) const;

    WhittakerData data_;
    mutable std::map<std::pair<GeneratorIndex, BasisMonomial>, ModuleVector> memo_;
};

/// Convenience wrappers matching the operation names used throughout the
/// tests; they build a throwaway engine, so hot paths should hold a
/// WhittakerModule instead.
ModuleVector act_generator(const GeneratorIndex& g, const ModuleVector& v,
                           const WhittakerData& data);
ModuleVector act_word(const std::vector<GeneratorIndex>& word, const ModuleVector& v,
                      const WhittakerData& data);
std::vector<std::pair<GeneratorIndex, ModuleVector>> whittaker_defect(
    const ModuleVector& v, const WhittakerData& data);

}  // namespace svir

#endif  // SVIR_ACTION_HPP
