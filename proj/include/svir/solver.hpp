#ifndef SVIR_SOLVER_HPP
#define SVIR_SOLVER_HPP

#include <optional>
#include <vector>

#include "svir/action.hpp"
#include "svir/linalg.hpp"
#include "svir/module_basis.hpp"

namespace svir {

/// The finite slice {basis monomials with fdeg ≤ fdeg_max} in canonical
/// order. Finite because fdeg charges every L-part (including L_0) and all
/// but the lowest G-part positively.
struct Truncation {
    Sector sector = Sector::NeveuSchwarz;
    int fdeg_max_doubled = 0;
    std::vector<BasisMonomial> basis;

    /// Position of m in `basis`, or nullopt when m lies outside the slice.
    std::optional<int> index_of(const BasisMonomial& m) const;
};

/// Complete duplicate-free enumeration of the truncation. Throws
/// std::invalid_argument when the slice is empty (fdeg_max below -1 in the
/// NS sector / below 0 in the Ramond sector, doubled units).
Truncation enumerate_truncation(Sector sector, int fdeg_max_doubled);

/// The space of Whittaker vectors inside the truncation span: the joint
/// exact kernel of (E - ψ(E)) over the annihilator set for this slice.
struct KernelReport {
    Truncation truncation;
    /// Canonical reduced-echelon basis (monic pivots, pivot monomials
    /// eliminated from the other vectors), in truncation order.
    std::vector<ModuleVector> kernel_basis;
    std::vector<GeneratorIndex> generators_checked;
    /// Every kernel vector re-verified through whittaker_defect.
    bool defects_verified = false;

    int dimension() const { return static_cast<int>(kernel_basis.size()); }
};

KernelReport whittaker_kernel(const WhittakerModule& module, int fdeg_max_doubled);

/// Orbit exploration from a start vector: repeatedly applies generators to
/// the exact span and reports whether a residual proportional to w appeared.
struct CyclicityReport {
    ModuleVector start;
    bool reached_w = false;
    /// Generator word with act_word(witness, start) ≡ residual_coefficient·w
    /// modulo the span rows listed in span_words (checked by
    /// verify_cyclicity_certificate, not trusted).
    std::vector<GeneratorIndex> witness;
    Rational residual_coefficient;
    /// Words generating the span rows, in insertion order.
    std::vector<std::vector<GeneratorIndex>> span_words;
    std::vector<int> span_dimension_trace;
    long budget_spent = 0;
};

/// Applies the positive-index generators (L_n, G_r with 0 < doubled index
/// ≤ deg_cap; optionally also the non-positive ones) breadth-first until w
/// enters the span, the span stops growing, or the budget runs out.
CyclicityReport cyclicity_probe(const ModuleVector& start, const WhittakerModule& module,
                                int deg_cap_doubled, long budget,
                                bool include_creation = false);

/// Recomputes the witness claim from scratch: replays the witness and span
/// words through act_word and checks the reduction leaves exactly
/// residual_coefficient · w.
bool verify_cyclicity_certificate(const CyclicityReport& report,
                                  const WhittakerModule& module);

/// Evidence probe for the degenerate Ramond case (b = 0, a ≠ 0): G_1·w is a
/// Whittaker vector and the submodule it generates avoids w inside the
/// probed slice. w_excluded is evidence at this truncation, not a proof.
struct DegenerateReport {
    ModuleVector degenerate_vector;
    bool is_whittaker = false;
    bool w_excluded = false;
    int span_dimension = 0;
    std::vector<int> span_dimension_trace;
    long budget_spent = 0;
};

/// Pre: Ramond sector with b = 0 and a ≠ 0; throws otherwise.
DegenerateReport degenerate_submodule_probe(const WhittakerModule& module,
                                            int fdeg_max_doubled, long budget);

enum class SimplicityVerdict { ConsistentWithSimple, ProperSubmoduleWitness, Inconclusive };

/// Composite probe: kernel at the truncation, then cyclicity from every
/// kernel vector and from every basis monomial of the slice; the degenerate
/// Ramond case is detected through degenerate_submodule_probe.
struct SimplicityReport {
    SimplicityVerdict verdict = SimplicityVerdict::Inconclusive;
    KernelReport kernel;
    std::vector<CyclicityReport> probes;
    std::optional<DegenerateReport> degenerate;
};

/// Pre: ψ nontrivial (the trivial case is a different, highest-weight-like
/// theory and is rejected here).
SimplicityReport simplicity_report(const WhittakerModule& module, int fdeg_max_doubled,
                                   long budget);

std::string verdict_name(SimplicityVerdict v);

}  // namespace svir

#endif  // SVIR_SOLVER_HPP
