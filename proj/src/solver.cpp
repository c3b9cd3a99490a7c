#include "svir/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace svir {

namespace {

// ------------------------------------------------------- truncation helpers

/// All strict pseudopartitions whose doubled fdeg cost Σ(2μ_i - ε_d) stays
/// ≤ budget. Only part 0 can contribute negatively (NS: -1), so the search
/// can prune as soon as the next part no longer fits.
void enumerate_mu(Sector sector, int budget, int next_part, long cost,
                  std::vector<int>& current, std::vector<StrictPseudopartition>& out) {
    out.emplace_back(current);
    const int eps_d = eps_doubled(sector);
    for (int p = next_part;; ++p) {
        const long step = 2L * p - eps_d;
        if (cost + step > budget && step > 0) break;
        if (cost + step <= budget) {
            current.push_back(p);
            enumerate_mu(sector, budget, p + 1, cost + step, current, out);
            current.pop_back();
        }
    }
}

/// All pseudopartitions with doubled fdeg cost 2|λ| + 2λ(0) ≤ budget.
/// Every part costs at least 2, so the recursion is finite.
void enumerate_lambda(int budget, int next_part, long cost, std::vector<int>& current,
                      std::vector<Pseudopartition>& out) {
    out.emplace_back(current);
    for (int p = next_part;; ++p) {
        const long step = p == 0 ? 2 : 2L * p;
        if (cost + step > budget) {
            if (p > 0) break;
            continue;
        }
        current.push_back(p);
        enumerate_lambda(budget, p, cost + step, current, out);
        current.pop_back();
    }
}

int mu_fdeg_cost(Sector sector, const StrictPseudopartition& mu) {
    long cost = 0;
    for (int p : mu.parts()) cost += 2L * p - eps_doubled(sector);
    return static_cast<int>(cost);
}

// ---------------------------------------------------------- probe internals

/// Echelon over module vectors in the probe order (w strictly smallest,
/// otherwise canonical), pivoting on the largest monomial of each row. With
/// that convention w lies in the span iff some row is exactly γ·w, which is
/// what makes the single-word witness of cyclicity_probe sound.
class ProbeEchelon {
  public:
    explicit ProbeEchelon(Sector sector) : vacuum_(BasisMonomial(sector)) {}

    /// Largest non-w monomial, or the vacuum for multiples of w.
    const BasisMonomial& leader(const ModuleVector& v) const {
        for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
            if (it->first != vacuum_) return it->first;
        return vacuum_;
    }

    ModuleVector reduce(ModuleVector v) const {
        // Rows in descending leader order; each subtraction introduces only
        // probe-smaller monomials, so one pass fully reduces.
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const Rational coeff = v.coefficient(it->first);
            if (coeff != 0) v -= coeff * it->second;
        }
        return v;
    }

    /// Returns the reduced residual; installs it as a new row unless it is
    /// zero or a pure multiple of w (the caller handles the reached case).
    ModuleVector insert(const ModuleVector& v) {
        ModuleVector residual = reduce(v);
        if (residual.is_zero()) return residual;
        const BasisMonomial& lead = leader(residual);
        if (lead == vacuum_) return residual;  // γ·w: do not install
        ModuleVector monic = residual;
        monic *= 1 / residual.coefficient(lead);
        rows_.emplace(lead, std::move(monic));
        return residual;
    }

    bool contains_vacuum() const { return reduce(ModuleVector(vacuum_)).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    BasisMonomial vacuum_;
    std::map<BasisMonomial, ModuleVector> rows_;  // leader -> monic row
};

/// Probe generator list: doubled indices in (0, cap] ascending (L before G
/// on equal index), then, when creation directions are requested, indices
/// in [-cap, 0] descending.
std::vector<GeneratorIndex> probe_generators(Sector sector, int cap_doubled,
                                             bool include_creation) {
    std::vector<GeneratorIndex> out;
    const bool g_on_odd = eps_doubled(sector) == 1;  // NS G sits at odd doubled index
    auto push_level = [&](int d) {
        if (d % 2 == 0) out.push_back(gen_L(sector, d / 2));
        if ((d % 2 != 0) == g_on_odd) out.push_back(gen_G_doubled(sector, d));
    };
    for (int d = 1; d <= cap_doubled; ++d) push_level(d);
    if (include_creation)
        for (int d = 0; d >= -cap_doubled; --d) push_level(d);
    return out;
}

}  // namespace

// ----------------------------------------------------------------- truncation

std::optional<int> Truncation::index_of(const BasisMonomial& m) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) return std::nullopt;
    return static_cast<int>(it - basis.begin());
}

Truncation enumerate_truncation(Sector sector, int fdeg_max_doubled) {
    Truncation t;
    t.sector = sector;
    t.fdeg_max_doubled = fdeg_max_doubled;

    std::vector<StrictPseudopartition> mus;
    std::vector<int> scratch;
    enumerate_mu(sector, fdeg_max_doubled, 0, 0, scratch, mus);

    for (const auto& mu : mus) {
        const int remaining = fdeg_max_doubled - mu_fdeg_cost(sector, mu);
        if (remaining < 0) continue;
        std::vector<Pseudopartition> lambdas;
        std::vector<int> lscratch;
        enumerate_lambda(remaining, 0, 0, lscratch, lambdas);
        for (const auto& lambda : lambdas)
            t.basis.emplace_back(sector, lambda, mu);
    }
    std::sort(t.basis.begin(), t.basis.end());
    if (t.basis.empty())
        throw std::invalid_argument("empty truncation: fdeg_max below the sector minimum");
    return t;
}

// -------------------------------------------------------------------- kernel

KernelReport whittaker_kernel(const WhittakerModule& module, int fdeg_max_doubled) {
    KernelReport report;
    report.truncation = enumerate_truncation(module.sector(), fdeg_max_doubled);
    report.generators_checked = module.defect_generators(fdeg_max_doubled);

    std::vector<ModuleVector> basis;
    basis.reserve(report.truncation.basis.size());
    for (const auto& m : report.truncation.basis) basis.emplace_back(m);

    for (const auto& e : report.generators_checked) {
        if (basis.empty()) break;
        const Rational scalar = *psi_value(module.data(), e);

        // Images (E - ψ(E))·b_i as sparse rows over the codomain support.
        std::vector<ModuleVector> images;
        images.reserve(basis.size());
        std::map<BasisMonomial, int> columns;
        for (const auto& v : basis) {
            ModuleVector image = module.act(e, v) - scalar * v;
            for (const auto& [m, q] : image.terms()) columns.emplace(m, 0);
            images.push_back(std::move(image));
        }
        int next = 0;
        for (auto& [m, idx] : columns) idx = next++;

        std::vector<SparseRow> rows;
        rows.reserve(images.size());
        for (const auto& image : images) {
            SparseRow row;
            row.reserve(image.terms().size());
            for (const auto& [m, q] : image.terms()) row.emplace_back(columns.at(m), q);
            rows.push_back(std::move(row));
        }

        // Combinations of the current basis annihilated by this generator.
        std::vector<SparseRow> combos = left_nullspace(rows);
        std::vector<ModuleVector> next_basis;
        next_basis.reserve(combos.size());
        for (const auto& combo : combos) {
            ModuleVector v;
            for (const auto& [i, q] : combo) v += q * basis[i];
            next_basis.push_back(std::move(v));
        }
        basis = std::move(next_basis);
    }

    // Canonical reduced echelon over the truncation coordinates.
    std::vector<SparseRow> rows;
    rows.reserve(basis.size());
    for (const auto& v : basis) {
        SparseRow row;
        for (const auto& [m, q] : v.terms())
            row.emplace_back(*report.truncation.index_of(m), q);
        rows.push_back(std::move(row));
    }
    for (const auto& row : reduced_row_echelon(rows)) {
        ModuleVector v;
        for (const auto& [idx, q] : row) v.add(report.truncation.basis[idx], q);
        report.kernel_basis.push_back(std::move(v));
    }

    // Double-entry check: every kernel vector must have an empty defect list
    // under the per-vector bound as well.
    for (const auto& v : report.kernel_basis)
        if (!module.whittaker_defect(v).empty())
            throw std::logic_error("kernel vector failed the defect re-verification");
    report.defects_verified = true;
    return report;
}

// ----------------------------------------------------------------- cyclicity

CyclicityReport cyclicity_probe(const ModuleVector& start, const WhittakerModule& module,
                                int deg_cap_doubled, long budget, bool include_creation) {
    if (start.is_zero())
        throw std::invalid_argument("cyclicity_probe from the zero vector");
    CyclicityReport report;
    report.start = start;

    const auto gens = probe_generators(module.sector(), deg_cap_doubled, include_creation);
    ProbeEchelon echelon(module.sector());

    struct Element {
        std::vector<GeneratorIndex> word;
        ModuleVector vector;
    };
    std::vector<Element> elements;

    auto try_insert = [&](std::vector<GeneratorIndex> word, const ModuleVector& v) {
        ModuleVector residual = echelon.insert(v);
        if (residual.is_zero()) return false;
        if (echelon.leader(residual) == BasisMonomial(module.sector())) {
            report.reached_w = true;
            report.witness = word;
            report.residual_coefficient = residual.coefficient(BasisMonomial(module.sector()));
            return true;
        }
        report.span_words.push_back(word);
        elements.push_back({std::move(word), v});
        return false;
    };

    bool done = try_insert({}, start);
    report.span_dimension_trace.push_back(echelon.rank());

    long spent = 0;
    for (std::size_t i = 0; !done && i < elements.size(); ++i) {
        for (const auto& e : gens) {
            if (spent >= budget) {
                done = true;
                break;
            }
            ModuleVector u = module.act(e, elements[i].vector);
            ++spent;
            if (u.is_zero()) continue;
            std::vector<GeneratorIndex> word;
            word.reserve(elements[i].word.size() + 1);
            word.push_back(e);
            word.insert(word.end(), elements[i].word.begin(), elements[i].word.end());
            if (try_insert(std::move(word), u)) {
                done = true;
                break;
            }
        }
        report.span_dimension_trace.push_back(echelon.rank());
    }
    report.budget_spent = spent;
    return report;
}

bool verify_cyclicity_certificate(const CyclicityReport& report,
                                  const WhittakerModule& module) {
    if (!report.reached_w) return false;
    if (report.residual_coefficient == 0) return false;
    // The w component may live entirely in the span reduction (span rows can
    // carry w terms), so the raw replay is not required to contain w itself.
    const ModuleVector replay = module.act_word(report.witness, report.start);
    ProbeEchelon echelon(module.sector());
    for (const auto& word : report.span_words)
        echelon.insert(module.act_word(word, report.start));
    ModuleVector residual = echelon.reduce(replay);
    ModuleVector expected(BasisMonomial(module.sector()), report.residual_coefficient);
    return residual == expected;
}

// ---------------------------------------------------------- degenerate probe

DegenerateReport degenerate_submodule_probe(const WhittakerModule& module,
                                            int fdeg_max_doubled, long budget) {
    const WhittakerData& data = module.data();
    if (data.sector != Sector::Ramond || data.b != 0 || data.a == 0)
        throw std::invalid_argument(
            "degenerate_submodule_probe requires the Ramond sector with b = 0, a != 0");

    DegenerateReport report;
    report.degenerate_vector = module.act(gen_G_doubled(Sector::Ramond, 2),
                                          vacuum_vector(Sector::Ramond));
    report.is_whittaker = module.whittaker_defect(report.degenerate_vector).empty();

    const int cap = fdeg_max_doubled + 4;
    const auto gens = probe_generators(Sector::Ramond, cap, /*include_creation=*/true);
    ProbeEchelon echelon(Sector::Ramond);
    std::vector<ModuleVector> elements;

    auto try_insert = [&](const ModuleVector& v) {
        if (v.is_zero() || v.maxfdeg_doubled() > fdeg_max_doubled) return;
        ModuleVector residual = echelon.insert(v);
        if (!residual.is_zero() &&
            echelon.leader(residual) != BasisMonomial(Sector::Ramond))
            elements.push_back(v);
    };

    try_insert(report.degenerate_vector);
    report.span_dimension_trace.push_back(echelon.rank());

    long spent = 0;
    for (std::size_t i = 0; i < elements.size() && spent < budget; ++i) {
        for (const auto& e : gens) {
            if (spent >= budget) break;
            ModuleVector u = module.act(e, elements[i]);
            ++spent;
            try_insert(u);
        }
        report.span_dimension_trace.push_back(echelon.rank());
    }
    report.span_dimension = echelon.rank();
    report.w_excluded = !echelon.contains_vacuum();
    report.budget_spent = spent;
    return report;
}

// ---------------------------------------------------------------- simplicity

SimplicityReport simplicity_report(const WhittakerModule& module, int fdeg_max_doubled,
                                   long budget) {
    const WhittakerData& data = module.data();
    if (!data.psi_nontrivial())
        throw std::invalid_argument(
            "simplicity_report requires nontrivial psi (the trivial case is a "
            "highest-weight-type module, out of scope for this probe)");

    SimplicityReport report;
    report.kernel = whittaker_kernel(module, fdeg_max_doubled);

    const int cap = fdeg_max_doubled + 4;
    bool all_reached = true;
    for (const auto& v : report.kernel.kernel_basis) {
        report.probes.push_back(cyclicity_probe(v, module, cap, budget));
        all_reached = all_reached && report.probes.back().reached_w;
    }
    for (const auto& m : report.kernel.truncation.basis) {
        report.probes.push_back(cyclicity_probe(ModuleVector(m), module, cap, budget));
        all_reached = all_reached && report.probes.back().reached_w;
    }

    if (data.sector == Sector::Ramond && data.b == 0 && data.a != 0) {
        report.degenerate = degenerate_submodule_probe(module, fdeg_max_doubled, budget);
        if (report.degenerate->is_whittaker && report.degenerate->w_excluded) {
            report.verdict = SimplicityVerdict::ProperSubmoduleWitness;
            return report;
        }
    }
    report.verdict = all_reached ? SimplicityVerdict::ConsistentWithSimple
                                 : SimplicityVerdict::Inconclusive;
    return report;
}

std::string verdict_name(SimplicityVerdict v) {
    switch (v) {
        case SimplicityVerdict::ConsistentWithSimple: return "consistent-with-simple";
        case SimplicityVerdict::ProperSubmoduleWitness: return "proper-submodule-witness";
        case SimplicityVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace svir
