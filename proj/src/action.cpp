#include "svir/action.hpp"

#include <cassert>
#include <stdexcept>

namespace svir {

namespace {

/// May g stand immediately left of f in a canonical factor word?
/// L-blocks are non-decreasing in part (indices ascend), G-blocks strictly;
/// every L stands left of every G. Only creation generators qualify.
bool can_stand_left(const GeneratorIndex& g, const GeneratorIndex& f) {
    if (!is_creation(g)) return false;
    using Kind = GeneratorIndex::Kind;
    if (g.kind == Kind::L) return f.kind == Kind::G || g.d <= f.d;
    return f.kind == Kind::G && g.d < f.d;
}

#ifndef NDEBUG
thread_local int act_depth = 0;
struct DepthGuard {
    DepthGuard() {
        ++act_depth;
        // The (factor count, inversions) metric strictly decreases along
        // the recursion; this guard only catches a broken rewrite loop.
        assert(act_depth < 20000 && "straightening recursion failed to terminate");
    }
    ~DepthGuard() { --act_depth; }
};
#endif

}  // namespace

ModuleVector WhittakerModule::act(const GeneratorIndex& g, const BasisMonomial& m) const {
    if (g.sector != data_.sector || m.sector() != data_.sector)
        throw std::invalid_argument("act: sector mismatch");
    const auto key = std::make_pair(g, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ModuleVector result = act_uncached(g, m);
    memo_.emplace(key, result);
    return result;
}

ModuleVector WhittakerModule::act_uncached(const GeneratorIndex& g,
                                           const BasisMonomial& m) const {
#ifndef NDEBUG
    DepthGuard guard;
#endif
    if (g.kind == GeneratorIndex::Kind::C) return ModuleVector(m, data_.c);

    if (m.is_vacuum()) {
        if (is_creation(g)) {
            BasisMonomial single(sector());
            if (g.kind == GeneratorIndex::Kind::L) {
                Pseudopartition lambda;
                lambda.add_part(-g.d / 2);
                single = BasisMonomial(sector(), lambda, {});
            } else {
                StrictPseudopartition mu;
                mu.add_part(creation_g_part(sector(), g.d));
                single = BasisMonomial(sector(), {}, mu);
            }
            return ModuleVector(single);
        }
        // ψ-domain generator hitting w directly.
        return ModuleVector(BasisMonomial(sector()), *psi_value(data_, g));
    }

    const GeneratorIndex f = m.head_factor();
    const BasisMonomial rest = m.without_head();

    if (can_stand_left(g, f)) {
        BasisMonomial extended = m;
        if (g.kind == GeneratorIndex::Kind::L) {
            Pseudopartition lambda = m.lambda();
            lambda.add_part(-g.d / 2);
            extended = BasisMonomial(sector(), lambda, m.mu());
        } else {
            StrictPseudopartition mu = m.mu();
            mu.add_part(creation_g_part(sector(), g.d));
            extended = BasisMonomial(sector(), m.lambda(), mu);
        }
        return ModuleVector(extended);
    }

    if (g == f && parity(g) == Parity::Odd) {
        // G_r G_r = ½ [G_r, G_r] — the eager square rule; the generic swap
        // below would recurse onto itself for this pair.
        LieElement sq = bracket(g, g);
        sq *= make_rational(1, 2);
        return act(sq, rest);
    }

    // g·f·rest = (-1)^{|g||f|} f·(g·rest) + [g, f]·rest.
    const bool both_odd = parity(g) == Parity::Odd && parity(f) == Parity::Odd;
    ModuleVector swapped = act(f, act(g, rest));
    if (both_odd) swapped *= Rational(-1);
    return swapped + act(bracket(g, f), rest);
}

ModuleVector WhittakerModule::act(const GeneratorIndex& g, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [m, q] : v.terms()) out += q * act(g, m);
    return out;
}

ModuleVector WhittakerModule::act(const LieElement& e, const BasisMonomial& m) const {
    ModuleVector out;
    for (const auto& [g, q] : e.terms()) {
        if (g.kind == GeneratorIndex::Kind::C)
            out += ModuleVector(m, q * data_.c);
        else
            out += q * act(g, m);
    }
    return out;
}

ModuleVector WhittakerModule::act(const LieElement& e, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [m, q] : v.terms()) out += q * act(e, m);
    return out;
}

ModuleVector WhittakerModule::act_word(const std::vector<GeneratorIndex>& word,
                                       const ModuleVector& v) const {
    ModuleVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
    return out;
}

std::vector<GeneratorIndex> WhittakerModule::defect_generators(int maxdeg_doubled) const {
    // n_max = ⌈maxdeg⌉ + 2 in true units. L_n is checked for n ≤ n_max and
    // G_r for r ≤ n_max+1-ε: the kill lemma pairs G_{n+1-ε} with L_n, so the
    // odd range runs one step past the even one.
    const int n_max = (maxdeg_doubled + (maxdeg_doubled % 2 != 0 ? 1 : 0)) / 2 + 2;
    std::vector<GeneratorIndex> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(gen_L(sector(), n));
    const int eps_d = eps_doubled(sector());
    for (int d = 4 - eps_d; d <= 2 * n_max + 2 - eps_d; d += 2)
        out.push_back(gen_G_doubled(sector(), d));
    return out;
}

std::vector<std::pair<GeneratorIndex, ModuleVector>> WhittakerModule::whittaker_defect(
    const ModuleVector& v) const {
    if (v.is_zero())
        throw std::invalid_argument("whittaker_defect of the zero vector");
    std::vector<std::pair<GeneratorIndex, ModuleVector>> out;
    for (const auto& e : defect_generators(v.maxdeg_doubled())) {
        ModuleVector defect = act(e, v) - *psi_value(data_, e) * v;
        if (!defect.is_zero()) out.emplace_back(e, std::move(defect));
    }
    return out;
}

ModuleVector act_generator(const GeneratorIndex& g, const ModuleVector& v,
                           const WhittakerData& data) {
    return WhittakerModule(data).act(g, v);
}

ModuleVector act_word(const std::vector<GeneratorIndex>& word, const ModuleVector& v,
                      const WhittakerData& data) {
    return WhittakerModule(data).act_word(word, v);
}

std::vector<std::pair<GeneratorIndex, ModuleVector>> whittaker_defect(
    const ModuleVector& v, const WhittakerData& data) {
    return WhittakerModule(data).whittaker_defect(v);
}

}  // namespace svir
