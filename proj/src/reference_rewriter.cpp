#include "svir/reference_rewriter.hpp"

#include <stdexcept>
#include <tuple>

namespace svir {

namespace {

struct WordTerm {
    Rational coeff;
    std::vector<GeneratorIndex> word;
};

/// Sort key whose sorted words are exactly the canonical ones once the
/// trailing ψ-domain/C factors have been consumed: creation L-block, then
/// creation G-block, then ψ-domain factors, then C.
std::tuple<int, int, int> sort_key(const GeneratorIndex& g) {
    using Kind = GeneratorIndex::Kind;
    if (g.kind == Kind::C) return {3, 0, 0};
    if (is_creation(g)) return {g.kind == Kind::L ? 0 : 1, g.d, 0};
    return {2, g.kind == Kind::L ? 0 : 1, g.d};
}

/// Adjacent pair that the naive strategy must fix: strictly descending sort
/// keys, or an odd generator standing next to itself (eager square).
bool is_bad_pair(const GeneratorIndex& x, const GeneratorIndex& y) {
    if (x == y) return parity(x) == Parity::Odd;
    return sort_key(x) > sort_key(y);
}

}  // namespace

ModuleVector reference_act_word(const std::vector<GeneratorIndex>& word,
                                const WhittakerData& data) {
    for (const auto& g : word)
        if (g.sector != data.sector)
            throw std::invalid_argument("reference_act_word: sector mismatch");

    ModuleVector result;
    std::vector<WordTerm> worklist{{Rational(1), word}};
    while (!worklist.empty()) {
        WordTerm term = std::move(worklist.back());
        worklist.pop_back();
        if (term.coeff == 0) continue;

        std::size_t bad = term.word.size();
        for (std::size_t i = 0; i + 1 < term.word.size(); ++i)
            if (is_bad_pair(term.word[i], term.word[i + 1])) {
                bad = i;
                break;
            }

        if (bad < term.word.size()) {
            const GeneratorIndex x = term.word[bad];
            const GeneratorIndex y = term.word[bad + 1];
            const bool both_odd =
                parity(x) == Parity::Odd && parity(y) == Parity::Odd;

            // Replacement words with the pair collapsed to one bracket term
            // (the only rewrite when x == y is odd: x·x = ½[x,x]).
            LieElement br = bracket(x, y);
            if (x == y) br *= make_rational(1, 2);
            for (const auto& [g, q] : br.terms()) {
                WordTerm collapsed;
                collapsed.coeff = term.coeff * q;
                collapsed.word.assign(term.word.begin(), term.word.begin() + bad);
                if (g.kind == GeneratorIndex::Kind::C)
                    collapsed.coeff *= data.c;
                else
                    collapsed.word.push_back(g);
                collapsed.word.insert(collapsed.word.end(),
                                      term.word.begin() + bad + 2, term.word.end());
                worklist.push_back(std::move(collapsed));
            }
            if (x != y) {
                WordTerm swapped = term;
                std::swap(swapped.word[bad], swapped.word[bad + 1]);
                if (both_odd) swapped.coeff = -swapped.coeff;
                worklist.push_back(std::move(swapped));
            }
            continue;
        }

        // Sorted word: consume the factor adjacent to w if it is scalar there.
        if (!term.word.empty()) {
            const GeneratorIndex last = term.word.back();
            if (auto scalar = psi_value(data, last)) {
                term.coeff *= *scalar;
                term.word.pop_back();
                worklist.push_back(std::move(term));
                continue;
            }
        }

        // All factors are creation generators in canonical order.
        result.add(BasisMonomial::from_factors(data.sector, term.word), term.coeff);
    }
    return result;
}

}  // namespace svir
