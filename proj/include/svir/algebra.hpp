#ifndef SVIR_ALGEBRA_HPP
#define SVIR_ALGEBRA_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "svir/rational.hpp"

namespace svir {

/// The two N=1 super-Virasoro algebras. They differ in where the odd
/// generators G_r live: r ∈ Z+1/2 for NeveuSchwarz, r ∈ Z for Ramond.
enum class Sector { NeveuSchwarz, Ramond };

/// Doubled value of the sector offset ε (ε = 1/2 NS, ε = 0 R).
/// All indices in this codebase are stored doubled so that both sectors
/// use exact integers: L_m has d = 2m, G_r has d = 2r.
inline int eps_doubled(Sector s) { return s == Sector::NeveuSchwarz ? 1 : 0; }

inline std::string sector_name(Sector s) {
    return s == Sector::NeveuSchwarz ? "ns" : "r";
}

enum class Parity { Even, Odd };

/// Parity relabeling (the parity-change functor acts on this engine as a
/// label flip only; module contents are unchanged).
inline Parity parity_flip(Parity p) {
    return p == Parity::Even ? Parity::Odd : Parity::Even;
}

/// One generator of SVir_ε: L_m (even), G_r (odd) or the central C.
/// `d` is the doubled index (0 for C). Invariants: d is even for L and for
/// Ramond G, odd for NeveuSchwarz G.
struct GeneratorIndex {
    enum class Kind { L, G, C };

    Sector sector;
    Kind kind;
    int d = 0;

    auto operator<=>(const GeneratorIndex&) const = default;
};

/// L_m in the given sector.
GeneratorIndex gen_L(Sector s, int m);
/// G with doubled index d; validates the sector's index parity.
GeneratorIndex gen_G_doubled(Sector s, int d);
GeneratorIndex gen_C(Sector s);

Parity parity(const GeneratorIndex& g);

/// ad-eigenvalue bookkeeping: weight(L_m) = 2m, weight(G_r) = 2r,
/// weight(C) = 0, all in doubled units.
int weight_doubled(const GeneratorIndex& g);

/// True for the generators that appear as factors of basis monomials:
/// L_{-k} with k ≥ 0 and G_{(1-ε)-k} with k ≥ 0 (doubled G-index ≤ 2-ε_d).
bool is_creation(const GeneratorIndex& g);

/// True for the generators in the domain of the Whittaker function ψ:
/// L_n with n ≥ 1 and G_r with r ≥ 2-ε (doubled G-index ≥ 4-ε_d).
/// Together with C and the creation generators this exhausts SVir_ε.
bool is_psi_domain(const GeneratorIndex& g);

/// "L(-2)", "G(-3/2)", "C" — the CLI token form; G indices print as n/2 in
/// the NS sector and as plain integers in the Ramond sector.
std::string format_generator(const GeneratorIndex& g);

/// A finite linear combination of generators with exact coefficients.
/// All generators share one sector; no zero coefficients are stored.
class LieElement {
  public:
    using Terms = std::map<GeneratorIndex, Rational>;

    LieElement() = default;
    explicit LieElement(const GeneratorIndex& g, const Rational& coeff = Rational(1)) {
        add(g, coeff);
    }

    void add(const GeneratorIndex& g, const Rational& coeff);
    LieElement& operator+=(const LieElement& other);
    LieElement& operator*=(const Rational& scale);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const& { return terms_; }
    // Iterating the terms of a temporary dangles, so force callers to name it.
    const Terms& terms() && = delete;

    bool operator==(const LieElement& other) const = default;

  private:
    Terms terms_;
};

/// The super-bracket [x, y] of two generators:
///   [L_m, L_n] = (m-n) L_{m+n} + δ_{m,-n} (m³-m)/12 · C
///   [L_m, G_r] = (m/2 - r) G_{m+r}
///   [G_r, G_s] = 2 L_{r+s} + (1/3) δ_{r+s,0} (r² - 1/4) · C
///   [x, C] = [C, x] = 0
/// Throws std::invalid_argument on a sector mismatch.
LieElement bracket(const GeneratorIndex& x, const GeneratorIndex& y);

/// Bilinear extension of the bracket (used by the Jacobi checks; brackets
/// against C vanish term by term).
LieElement bracket(const LieElement& x, const LieElement& y);

std::string format_lie_element(const LieElement& e);

}  // namespace svir

#endif  // SVIR_ALGEBRA_HPP
