#ifndef SVIR_MODULE_BASIS_HPP
#define SVIR_MODULE_BASIS_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/pseudopartition.hpp"
#include "svir/rational.hpp"

namespace svir {

/// The data (ε, ψ, c) defining a Whittaker module W_ε(ψ, c): ψ is the
/// one-dimensional character of the positive-part subalgebra p_ε, pinned
/// down by a = ψ(L_1) and b = ψ(L_2) (everything else in its domain maps
/// to 0); c is the central charge.
struct WhittakerData {
    Sector sector = Sector::NeveuSchwarz;
    Rational a;  // ψ(L_1)
    Rational b;  // ψ(L_2)
    Rational c;  // value of the central element

    bool psi_nontrivial() const { return a != 0 || b != 0; }
};

/// ψ(g) for g in the domain of ψ (L_n with n ≥ 1, G_r with r ≥ 2-ε) and
/// for C (which maps to c). Returns nullopt for every other generator —
/// those act by straightening, not by a scalar.
std::optional<Rational> psi_value(const WhittakerData& data, const GeneratorIndex& g);

/// One PBW basis vector L_{-λ} G w of the Whittaker module: the even block
/// runs L_{-λ_s}···L_{-λ_1} with parts non-decreasing to the right, the odd
/// block’s part k names G_{(1-ε)-k}, parts strictly decreasing to the right
/// (so factor indices ascend left to right in both blocks).
class BasisMonomial {
  public:
    explicit BasisMonomial(Sector sector) : sector_(sector) {}
    BasisMonomial(Sector sector, Pseudopartition lambda, StrictPseudopartition mu);

    /// Reassembles a monomial from a canonical factor word (all creation
    /// generators, ordered). Throws if the word is not canonical.
    static BasisMonomial from_factors(Sector sector,
                                      const std::vector<GeneratorIndex>& factors);

    Sector sector() const { return sector_; }
    const Pseudopartition& lambda() const { return lambda_; }
    const StrictPseudopartition& mu() const { return mu_; }

    bool is_vacuum() const { return lambda_.empty() && mu_.empty(); }
    int factor_count() const { return lambda_.length() + mu_.length(); }

    /// Leftmost factor (the last to act); undefined on the vacuum.
    GeneratorIndex head_factor() const;
    BasisMonomial without_head() const;
    /// The full factor word, left to right.
    std::vector<GeneratorIndex> factors() const;

    /// deg = 2|λ| + Σ(2μ_i - 2ε) in doubled units; the grading that the
    /// annihilator kill bound runs on.
    int deg_doubled() const;
    /// fdeg = deg + 2λ(0): the filtration degree; charging L_0 powers is
    /// what makes fixed-fdeg truncations finite.
    int fdeg_doubled() const;
    /// Σ of doubled factor indices (the ad-L_0 bookkeeping; differs from
    /// -deg on Ramond monomials whose odd block contains G_1).
    int weight_doubled() const;
    Parity parity() const;

    /// "L(-1)L(-1)G(-3/2)w"; the vacuum prints as "w".
    std::string to_string() const;

    /// Canonical order: (sector, fdeg, deg, λ lex, μ lex). This is the
    /// order of truncation reports and of printed module vectors.
    std::strong_ordering operator<=>(const BasisMonomial& other) const;
    bool operator==(const BasisMonomial&) const = default;

  private:
    Sector sector_;
    Pseudopartition lambda_;
    StrictPseudopartition mu_;
};

/// Doubled index of the odd factor named by part k: (2-ε_d) - 2k.
int creation_g_index_doubled(Sector s, int part);
/// Inverse of the above; throws if d does not name a creation G.
int creation_g_part(Sector s, int d);

/// A finite linear combination of basis monomials with exact coefficients.
/// No zero coefficients are stored; all monomials share one sector.
class ModuleVector {
  public:
    using Terms = std::map<BasisMonomial, Rational>;

    ModuleVector() = default;
    /// The single monomial m with coefficient 1 (or as given).
    explicit ModuleVector(const BasisMonomial& m, const Rational& coeff = Rational(1));

    void add(const BasisMonomial& m, const Rational& coeff);
    ModuleVector& operator+=(const ModuleVector& other);
    ModuleVector& operator-=(const ModuleVector& other);
    ModuleVector& operator*=(const Rational& scale);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const& { return terms_; }
    // Iterating the terms of a temporary dangles (the map dies with the
    // temporary before the loop body runs), so force callers to name it.
    const Terms& terms() && = delete;
    Rational coefficient(const BasisMonomial& m) const;

    /// max deg over the support, doubled; throws std::invalid_argument on 0.
    int maxdeg_doubled() const;
    /// max fdeg over the support, doubled; throws on 0.
    int maxfdeg_doubled() const;

    /// "b L(-2)w + 4 L(0)w + 1/2 w", terms in canonical monomial order;
    /// the zero vector prints as "0".
    std::string to_string() const;

    bool operator==(const ModuleVector&) const = default;

  private:
    Terms terms_;
};

ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs);
ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs);
ModuleVector operator*(const Rational& scale, ModuleVector v);

/// The cyclic vector w as a ModuleVector.
ModuleVector vacuum_vector(Sector s);

}  // namespace svir

#endif  // SVIR_MODULE_BASIS_HPP
