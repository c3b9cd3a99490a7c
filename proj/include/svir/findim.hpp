#ifndef SVIR_FINDIM_HPP
#define SVIR_FINDIM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svir/algebra.hpp"
#include "svir/rational.hpp"

namespace svir {

/// Coordinates in the ordered basis (w, u) of the two-dimensional module.
struct Vec2 {
    Rational w;
    Rational u;
    bool operator==(const Vec2&) const = default;
};

/// Action of one generator, stored by columns: the images of w and of u.
struct Matrix2 {
    Vec2 on_w;
    Vec2 on_u;
    bool operator==(const Matrix2&) const = default;
};

/// The two-dimensional module ℂw ⊕ ℂu with u = G_{1-ε}·w, carried by the
/// positive subalgebra {L_n : n ≥ 1} ∪ {G_r : r ≥ 1-ε}. The action of each
/// generator is derived on demand from the bracket table and the character
/// values a = ψ(L_1), b = ψ(L_2); nothing here is hand-tabulated, so the
/// axiom checker below gives an independent consistency cross-check.
class TwoDimModule {
  public:
    TwoDimModule(Sector sector, Rational a, Rational b);

    Sector sector() const { return sector_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    /// Doubled index of the boundary generator G_{1-ε}.
    int boundary_d() const { return 2 - eps_doubled(sector_); }

    bool in_positive_part(const GeneratorIndex& g) const;

    /// Action matrix of g; throws std::invalid_argument when g lies outside
    /// the positive subalgebra.
    const Matrix2& action(const GeneratorIndex& g) const;

    /// Replaces the stored action of one generator (fault injection for
    /// tests of the axiom checker).
    void set_action(const GeneratorIndex& g, const Matrix2& m);

    Vec2 apply(const GeneratorIndex& g, const Vec2& v) const;
    /// Linear extension; throws on a central component (the positive
    /// subalgebra contains none).
    Vec2 apply(const LieElement& x, const Vec2& v) const;

  private:
    Matrix2 derive_action(const GeneratorIndex& g) const;
    /// x·w for a combination of positive generators, from the defining
    /// rules alone: G_{1-ε}·w = u, anything deeper acts by the character.
    Vec2 lie_on_w(const LieElement& x) const;
    Rational psi(const GeneratorIndex& g) const;

    Sector sector_;
    Rational a_;
    Rational b_;
    mutable std::map<GeneratorIndex, Matrix2> cache_;
};

/// Positive-subalgebra generators with true index ≤ index_bound, ascending
/// doubled index, L before G on a tie.
std::vector<GeneratorIndex> positive_generators(Sector sector, int index_bound);

struct AxiomCounterexample {
    GeneratorIndex x;
    GeneratorIndex y;
    std::string basis_vector;  // "w" or "u"
    Vec2 lhs;                  // x·(y·v) - (-1)^{|x||y|} y·(x·v)
    Vec2 rhs;                  // [x,y]·v
};

/// Checks x·(y·v) - (-1)^{|x||y|} y·(x·v) = [x,y]·v on both basis vectors
/// for every ordered pair of positive generators with index ≤ index_bound.
/// Brackets reach index 2·index_bound; their actions are derived on demand.
std::optional<AxiomCounterexample> verify_axioms(const TwoDimModule& m, int index_bound);

struct InvariantLineReport {
    bool w_line_invariant = false;
    std::optional<GeneratorIndex> w_line_witness;  // first g with g·w outside ℂw
    bool u_line_invariant = false;
    std::optional<GeneratorIndex> u_line_witness;  // first g with g·u outside ℂu
};

/// Tests the two coordinate lines for invariance under every positive
/// generator with index ≤ index_bound.
InvariantLineReport invariant_lines(const TwoDimModule& m, int index_bound);

}  // namespace svir

#endif  // SVIR_FINDIM_HPP
