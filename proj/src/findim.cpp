#include "svir/findim.hpp"

#include <stdexcept>
#include <utility>

#include "svir/module_basis.hpp"

namespace svir {

namespace {

Vec2 scaled(const Vec2& v, const Rational& q) { return {v.w * q, v.u * q}; }

Vec2 plus(const Vec2& x, const Vec2& y) { return {x.w + y.w, x.u + y.u}; }

}  // namespace

TwoDimModule::TwoDimModule(Sector sector, Rational a, Rational b)
    : sector_(sector), a_(std::move(a)), b_(std::move(b)) {}

bool TwoDimModule::in_positive_part(const GeneratorIndex& g) const {
    if (g.sector != sector_) return false;
    switch (g.kind) {
        case GeneratorIndex::Kind::L: return g.d >= 2;
        case GeneratorIndex::Kind::G: return g.d >= boundary_d();
        case GeneratorIndex::Kind::C: return false;
    }
    return false;
}

Rational TwoDimModule::psi(const GeneratorIndex& g) const {
    const WhittakerData data{sector_, a_, b_, Rational(0)};
    const auto value = psi_value(data, g);
    if (!value) throw std::logic_error("character undefined on this generator");
    return *value;
}

Vec2 TwoDimModule::lie_on_w(const LieElement& x) const {
    const GeneratorIndex gb = gen_G_doubled(sector_, boundary_d());
    Vec2 out{Rational(0), Rational(0)};
    for (const auto& [h, q] : x.terms()) {
        if (!in_positive_part(h))
            throw std::invalid_argument("element leaves the positive subalgebra");
        if (h == gb)
            out.u += q;  // G_{1-ε}·w = u by definition
        else
            out.w += q * psi(h);
    }
    return out;
}

Matrix2 TwoDimModule::derive_action(const GeneratorIndex& g) const {
    const GeneratorIndex gb = gen_G_doubled(sector_, boundary_d());
    Matrix2 m;
    if (g == gb) {
        m.on_w = Vec2{Rational(0), Rational(1)};
        // u = G_{1-ε}·w, so G_{1-ε}·u = ½[G_{1-ε}, G_{1-ε}]·w.
        m.on_u = scaled(lie_on_w(bracket(gb, gb)), make_rational(1, 2));
    } else {
        const Rational value = psi(g);
        m.on_w = Vec2{value, Rational(0)};
        // x·u = [x, G_{1-ε}]·w + (-1)^{|x|} G_{1-ε}·(x·w), and x·w = ψ(x)·w.
        const Rational sign = parity(g) == Parity::Odd ? Rational(-1) : Rational(1);
        m.on_u = plus(lie_on_w(bracket(g, gb)), Vec2{Rational(0), sign * value});
    }
    return m;
}

const Matrix2& TwoDimModule::action(const GeneratorIndex& g) const {
    if (!in_positive_part(g))
        throw std::invalid_argument("generator outside the positive subalgebra");
    auto it = cache_.find(g);
    if (it == cache_.end()) it = cache_.emplace(g, derive_action(g)).first;
    return it->second;
}

void TwoDimModule::set_action(const GeneratorIndex& g, const Matrix2& m) {
    if (!in_positive_part(g))
        throw std::invalid_argument("generator outside the positive subalgebra");
    cache_[g] = m;
}

Vec2 TwoDimModule::apply(const GeneratorIndex& g, const Vec2& v) const {
    const Matrix2& m = action(g);
    return plus(scaled(m.on_w, v.w), scaled(m.on_u, v.u));
}

Vec2 TwoDimModule::apply(const LieElement& x, const Vec2& v) const {
    Vec2 out{Rational(0), Rational(0)};
    for (const auto& [g, q] : x.terms()) {
        if (g.kind == GeneratorIndex::Kind::C)
            throw std::invalid_argument("central component outside the positive subalgebra");
        out = plus(out, scaled(apply(g, v), q));
    }
    return out;
}

std::vector<GeneratorIndex> positive_generators(Sector sector, int index_bound) {
    std::vector<GeneratorIndex> out;
    const bool g_on_odd = eps_doubled(sector) == 1;
    const int gb = 2 - eps_doubled(sector);
    for (int d = 1; d <= 2 * index_bound; ++d) {
        if (d % 2 == 0 && d >= 2) out.push_back(gen_L(sector, d / 2));
        if ((d % 2 != 0) == g_on_odd && d >= gb) out.push_back(gen_G_doubled(sector, d));
    }
    return out;
}

std::optional<AxiomCounterexample> verify_axioms(const TwoDimModule& m, int index_bound) {
    const auto gens = positive_generators(m.sector(), index_bound);
    const Vec2 basis[2] = {Vec2{Rational(1), Rational(0)}, Vec2{Rational(0), Rational(1)}};
    const char* names[2] = {"w", "u"};
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            const LieElement br = bracket(x, y);
            const bool both_odd = parity(x) == Parity::Odd && parity(y) == Parity::Odd;
            const Rational sign = both_odd ? Rational(1) : Rational(-1);
            for (int i = 0; i < 2; ++i) {
                const Vec2 lhs = plus(m.apply(x, m.apply(y, basis[i])),
                                      scaled(m.apply(y, m.apply(x, basis[i])), sign));
                const Vec2 rhs = m.apply(br, basis[i]);
                if (!(lhs == rhs))
                    return AxiomCounterexample{x, y, names[i], lhs, rhs};
            }
        }
    }
    return std::nullopt;
}

InvariantLineReport invariant_lines(const TwoDimModule& m, int index_bound) {
    InvariantLineReport report;
    report.w_line_invariant = true;
    report.u_line_invariant = true;
    const Vec2 w_vec{Rational(1), Rational(0)};
    const Vec2 u_vec{Rational(0), Rational(1)};
    for (const auto& g : positive_generators(m.sector(), index_bound)) {
        if (report.w_line_invariant && m.apply(g, w_vec).u != 0) {
            report.w_line_invariant = false;
            report.w_line_witness = g;
        }
        if (report.u_line_invariant && m.apply(g, u_vec).w != 0) {
            report.u_line_invariant = false;
            report.u_line_witness = g;
        }
    }
    return report;
}

}  // namespace svir
