#include "svir/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace svir {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("malformed rational literal: " + text);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) {
        if (text[pos] != '/')
            throw std::invalid_argument("malformed rational literal: " + text);
        ++pos;
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("malformed rational literal: " + text);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

GeneratorIndex gen_L(Sector s, int m) {
    return GeneratorIndex{s, GeneratorIndex::Kind::L, 2 * m};
}

GeneratorIndex gen_G_doubled(Sector s, int d) {
    const bool want_odd = (s == Sector::NeveuSchwarz);
    if ((d % 2 != 0) != want_odd)
        throw std::invalid_argument("G-index parity does not match sector: d=" +
                                    std::to_string(d));
    return GeneratorIndex{s, GeneratorIndex::Kind::G, d};
}

GeneratorIndex gen_C(Sector s) { return GeneratorIndex{s, GeneratorIndex::Kind::C, 0}; }

Parity parity(const GeneratorIndex& g) {
    return g.kind == GeneratorIndex::Kind::G ? Parity::Odd : Parity::Even;
}

int weight_doubled(const GeneratorIndex& g) {
    return g.kind == GeneratorIndex::Kind::C ? 0 : g.d;
}

bool is_creation(const GeneratorIndex& g) {
    switch (g.kind) {
        case GeneratorIndex::Kind::L: return g.d <= 0;
        case GeneratorIndex::Kind::G: return g.d <= 2 - eps_doubled(g.sector);
        case GeneratorIndex::Kind::C: return false;
    }
    return false;
}

bool is_psi_domain(const GeneratorIndex& g) {
    switch (g.kind) {
        case GeneratorIndex::Kind::L: return g.d >= 2;
        case GeneratorIndex::Kind::G: return g.d >= 4 - eps_doubled(g.sector);
        case GeneratorIndex::Kind::C: return false;
    }
    return false;
}

std::string format_generator(const GeneratorIndex& g) {
    switch (g.kind) {
        case GeneratorIndex::Kind::C: return "C";
        case GeneratorIndex::Kind::L: return "L(" + std::to_string(g.d / 2) + ")";
        case GeneratorIndex::Kind::G:
            if (g.d % 2 == 0) return "G(" + std::to_string(g.d / 2) + ")";
            return "G(" + std::to_string(g.d) + "/2)";
    }
    return "?";
}

void LieElement::add(const GeneratorIndex& g, const Rational& coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.sector != g.sector)
        throw std::invalid_argument("mixed sectors in LieElement");
    auto [it, inserted] = terms_.emplace(g, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other) {
    for (const auto& [g, q] : other.terms_) add(g, q);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, q] : terms_) q *= scale;
    return *this;
}

LieElement bracket(const GeneratorIndex& x, const GeneratorIndex& y) {
    if (x.sector != y.sector)
        throw std::invalid_argument("bracket of generators from different sectors");
    using Kind = GeneratorIndex::Kind;
    LieElement out;
    if (x.kind == Kind::C || y.kind == Kind::C) return out;

    if (x.kind == Kind::L && y.kind == Kind::L) {
        // [L_m, L_n] = (m-n) L_{m+n} + δ_{m,-n} (m³-m)/12 C, with m = d/2.
        out.add(gen_L(x.sector, (x.d + y.d) / 2), make_rational(x.d - y.d, 2));
        if (x.d + y.d == 0) {
            const long m = x.d / 2;
            out.add(gen_C(x.sector), make_rational(m * m * m - m, 12));
        }
    } else if (x.kind == Kind::L && y.kind == Kind::G) {
        // [L_m, G_r] = (m/2 - r) G_{m+r}; in doubled units (d_x - 2 d_y)/4.
        out.add(gen_G_doubled(x.sector, x.d + y.d), make_rational(x.d - 2 * y.d, 4));
    } else if (x.kind == Kind::G && y.kind == Kind::L) {
        // [G_r, L_m] = -[L_m, G_r] (super-antisymmetry, even·odd sign +1).
        out.add(gen_G_doubled(x.sector, x.d + y.d), make_rational(2 * x.d - y.d, 4));
    } else {
        // [G_r, G_s] = 2 L_{r+s} + (1/3) δ_{r+s,0} (r² - 1/4) C; the central
        // coefficient is (d_x² - 1)/12 in doubled units.
        out.add(gen_L(x.sector, (x.d + y.d) / 2), make_rational(2));
        if (x.d + y.d == 0) {
            const long d = x.d;
            out.add(gen_C(x.sector), make_rational(d * d - 1, 12));
        }
    }
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (const auto& [gx, qx] : x.terms())
        for (const auto& [gy, qy] : y.terms()) {
            LieElement piece = bracket(gx, gy);
            piece *= qx * qy;
            out += piece;
        }
    return out;
}

std::string format_lie_element(const LieElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, q] : e.terms()) {
        Rational mag = q;
        if (first) {
            if (q < 0) {
                os << "-";
                mag = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            mag = abs(q);
        }
        if (mag != 1) os << to_string(mag) << " ";
        os << format_generator(g);
        first = false;
    }
    return os.str();
}

}  // namespace svir
