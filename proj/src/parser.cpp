#include "svir/parser.hpp"

#include <cctype>

namespace svir {

namespace {

class Scanner {
  public:
    Scanner(const std::string& text, Sector sector) : text_(text), sector_(sector) {}

    Expression parse() {
        Expression e;
        e.sector = sector_;
        skip_ws();
        bool negative = consume_if('-');
        e.terms.push_back(parse_term(negative));
        skip_ws();
        while (!at_end()) {
            if (consume_if('+'))
                e.terms.push_back(parse_term(false));
            else if (consume_if('-'))
                e.terms.push_back(parse_term(true));
            else
                fail("expected '+' or '-' between terms");
            skip_ws();
        }
        return e;
    }

  private:
    ExpressionTerm parse_term(bool negative) {
        ExpressionTerm term;
        term.coeff = Rational(1);
        skip_ws();
        if (at_end()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) term.coeff = parse_rational_token();
        skip_ws();
        while (!at_end() && (peek() == 'L' || peek() == 'G' || peek() == 'C')) {
            term.gens.push_back(parse_generator());
            skip_ws();
        }
        if (!at_end() && peek() == 'w') {
            ++pos_;
            term.has_w = true;
        }
        if (term.gens.empty() && !term.has_w)
            fail("a term needs at least one generator or w");
        if (negative) term.coeff = -term.coeff;
        return term;
    }

    GeneratorIndex parse_generator() {
        const std::size_t start = pos_;
        const char kind = peek();
        ++pos_;
        if (kind == 'C') return gen_C(sector_);
        skip_ws();
        if (!consume_if('(')) fail("expected '(' after generator letter");
        skip_ws();
        const long numerator = parse_integer();
        skip_ws();
        long denominator = 1;
        if (consume_if('/')) {
            skip_ws();
            denominator = parse_integer();
            skip_ws();
        }
        if (!consume_if(')')) fail("expected ')' after generator index");

        if (kind == 'L') {
            if (denominator != 1) fail("L takes an integer index", start);
            return gen_L(sector_, static_cast<int>(numerator));
        }
        // G: the index must live in ℤ + 1/2 for NS and in ℤ for Ramond.
        if (denominator == 1) {
            if (sector_ == Sector::NeveuSchwarz)
                fail("NS G indices are odd halves, like G(-1/2)", start);
            return gen_G_doubled(sector_, 2 * static_cast<int>(numerator));
        }
        if (denominator != 2 || numerator % 2 == 0)
            fail("G index denominator must be 2 with an odd numerator", start);
        if (sector_ == Sector::Ramond)
            fail("Ramond G indices are integers, like G(1)", start);
        return gen_G_doubled(sector_, static_cast<int>(numerator));
    }

    Rational parse_rational_token() {
        const std::size_t start = pos_;
        const long numerator = parse_integer();
        skip_ws();
        if (consume_if('/')) {
            skip_ws();
            const long denominator = parse_integer();
            if (denominator == 0) fail("zero denominator", start);
            return make_rational(numerator, denominator);
        }
        return make_rational(numerator);
    }

    long parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = consume_if('-');
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number", start);
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000) fail("index or coefficient out of range", start);
            ++pos_;
        }
        return negative ? -value : value;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool consume_if(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message, at);
    }

    const std::string& text_;
    Sector sector_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(const std::string& text, Sector sector) {
    return Scanner(text, sector).parse();
}

std::string format_expression(const Expression& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : e.terms) {
        Rational coeff = term.coeff;
        if (first) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        std::string body;
        for (const auto& g : term.gens) body += format_generator(g);
        if (term.has_w) body += "w";
        if (coeff != 1) {
            out += to_string(coeff);
            out += " ";
        }
        out += body;
    }
    return out;
}

LieElement to_lie_element(const Expression& e) {
    LieElement x;
    for (const auto& term : e.terms) {
        if (term.has_w || term.gens.size() != 1)
            throw std::invalid_argument(
                "expected a combination of single generators without w");
        x.add(term.gens.front(), term.coeff);
    }
    return x;
}

ModuleVector evaluate_module_expression(const Expression& e, const WhittakerModule& module) {
    ModuleVector out;
    for (const auto& term : e.terms) {
        if (!term.has_w)
            throw std::invalid_argument("every module term must end in w");
        ModuleVector v = module.act_word(term.gens, vacuum_vector(module.sector()));
        v *= term.coeff;
        out += v;
    }
    return out;
}

}  // namespace svir
