#ifndef SVIR_PARSER_HPP
#define SVIR_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "svir/action.hpp"
#include "svir/algebra.hpp"
#include "svir/module_basis.hpp"
#include "svir/rational.hpp"

namespace svir {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// One summand: coefficient, a juxtaposed generator word, and an optional
/// trailing w. "4 L(-1)G(-3/2)w" has coeff 4, two generators, has_w true.
struct ExpressionTerm {
    Rational coeff;
    std::vector<GeneratorIndex> gens;
    bool has_w = false;
    bool operator==(const ExpressionTerm&) const = default;
};

struct Expression {
    Sector sector = Sector::NeveuSchwarz;
    std::vector<ExpressionTerm> terms;
    bool operator==(const Expression&) const = default;
};

/// Whitespace-insensitive recursive descent for
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := rational? gen* 'w'?        (at least one generator or w)
///   gen   := 'L' '(' int ')' | 'G' '(' index ')' | 'C'
/// G indices must match the sector: odd halves like 3/2 in the NS sector,
/// integers in the Ramond sector. Throws ParseError with a position.
Expression parse_expression(const std::string& text, Sector sector);

/// Canonical rendering; parse_expression(format_expression(e), e.sector) == e.
std::string format_expression(const Expression& e);

/// Interprets every term as a pure generator combination (single generator,
/// no w); throws std::invalid_argument otherwise.
LieElement to_lie_element(const Expression& e);

/// Evaluates Σ coeff · act_word(gens, w); every term must carry the
/// trailing w, otherwise std::invalid_argument.
ModuleVector evaluate_module_expression(const Expression& e, const WhittakerModule& module);

}  // namespace svir

#endif  // SVIR_PARSER_HPP
