#pragma once

#include "qplane/algebra.hpp"
#include "qplane/tensor.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace qplane {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

using Parsed = std::variant<Element, TensorElement>;

/**
 * Parses the expression grammar over one presentation:
 *
 *   expr       := ['-'] tensorterm (('+' | '-') tensorterm)*
 *   tensorterm := term ('(x)' term)*
 *   term       := factor ('*' factor)*
 *   factor     := rational | 'q' ['^' int] | generator ['^' int] | '(' expr ')'
 *   rational   := int ['/' int]
 *
 * '(x)' is the tensor separator; it binds tighter than addition and looser
 * than '*', and is recognized only after a complete term, so a leading
 * '(x)' is an ordinary parenthesized generator. Negative powers require an
 * invertible generator (x^-1 parses to xi, K^-1 to Ki and conversely).
 * Exponents are capped at 4096 in absolute value. The result is
 * normalized. Malformed input raises ParseError with the byte position.
 */
Parsed parse(std::string_view input, const Presentation& p);

// As parse, but rejects tensor expressions (ParseError).
Element parse_element(std::string_view input, const Presentation& p);

// Canonical textual form; parse(render(v)) reproduces v. Words render
// with '*' between symbols and repeated symbols compressed to powers;
// tensor factors are joined with ' (x) ' and empty factors render as 1.
std::string render_word(const Word& w);
std::string render(const Element& e);
std::string render(const TensorElement& t);
std::string render(const QScalar& s);

std::ostream& operator<<(std::ostream& os, const Element& e);
std::ostream& operator<<(std::ostream& os, const TensorElement& t);

} // namespace qplane
