#ifndef TOR3_PARSER_HPP
#define TOR3_PARSER_HPP

#include <string>
#include <vector>

#include "tor3/polynomial.hpp"

namespace tor3 {

/// Parsed form of an ideal description: variable names, characteristic, and
/// the generator expressions still as text.
struct IdealSpec {
    std::vector<std::string> variables{"x", "y", "z"};
    long long characteristic = 32003;
    std::vector<std::string> generator_text;
};

/// Parses one polynomial expression.  Grammar: signed sums of products, where
/// a product multiplies integer literals and powers `v^k` either with `*` or
/// by juxtaposition, and parentheses group subexpressions.  Variable names are
/// matched longest-first from `variables`.
Polynomial parse_polynomial(const PrimeField& field, const MonomialOrder& order,
                            const std::vector<std::string>& variables, const std::string& text);

/// Splits a generator list at top-level commas (commas inside parentheses do
/// not split) after stripping one optional pair of parentheses around the
/// whole list.  Whitespace-only input yields an empty list.
std::vector<std::string> split_generators(const std::string& text);

/// Splits, parses, and homogeneity-checks every generator in a list.
std::vector<Polynomial> parse_generators(const PrimeField& field, const MonomialOrder& order,
                                         const std::vector<std::string>& variables,
                                         const std::string& text);

/// Same, for a list that is already split.
std::vector<Polynomial> parse_generator_list(const PrimeField& field, const MonomialOrder& order,
                                             const std::vector<std::string>& variables,
                                             const std::vector<std::string>& pieces);

/// Parses the line-oriented ideal file format: `ring: x, y, z` (optional),
/// `char: <prime>` (optional, default 32003), `ideal: <generators>`; `#`
/// starts a comment.
IdealSpec parse_ideal_file(const std::string& content);

}  // namespace tor3

#endif
