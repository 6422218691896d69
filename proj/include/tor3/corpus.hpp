#ifndef TOR3_CORPUS_HPP
#define TOR3_CORPUS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tor3/tor_algebra.hpp"

namespace tor3 {

/// Expected classification data for one built-in ideal.
struct CorpusExpectation {
    std::string name;
    std::string ideal_text;
    std::string class_display;
    int mu = 0;
    int type = 0;
    std::array<int, 3> ranks{0, 0, 0};
    std::array<int, 3> pqr{0, 0, 0};
    std::vector<int> hilbert_prefix;        // values from degree 0
    int hilbert_tail = 0;                   // constant value past the prefix
    std::vector<int> socle_degrees;         // sorted with multiplicity
    std::vector<std::string> socle_members; // elements that must lie in the socle
};

/// The eight built-in ideals (two chains of four) with their expected data.
const std::vector<CorpusExpectation>& corpus();

/// Compares a finished analysis against an expectation; returns one line per
/// mismatched field, empty when everything agrees.
std::vector<std::string> compare_to_expectation(const CorpusExpectation& expected,
                                                const Analysis& analysis);

}  // namespace tor3

#endif
