#include "tor3/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "tor3/parser.hpp"

namespace tor3 {

const std::vector<CorpusExpectation>& corpus() {
    static const std::vector<CorpusExpectation> table = [] {
        std::vector<CorpusExpectation> out;
        const std::string g1 = "x*y^2, x*y*z, y*z^2, x^4 - y^3*z, x*z^3 - y^4";
        const std::string g2 = g1 + ", x^3*y - z^4";
        const std::string g3 = g2 + ", x^2*z^2";
        const std::string g4 = g3 + ", x^3*z";
        const std::string b1 = "x^3, x^2*y, y*z^2, z^3";
        const std::string b2 = b1 + ", x*y*z";
        const std::string b3 = b2 + ", x*y^2 - y^3";
        const std::string b4 = b3 + ", y^2*z";
        out.push_back({"g1", g1, "G(2)", 5, 2, {5, 6, 2}, {0, 1, 2},
                       {1, 3, 6, 7, 6, 3}, 1, {5, 5}, {"x^4*y", "x^3*z^2"}});
        out.push_back({"g2", g2, "G(3)", 6, 2, {6, 7, 2}, {0, 1, 3},
                       {1, 3, 6, 7, 5, 2}, 0, {5, 5}, {}});
        out.push_back({"g3", g3, "G(4)", 7, 2, {7, 8, 2}, {0, 1, 4},
                       {1, 3, 6, 7, 4, 1}, 0, {4, 5}, {"x^4*y", "x^3*z"}});
        out.push_back({"g4", g4, "G(5)", 8, 2, {8, 9, 2}, {0, 1, 5},
                       {1, 3, 6, 7, 3, 1}, 0, {3, 5}, {"x^4*y", "x^2*z"}});
        out.push_back({"b1", b1, "B", 4, 1, {4, 4, 1}, {1, 1, 2},
                       {1, 3, 6, 6, 5}, 4, {4}, {"x^2*z^2"}});
        out.push_back({"b2", b2, "B", 5, 1, {5, 5, 1}, {1, 1, 2},
                       {1, 3, 6, 5, 4}, 3, {4}, {"x^2*z^2"}});
        out.push_back({"b3", b3, "B", 6, 3, {6, 8, 3}, {1, 1, 2},
                       {1, 3, 6, 4, 1}, 0, {3, 3, 4}, {"x^2*z^2", "x*y^2", "y^2*z"}});
        out.push_back({"b4", b4, "B", 7, 3, {7, 9, 3}, {1, 1, 2},
                       {1, 3, 6, 3, 1}, 0, {2, 3, 4}, {"x^2*z^2", "x*y^2", "y*z"}});
        return out;
    }();
    return table;
}

std::vector<std::string> compare_to_expectation(const CorpusExpectation& expected,
                                                const Analysis& analysis) {
    std::vector<std::string> mismatches;
    const ClassificationReport& report = analysis.report;
    auto complain = [&](const std::string& field, const std::string& got,
                        const std::string& want) {
        mismatches.push_back(field + ": got " + got + ", expected " + want);
    };

    if (!report.gate.eligible) {
        complain("gate", to_string(*report.gate.reason), "Eligible");
        return mismatches;
    }
    if (report.label.display() != expected.class_display)
        complain("class", report.label.display(), expected.class_display);
    if (report.mu != expected.mu)
        complain("mu", std::to_string(report.mu), std::to_string(expected.mu));
    if (report.type != expected.type)
        complain("type", std::to_string(report.type), std::to_string(expected.type));
    for (int i = 0; i < 3; ++i)
        if (report.ranks[i] != expected.ranks[i]) {
            complain("ranks", "(" + std::to_string(report.ranks[0]) + ", " +
                                  std::to_string(report.ranks[1]) + ", " +
                                  std::to_string(report.ranks[2]) + ")",
                     "(" + std::to_string(expected.ranks[0]) + ", " +
                         std::to_string(expected.ranks[1]) + ", " +
                         std::to_string(expected.ranks[2]) + ")");
            break;
        }
    for (int i = 0; i < 3; ++i)
        if (report.pqr[i] != expected.pqr[i]) {
            complain("pqr", "(" + std::to_string(report.pqr[0]) + ", " +
                                std::to_string(report.pqr[1]) + ", " +
                                std::to_string(report.pqr[2]) + ")",
                     "(" + std::to_string(expected.pqr[0]) + ", " +
                         std::to_string(expected.pqr[1]) + ", " +
                         std::to_string(expected.pqr[2]) + ")");
            break;
        }

    for (std::size_t j = 0; j < report.hilbert.size(); ++j) {
        int want = j < expected.hilbert_prefix.size() ? expected.hilbert_prefix[j]
                                                      : expected.hilbert_tail;
        if (report.hilbert[j] != want) {
            complain("hilbert[" + std::to_string(j) + "]", std::to_string(report.hilbert[j]),
                     std::to_string(want));
            break;
        }
    }
    if (report.hilbert.size() < expected.hilbert_prefix.size())
        complain("hilbert length", std::to_string(report.hilbert.size()),
                 "at least " + std::to_string(expected.hilbert_prefix.size()));

    const QuotientRing& ring = *analysis.ring;
    std::vector<int> degrees;
    for (const auto& [degree, coords] : ring.socle()) degrees.push_back(degree);
    std::sort(degrees.begin(), degrees.end());
    if (degrees != expected.socle_degrees) {
        std::ostringstream got, want;
        for (int d : degrees) got << d << " ";
        for (int d : expected.socle_degrees) want << d << " ";
        complain("socle degrees", got.str(), want.str());
    }
    for (const std::string& member : expected.socle_members) {
        Polynomial f = parse_polynomial(ring.field(), ring.order(), {"x", "y", "z"}, member);
        RingCoords target = ring.coords(f);
        std::vector<FpVec> generators;
        for (const auto& [degree, coords] : ring.socle())
            if (degree == target.degree) generators.push_back(coords);
        SpanSolver solver(ring.field(), ring.hilbert(target.degree), generators);
        if (!solver.solve(target.coords))
            complain("socle membership", member, "an element of the socle");
    }
    return mismatches;
}

}  // namespace tor3
