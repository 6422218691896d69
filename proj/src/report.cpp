#include "tor3/report.hpp"

#include <sstream>

#include "json.hpp"

namespace tor3 {

namespace {

using nlohmann::ordered_json;

std::string gate_name(const GateResult& gate) {
    return gate.eligible ? "Eligible" : to_string(*gate.reason);
}

ordered_json json_object(const ClassificationReport& report) {
    ordered_json j;
    j["char"] = report.characteristic;
    if (report.gate.eligible) {
        j["mu"] = report.mu;
        j["type"] = report.type;
        j["ranks"] = report.ranks;
        j["hilbert"] = report.hilbert;
        j["pqr"] = report.pqr;
        ordered_json cls;
        cls["name"] = report.label.name;
        if (report.label.params.empty())
            cls["param"] = nullptr;
        else if (report.label.params.size() == 1)
            cls["param"] = report.label.params[0];
        else
            cls["param"] = report.label.params;
        j["class"] = cls;
    } else {
        j["mu"] = nullptr;
        j["type"] = nullptr;
        j["ranks"] = nullptr;
        j["hilbert"] = nullptr;
        j["pqr"] = nullptr;
        j["class"] = nullptr;
    }
    j["gate"] = gate_name(report.gate);
    ordered_json checks = ordered_json::object();
    for (const auto& [name, passed] : report.checks) checks[name] = passed;
    j["checks"] = checks;
    return j;
}

// Symmetric residue, so small negative coefficients print as such.
long long symmetric(const Fp& x) {
    long long v = x.value(), p = x.modulus();
    return v > p / 2 ? v - p : v;
}

std::string combo_text(const FpVec& coords, const std::string& prefix) {
    std::string out;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        long long c = symmetric(coords[k]);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += prefix + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

std::string mask_label(int mask, const std::vector<std::string>& variables) {
    std::string out = "e_";
    for (int v = 0; v < 3; ++v)
        if (mask & (1 << v)) out += variables[static_cast<std::size_t>(v)];
    return out;
}

std::string koszul_text(const QuotientRing& ring, const KoszulElement& u,
                        const std::vector<std::string>& variables) {
    std::string out;
    for (int mask : koszul_masks(u.homological)) {
        bool zero = true;
        for (const Fp& x : u.comp[mask])
            if (!x.is_zero()) zero = false;
        if (zero) continue;
        Polynomial coeff = ring.to_polynomial({u.internal - u.homological, u.comp[mask]});
        std::string text = to_string(coeff, variables);
        if (!out.empty()) out += " + ";
        if (text == "1")
            out += mask_label(mask, variables);
        else if (coeff.nterms() == 1)
            out += text + "*" + mask_label(mask, variables);
        else
            out += "(" + text + ")*" + mask_label(mask, variables);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
    return json_object(report).dump(2) + "\n";
}

std::string report_to_text(const ClassificationReport& report) {
    std::ostringstream out;
    out << "class    " << (report.gate.eligible ? report.label.display() : "rejected") << "\n";
    out << "char     " << report.characteristic << "\n";
    out << "order    " << report.order_name << "\n";
    out << "gate     " << gate_name(report.gate) << " (" << report.gate.message << ")\n";
    if (!report.gate.eligible) return out.str();
    out << "mu       " << report.mu << "\n";
    out << "type     " << report.type << "\n";
    out << "ranks    (" << report.ranks[0] << ", " << report.ranks[1] << ", " << report.ranks[2]
        << ")\n";
    out << "pqr      (" << report.pqr[0] << ", " << report.pqr[1] << ", " << report.pqr[2]
        << ")\n";
    out << "hilbert  ";
    for (std::size_t j = 0; j < report.hilbert.size(); ++j)
        out << (j ? ", " : "") << report.hilbert[j];
    out << "\n";
    int passed = 0;
    for (const auto& [name, ok] : report.checks) passed += ok ? 1 : 0;
    out << "checks   " << passed << "/" << report.checks.size() << " passed\n";
    for (const auto& [name, ok] : report.checks)
        if (!ok) out << "  failed: " << name << "\n";
    return out.str();
}

std::string tables_to_text(const QuotientRing& ring, const HomologyBasis& homology,
                           const MultTables& tables, const std::vector<std::string>& variables) {
    std::ostringstream out;
    const char* prefix[4] = {"", "e", "f", "g"};
    out << "representatives:\n";
    for (int i = 1; i <= 3; ++i) {
        std::vector<const KoszulElement*> reps = homology.reps(i);
        for (std::size_t k = 0; k < reps.size(); ++k)
            out << "  " << prefix[i] << k + 1 << " (degree " << reps[k]->internal
                << ") = " << koszul_text(ring, *reps[k], variables) << "\n";
    }
    std::size_t h1 = tables.deg1.size();
    out << "products of two degree-one classes:\n";
    for (std::size_t a = 0; a < h1; ++a)
        for (std::size_t b = a + 1; b < h1; ++b)
            out << "  e" << a + 1 << "*e" << b + 1 << " = " << combo_text(tables.t11[a][b], "f")
                << "\n";
    out << "products of a degree-one and a degree-two class:\n";
    for (std::size_t a = 0; a < h1; ++a)
        for (std::size_t b = 0; b < tables.deg2.size(); ++b)
            out << "  e" << a + 1 << "*f" << b + 1 << " = " << combo_text(tables.t12[a][b], "g")
                << "\n";
    return out.str();
}

}  // namespace tor3
