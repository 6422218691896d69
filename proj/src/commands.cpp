#include "tor3/commands.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tor3/audit.hpp"
#include "tor3/corpus.hpp"
#include "tor3/parser.hpp"
#include "tor3/report.hpp"

namespace tor3 {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long long checked_characteristic(long long p) {
    if (!PrimeField::is_prime(p))
        throw BadCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    return p;
}

struct LoadedIdeal {
    IdealSpec spec;
    PrimeField field;
    MonomialOrder order;
    std::vector<Polynomial> generators;
};

LoadedIdeal load_ideal(const std::optional<std::string>& file,
                       const std::optional<std::string>& inline_ideal, const CliOptions& options) {
    if (!file && !inline_ideal) throw Error("no ideal given: pass a file or --ideal");
    if (file && inline_ideal) throw Error("give either a file or --ideal, not both");
    IdealSpec spec;
    if (file)
        spec = parse_ideal_file(read_file(*file));
    else
        spec.generator_text = split_generators(*inline_ideal);
    if (options.characteristic) spec.characteristic = checked_characteristic(*options.characteristic);
    PrimeField field(spec.characteristic);
    MonomialOrder order(options.order, 3);
    std::vector<Polynomial> generators =
        parse_generator_list(field, order, spec.variables, spec.generator_text);
    return {std::move(spec), field, order, std::move(generators)};
}

std::string ranks_text(const std::array<int, 3>& r) {
    return "(" + std::to_string(r[0]) + ", " + std::to_string(r[1]) + ", " + std::to_string(r[2]) +
           ")";
}

}  // namespace

int cmd_classify(const std::optional<std::string>& file,
                 const std::optional<std::string>& inline_ideal, const CliOptions& options,
                 std::ostream& out, std::ostream& err) {
    try {
        LoadedIdeal in = load_ideal(file, inline_ideal, options);
        Analysis a = analyze(in.field, in.order, in.generators, {options.max_degree});
        if (!options.quiet) {
            if (options.json) {
                out << report_to_json(a.report);
            } else {
                out << report_to_text(a.report);
                if (options.tables && a.report.gate.eligible)
                    out << tables_to_text(*a.ring, *a.homology, *a.tables, in.spec.variables);
            }
        }
        if (!a.report.gate.eligible) return 2;
        if (a.report.label.name == "UNCLASSIFIED") return 3;
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_corpus(const CliOptions& options, std::ostream& out, std::ostream& err) {
    try {
        PrimeField field(checked_characteristic(options.characteristic.value_or(32003)));
        MonomialOrder order(options.order, 3);
        const std::vector<std::string> variables{"x", "y", "z"};
        bool all_pass = true;
        int passed = 0;
        ordered_json entries = ordered_json::array();
        std::ostringstream text;
        for (const CorpusExpectation& expected : corpus()) {
            std::vector<Polynomial> generators =
                parse_generators(field, order, variables, expected.ideal_text);
            Analysis a = analyze(field, order, generators, {options.max_degree});
            std::vector<std::string> mismatches = compare_to_expectation(expected, a);
            bool pass = mismatches.empty();
            all_pass = all_pass && pass;
            passed += pass ? 1 : 0;
            if (options.json) {
                ordered_json entry;
                entry["name"] = expected.name;
                entry["pass"] = pass;
                entry["mismatches"] = mismatches;
                entry["report"] = ordered_json::parse(report_to_json(a.report));
                entries.push_back(std::move(entry));
            } else {
                text << (pass ? "pass  " : "FAIL  ") << expected.name << "  class "
                     << (a.report.gate.eligible ? a.report.label.display() : "rejected")
                     << "  type " << a.report.type << "  mu " << a.report.mu << "  ranks "
                     << ranks_text(a.report.ranks) << "\n";
                for (const std::string& m : mismatches) text << "      " << m << "\n";
            }
        }
        if (options.json) {
            ordered_json top;
            top["corpus"] = std::move(entries);
            top["pass"] = all_pass;
            if (!options.quiet) out << top.dump(2) << "\n";
        } else if (!options.quiet) {
            text << "corpus: " << passed << "/" << corpus().size() << " passed\n";
            out << text.str();
        }
        if (!all_pass) err << "error: corpus expectations failed\n";
        return all_pass ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::optional<std::string>& file,
               const std::optional<std::string>& inline_ideal, const CliOptions& options,
               std::ostream& out, std::ostream& err) {
    try {
        LoadedIdeal in = load_ideal(file, inline_ideal, options);
        Analysis a = analyze(in.field, in.order, in.generators, {options.max_degree});
        if (!a.report.gate.eligible) {
            if (!options.quiet)
                out << (options.json ? report_to_json(a.report) : report_to_text(a.report));
            err << "error: gate rejected the ring: " << a.report.gate.message << "\n";
            return 2;
        }
        std::vector<AuditCheck> checks = run_audit(*a.ring, *a.homology, *a.tables);
        bool all_pass = true;
        int passed = 0;
        for (const AuditCheck& c : checks) {
            all_pass = all_pass && c.passed;
            passed += c.passed ? 1 : 0;
        }
        if (options.json) {
            ordered_json j;
            j["checks"] = ordered_json::array();
            for (const AuditCheck& c : checks) {
                ordered_json entry;
                entry["name"] = c.name;
                entry["passed"] = c.passed;
                entry["detail"] = c.detail;
                j["checks"].push_back(std::move(entry));
            }
            j["pass"] = all_pass;
            if (!options.quiet) out << j.dump(2) << "\n";
        } else if (!options.quiet) {
            for (const AuditCheck& c : checks)
                out << (c.passed ? "ok    " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
            out << "verify: " << passed << "/" << checks.size() << " passed\n";
        }
        if (!all_pass) err << "error: invariant audit failed\n";
        return all_pass ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tor3
