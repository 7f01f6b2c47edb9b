// cli.hpp -- the command surface. run_cli is a plain function over argv-style
// arguments so the binary stays a thin wrapper and the tests can drive every
// command in-process.
//
// Exit contract: 0 = ran, everything requested holds; 1 = ran, with FAIL or
// refutation findings (reports still emitted); 2 = usage or input errors.

#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grs/antihom.hpp"
#include "grs/approx.hpp"
#include "grs/catalog.hpp"
#include "grs/core.hpp"
#include "grs/example_audit.hpp"
#include "grs/ideals.hpp"
#include "grs/quotient.hpp"
#include "grs/scenario.hpp"
#include "grs/theorems.hpp"

namespace grs::cli {

/// "{a,b}" with optional whitespace, "{}" for the empty set.
inline ElementSet parse_set_literal(const std::string& text, const Carrier& carrier) {
    std::string body;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size() || text[i] != '{') {
        throw DomainError("set literal must look like {a,b}: got '" + text + "'");
    }
    ++i;
    const std::size_t close = text.find('}', i);
    if (close == std::string::npos) {
        throw DomainError("set literal is missing '}': '" + text + "'");
    }
    for (std::size_t k = close + 1; k < text.size(); ++k) {
        if (!std::isspace(static_cast<unsigned char>(text[k]))) {
            throw DomainError("trailing characters after set literal: '" + text + "'");
        }
    }
    body = text.substr(i, close - i);

    std::vector<std::string> names;
    std::string current;
    for (char ch : body) {
        if (ch == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            current += ch;
        }
    }
    if (!current.empty()) names.push_back(current);
    return ElementSet::of(carrier, names);
}

/// Juxtaposed set literals, e.g. "{1,3}{2,4}" or "{1,3} | {2,4}".
inline Partition parse_partition_literal(const std::string& text, const Carrier& carrier) {
    std::vector<ElementSet> blocks;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '|') {
            ++i;
            continue;
        }
        if (ch != '{') throw DomainError("partition must be a sequence of set literals");
        const std::size_t close = text.find('}', i);
        if (close == std::string::npos) throw DomainError("partition block is missing '}'");
        blocks.push_back(parse_set_literal(text.substr(i, close - i + 1), carrier));
        i = close + 1;
    }
    if (blocks.empty()) throw DomainError("partition lists no blocks");
    return Partition(carrier, std::move(blocks));
}

namespace detail {

struct Output {
    std::ostream& out;
    bool machine;

    /// Comment/heading line, dropped in machine format.
    void heading(const std::string& text) {
        if (!machine) out << "# " << text << "\n";
    }
    void line(const std::string& text) { out << text << "\n"; }
};

inline Scenario load(const std::string& path, const ParseOptions& options = {}) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), options);
}

inline const SetValuedMap& need_map(const Scenario& s, const std::string& name) {
    if (const SetValuedMap* m = s.find_map(name)) return *m;
    throw DomainError("no map named '" + name + "' in the scenario");
}

inline const GammaSemigroup& need_structure(const Scenario& s, const std::string& name) {
    if (const Scenario::StructureEntry* e = s.find_structure(name)) return e->structure;
    throw DomainError("no structure named '" + name + "' in the scenario");
}

inline int cmd_validate(const std::string& path, Output& io) {
    Scenario scenario = load(path, ParseOptions{.defer_validation = true});
    io.heading("validate " + path);
    bool all_valid = true;
    for (const Scenario::StructureEntry& e : scenario.structures()) {
        ValidationReport report = e.structure.validate();
        std::string line = "structure=" + e.structure.name() +
                           " valid=" + (report.valid ? "true" : "false");
        if (!report.valid) {
            all_valid = false;
            const AssociativityFailure& w = report.witnesses.front();
            line += " failures=" + std::to_string(report.witnesses.size()) + " witness=(" + w.a +
                    "," + w.alpha + "," + w.b + "," + w.beta + "," + w.c + ") lhs=" + w.lhs +
                    " rhs=" + w.rhs;
        }
        io.line(line);
    }
    if (scenario.structures().empty()) io.line("structures=0");
    return all_valid ? 0 : 1;
}

inline int cmd_approx(const std::string& path, const std::string& map_name,
                      const std::string& set_literal, bool pawlak,
                      const std::string& partition_literal, Output& io) {
    Scenario scenario = load(path);
    const SetValuedMap& map = need_map(scenario, map_name);
    ElementSet set = parse_set_literal(set_literal, map.target());
    ApproximationPair pair = approximate(map, set);
    io.heading("approx " + path);
    io.line("map=" + map.name());
    io.line("set=" + set.to_string());
    io.line("lower=" + pair.lower.to_string());
    io.line("upper=" + pair.upper.to_string());
    io.line(std::string("definable=") + (pair.definable ? "true" : "false"));
    if (pawlak) {
        Partition partition = parse_partition_literal(partition_literal, map.target());
        io.line("pawlak_lower=" + pawlak_lower(partition, set).to_string());
        io.line("pawlak_upper=" + pawlak_upper(partition, set).to_string());
        if (const GammaSemigroup* target = map.target_structure()) {
            CongruenceCheck cc = is_congruence(*target, partition);
            std::string line = std::string("congruence=") + (cc.congruence ? "true" : "false");
            if (!cc.congruence) line += " witness=" + cc.witness->to_string();
            io.line(line);
            if (cc.congruence) {
                CompletenessCheck comp = is_complete_congruence(*target, partition);
                std::string cline = std::string("complete=") + (comp.complete ? "true" : "false");
                if (!comp.complete) {
                    cline += " witness=(" + comp.witness->a + "," + comp.witness->b + ") lhs=" +
                             comp.witness->class_product.to_string() + " rhs=" +
                             comp.witness->product_classes.to_string();
                }
                io.line(cline);
            }
        }
    }
    return 0;
}

inline int cmd_classify(const std::string& path, const std::string& structure_name,
                        const std::string& set_literal, Output& io) {
    Scenario scenario = load(path);
    const GammaSemigroup& s = need_structure(scenario, structure_name);
    ElementSet set = parse_set_literal(set_literal, s.elements());
    ClassificationReport report = classify_subset(s, set);
    io.heading("classify " + path);
    io.line("structure=" + s.name());
    io.line("set=" + set.to_string());
    for (IdealKind kind : all_ideal_kinds) {
        const IdealVerdict& v = report.verdicts.at(kind);
        std::string line = "kind=" + std::string(to_string(kind)) +
                           " holds=" + (v.holds ? "true" : "false") +
                           " bare=" + (v.bare_holds ? "true" : "false");
        if (v.witness) line += " witness=" + v.witness->to_string();
        io.line(line);
    }
    std::string prime = std::string("prime=") + (report.prime.prime ? "true" : "false");
    if (report.prime.witness) prime += " witness=" + report.prime.witness->to_string();
    io.line(prime);
    return 0;
}

inline int cmd_antihom(const std::string& path, const std::string& map_name, Output& io) {
    Scenario scenario = load(path);
    const SetValuedMap& map = need_map(scenario, map_name);
    AntiHomVerdict verdict = check_anti_hom(map);
    io.heading("antihom " + path);
    io.line("map=" + map.name());
    io.line("level=" + std::string(to_string(verdict.level)));
    if (verdict.plain_witness) {
        io.line("violation=" + verdict.plain_witness->to_string());
    }
    if (verdict.strong_witness) {
        const EqualityFailure& w = *verdict.strong_witness;
        io.line("proper_inclusion=(" + w.a + "," + w.gamma + "," + w.b + ") image=" +
                w.image.to_string() + " product=" + w.product.to_string());
    }
    return verdict.level == AntiHomLevel::None ? 1 : 0;
}

inline int cmd_enumerate(const std::string& path, const std::string& from, const std::string& to,
                         const std::string& filter_name, std::uint64_t budget, std::uint64_t seed,
                         Output& io) {
    Scenario scenario = load(path);
    const GammaSemigroup& source = need_structure(scenario, from);
    const GammaSemigroup& target = need_structure(scenario, to);
    AntiHomLevel filter = AntiHomLevel::None;
    if (filter_name == "plain") filter = AntiHomLevel::Plain;
    else if (filter_name == "strong") filter = AntiHomLevel::Strong;
    else if (!filter_name.empty() && filter_name != "none")
        throw DomainError("filter must be plain or strong");

    MapEnumerator stream(source, target, filter, budget, seed);
    io.heading("enumerate " + from + " -> " + to);
    io.line(std::string("exhaustive=") + (stream.exhaustive() ? "true" : "false"));
    io.line("raw_total=" + std::to_string(stream.raw_total()));
    io.line("seed=" + std::to_string(seed));
    std::uint64_t yielded = 0;
    while (auto map = stream.next()) {
        AntiHomVerdict v = check_anti_hom(*map);
        io.line("map=" + map->name() + " level=" + std::string(to_string(v.level)) +
                " images=" + map->describe_images());
        ++yielded;
    }
    io.line("yielded=" + std::to_string(yielded));
    return 0;
}

inline int cmd_quotient(const std::string& path, const std::string& map_name, Output& io) {
    Scenario scenario = load(path);
    const SetValuedMap& map = need_map(scenario, map_name);
    io.heading("quotient " + path);
    io.line("map=" + map.name());
    if (!map.source_structure()) {
        QuotientClasses classes(map);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            io.line("class=" + std::to_string(k) + " image=" +
                    classes.classes()[k].image.to_string() + " preimages=" +
                    classes.classes()[k].preimages.to_string());
        }
        io.line("note=source is a plain universe, no induced operation");
        return 0;
    }
    QuotientStructure q = build_quotient(map);
    for (std::size_t k = 0; k < q.classes.size(); ++k) {
        io.line("class=" + std::to_string(k) + " image=" +
                q.classes.classes()[k].image.to_string() + " preimages=" +
                q.classes.classes()[k].preimages.to_string());
    }
    io.line(std::string("well_defined=") + (q.well_defined ? "true" : "false"));
    if (!q.well_defined) {
        io.line("witness=" + q.failure_witness->to_string());
        return 1;
    }
    const GammaSemigroup& induced = *q.induced;
    for (std::size_t g = 0; g < induced.gammas().size(); ++g)
        for (std::size_t a = 0; a < induced.elements().size(); ++a)
            for (std::size_t b = 0; b < induced.elements().size(); ++b) {
                io.line("op gamma=" + induced.gammas().name_of(g) + " left=" +
                        induced.elements().name_of(a) + " right=" + induced.elements().name_of(b) +
                        " result=" + induced.elements().name_of(induced.apply(a, g, b)));
            }
    return 0;
}

inline std::string render_audit_line(const AuditResult& r) {
    std::string line = "theorem=" + r.id + " status=" + std::string(to_string(r.status())) +
                       " satisfied=" + std::to_string(r.counts.satisfied) +
                       " total=" + std::to_string(r.counts.total);
    if (r.witness) line += " witness=" + r.witness->to_string();
    if (!r.note.empty()) line += " note=" + r.note;
    return line;
}

inline int cmd_audit(const std::string& path, const std::string& map_name,
                     const std::string& theorem_id, std::optional<std::uint64_t> samples,
                     std::uint64_t seed, Output& io) {
    Scenario scenario = load(path);
    const SetValuedMap& map = need_map(scenario, map_name);
    if (!theorem_id.empty()) theorem_spec(theorem_id); // reject unknown ids up front

    AuditScope scope;
    if (samples) {
        scope.sampled = true;
        scope.samples = *samples;
        scope.seed = seed;
    }
    io.heading("audit " + path + " map " + map_name);
    io.line("map=" + map.name());
    io.line(std::string("scope=") +
            (scope.sampled ? "sampled samples=" + std::to_string(scope.samples) +
                                 " seed=" + std::to_string(seed)
                           : "all"));
    bool any_fail = false;
    for (const AuditResult& r : audit_all(map, scope)) {
        if (!theorem_id.empty() && r.id != theorem_id) continue;
        any_fail = any_fail || r.status() == AuditStatus::Fail;
        io.line(render_audit_line(r));
    }
    return any_fail ? 1 : 0;
}

inline int cmd_audit_paper(Output& io) {
    example_audit::Report report = example_audit::audit_paper_examples();
    io.out << (io.machine ? example_audit::render_machine(report)
                          : example_audit::render_text(report));
    return report.fail_count() > 0 ? 1 : 0;
}

} // namespace detail

/// Entry point shared by the binary and the test suite. `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite Gamma-semigroup rough-approximation toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "report format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string file, map_name, set_literal, structure_name, partition_literal;
    std::string from, to, filter = "none", theorem_id;
    bool pawlak = false;
    std::uint64_t budget = 1000000, seed = 0;
    std::optional<std::uint64_t> samples;

    CLI::App* validate = app.add_subcommand("validate", "check structure associativity");
    validate->add_option("file", file)->required();

    CLI::App* approx = app.add_subcommand("approx", "T-rough approximations of a set");
    approx->add_option("file", file)->required();
    approx->add_option("--map", map_name)->required();
    approx->add_option("--set", set_literal)->required();
    approx->add_flag("--pawlak", pawlak, "also compute partition approximations");
    approx->add_option("--partition", partition_literal, "blocks, e.g. \"{1,3}{2,4}\"");

    CLI::App* classify = app.add_subcommand("classify", "ideal taxonomy of a subset");
    classify->add_option("file", file)->required();
    classify->add_option("--structure", structure_name)->required();
    classify->add_option("--set", set_literal)->required();

    CLI::App* antihom = app.add_subcommand("antihom", "anti-homomorphism level of a map");
    antihom->add_option("file", file)->required();
    antihom->add_option("--map", map_name)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream set-valued maps");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--from", from)->required();
    enumerate->add_option("--to", to)->required();
    enumerate->add_option("--filter", filter)->check(CLI::IsMember({"none", "plain", "strong"}));
    enumerate->add_option("--budget", budget);
    enumerate->add_option("--seed", seed);

    CLI::App* quotient = app.add_subcommand("quotient", "T-rough quotient of a map");
    quotient->add_option("file", file)->required();
    quotient->add_option("--map", map_name)->required();

    CLI::App* audit = app.add_subcommand("audit", "run the theorem registry over a map");
    audit->add_option("file", file)->required();
    audit->add_option("--map", map_name)->required();
    audit->add_option("--theorem", theorem_id, "restrict to one registered id");
    audit->add_option("--samples", samples, "sample this many subset tuples per id");
    audit->add_option("--seed", seed);

    CLI::App* audit_paper =
        app.add_subcommand("audit-paper", "replay the published example claims");

    std::vector<std::string> argv = args;
    argv.insert(argv.begin(), "grs");
    std::vector<const char*> raw;
    for (const std::string& a : argv) raw.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    detail::Output io{out, format == "machine"};
    try {
        if (validate->parsed()) return detail::cmd_validate(file, io);
        if (approx->parsed()) {
            if (pawlak && partition_literal.empty()) {
                throw DomainError("--pawlak needs --partition");
            }
            return detail::cmd_approx(file, map_name, set_literal, pawlak, partition_literal, io);
        }
        if (classify->parsed())
            return detail::cmd_classify(file, structure_name, set_literal, io);
        if (antihom->parsed()) return detail::cmd_antihom(file, map_name, io);
        if (enumerate->parsed())
            return detail::cmd_enumerate(file, from, to, filter, budget, seed, io);
        if (quotient->parsed()) return detail::cmd_quotient(file, map_name, io);
        if (audit->parsed())
            return detail::cmd_audit(file, map_name, theorem_id, samples, seed, io);
        if (audit_paper->parsed()) return detail::cmd_audit_paper(io);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace grs::cli
