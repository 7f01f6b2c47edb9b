// scenario.hpp -- the grs1 text format: named structures, plain universes and
// set-valued maps, with line-numbered diagnostics and a canonical serializer
// (parse(serialize(s)) == s, serialize is idempotent).
//
//   format grs1
//
//   structure M [unchecked]
//   elements: a b c
//   gammas: alpha
//   table alpha:
//   a b c
//   b b b
//   c b b
//
//   universe X
//   elements: 1 2 3 4
//
//   map T from M to M
//   a -> b c
//   ...
//
// '#' starts a comment; a blank line ends a block. Structures are validated
// at load unless the block says `unchecked` (or the caller defers validation,
// which the validate command uses to report failures instead of dying).

#pragma once

#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grs/approx.hpp"
#include "grs/core.hpp"

namespace grs {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class Scenario {
public:
    struct StructureEntry {
        GammaSemigroup structure;
        bool unchecked = false;
    };

    enum class EntryKind { Structure, Universe, Map };
    struct Declaration {
        EntryKind kind;
        std::size_t index;
    };

    Scenario() = default;
    Scenario(const Scenario&) = delete;
    Scenario& operator=(const Scenario&) = delete;
    Scenario(Scenario&&) = default;
    Scenario& operator=(Scenario&&) = default;

    const std::deque<StructureEntry>& structures() const { return structures_; }
    const std::deque<Carrier>& universes() const { return universes_; }
    const std::deque<SetValuedMap>& maps() const { return maps_; }
    const std::vector<Declaration>& declarations() const { return declarations_; }

    bool has_name(const std::string& name) const {
        return find_structure(name) || find_universe(name) || find_map(name);
    }

    const StructureEntry* find_structure(const std::string& name) const {
        for (const StructureEntry& e : structures_)
            if (e.structure.name() == name) return &e;
        return nullptr;
    }

    const Carrier* find_universe(const std::string& name) const {
        for (const Carrier& u : universes_)
            if (u.label() == name) return &u;
        return nullptr;
    }

    const SetValuedMap* find_map(const std::string& name) const {
        for (const SetValuedMap& m : maps_)
            if (m.name() == name) return &m;
        return nullptr;
    }

    /// Structure-or-universe lookup for map endpoints.
    std::optional<DomainRef> find_domain(const std::string& name) const {
        if (const StructureEntry* s = find_structure(name)) return DomainRef(s->structure);
        if (const Carrier* u = find_universe(name)) return DomainRef(*u);
        return std::nullopt;
    }

    GammaSemigroup& add_structure(GammaSemigroup s, bool unchecked) {
        structures_.push_back({std::move(s), unchecked});
        declarations_.push_back({EntryKind::Structure, structures_.size() - 1});
        return structures_.back().structure;
    }

    Carrier& add_universe(Carrier u) {
        universes_.push_back(std::move(u));
        declarations_.push_back({EntryKind::Universe, universes_.size() - 1});
        return universes_.back();
    }

    SetValuedMap& add_map(SetValuedMap m) {
        maps_.push_back(std::move(m));
        declarations_.push_back({EntryKind::Map, maps_.size() - 1});
        return maps_.back();
    }

private:
    std::deque<StructureEntry> structures_; // deque: maps hold pointers into entries
    std::deque<Carrier> universes_;
    std::deque<SetValuedMap> maps_;
    std::vector<Declaration> declarations_;
};

struct ParseOptions {
    /// Skip the load-time associativity gate for every structure; the
    /// validate command uses this to report failures as findings.
    bool defer_validation = false;
};

namespace detail_io {

inline std::string strip_comment(std::string line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
        line.pop_back();
    return line;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct LineReader {
    std::vector<std::string> lines;
    std::size_t pos = 0;

    explicit LineReader(std::string_view text) {
        std::string current;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(strip_comment(current));
                current.clear();
            } else {
                current += ch;
            }
        }
        if (!current.empty()) lines.push_back(strip_comment(current));
    }

    bool done() const { return pos >= lines.size(); }
    std::size_t line_no() const { return pos + 1; }
    const std::string& peek() const { return lines[pos]; }
    void advance() { ++pos; }
    void skip_blank() {
        while (!done() && peek().empty()) advance();
    }
};

inline std::vector<std::string> expect_keyword_list(LineReader& in, const std::string& keyword) {
    if (in.done() || in.peek().empty()) {
        throw ParseError(in.line_no(), "expected '" + keyword + ":'");
    }
    std::vector<std::string> toks = tokens(in.peek());
    if (toks.empty() || toks.front() != keyword + ":") {
        throw ParseError(in.line_no(), "expected '" + keyword + ":'");
    }
    toks.erase(toks.begin());
    if (toks.empty()) throw ParseError(in.line_no(), "'" + keyword + ":' lists no names");
    in.advance();
    return toks;
}

} // namespace detail_io

inline Scenario parse_scenario(std::string_view text, const ParseOptions& options = {}) {
    using namespace detail_io;
    LineReader in(text);
    Scenario scenario;

    in.skip_blank();
    if (in.done() || tokens(in.peek()) != std::vector<std::string>{"format", "grs1"}) {
        throw ParseError(in.line_no(), "missing 'format grs1' header");
    }
    in.advance();

    auto require_fresh_name = [&](const std::string& name, std::size_t line) {
        if (scenario.has_name(name)) throw ParseError(line, "duplicate name '" + name + "'");
    };

    while (true) {
        in.skip_blank();
        if (in.done()) break;
        const std::size_t header_line = in.line_no();
        std::vector<std::string> head = tokens(in.peek());
        in.advance();

        if (head.front() == "structure") {
            if (head.size() < 2 || head.size() > 3 ||
                (head.size() == 3 && head[2] != "unchecked")) {
                throw ParseError(header_line, "expected 'structure NAME [unchecked]'");
            }
            const std::string name = head[1];
            const bool unchecked = head.size() == 3;
            require_fresh_name(name, header_line);

            std::vector<std::string> elements = expect_keyword_list(in, "elements");
            std::vector<std::string> gammas = expect_keyword_list(in, "gammas");
            if (elements.size() * gammas.size() > 64) {
                throw ParseError(header_line, "structure '" + name + "' exceeds the supported " +
                                                  "order (elements x gammas > 64)");
            }

            RawTables tables;
            for (const std::string& gamma : gammas) {
                if (in.done() || in.peek().empty()) {
                    throw ParseError(in.line_no(), "missing table for gamma '" + gamma + "'");
                }
                std::vector<std::string> toks = tokens(in.peek());
                if (toks.size() != 2 || toks[0] != "table" || toks[1] != gamma + ":") {
                    throw ParseError(in.line_no(), "expected 'table " + gamma + ":'");
                }
                in.advance();
                std::vector<std::vector<std::string>> rows;
                for (std::size_t r = 0; r < elements.size(); ++r) {
                    if (in.done() || in.peek().empty()) {
                        throw ParseError(in.line_no(), "table '" + gamma + "' of '" + name +
                                                           "' is missing row " +
                                                           std::to_string(r + 1));
                    }
                    std::vector<std::string> row = tokens(in.peek());
                    if (row.size() != elements.size()) {
                        throw ParseError(in.line_no(), "ragged row: expected " +
                                                           std::to_string(elements.size()) +
                                                           " entries, got " +
                                                           std::to_string(row.size()));
                    }
                    for (const std::string& cell : row) {
                        bool known = false;
                        for (const std::string& e : elements) known = known || e == cell;
                        if (!known) {
                            throw ParseError(in.line_no(),
                                             "unknown element '" + cell + "' in table cell");
                        }
                    }
                    rows.push_back(std::move(row));
                    in.advance();
                }
                tables.push_back(std::move(rows));
            }
            if (!in.done() && !in.peek().empty()) {
                throw ParseError(in.line_no(), "expected a blank line after structure '" + name +
                                                   "' (extra table rows?)");
            }

            if (unchecked || options.defer_validation) {
                scenario.add_structure(
                    GammaSemigroup::make_unchecked(name, elements, gammas, tables), unchecked);
            } else {
                try {
                    scenario.add_structure(GammaSemigroup::make(name, elements, gammas, tables),
                                           false);
                } catch (const InvalidStructureError& err) {
                    throw ParseError(header_line, std::string(err.what()) +
                                                      " (mark the block 'unchecked' to load it "
                                                      "for auditing)");
                }
            }
        } else if (head.front() == "universe") {
            if (head.size() != 2) throw ParseError(header_line, "expected 'universe NAME'");
            require_fresh_name(head[1], header_line);
            std::vector<std::string> elements = expect_keyword_list(in, "elements");
            try {
                scenario.add_universe(Carrier(head[1], elements));
            } catch (const std::invalid_argument& err) {
                throw ParseError(header_line, err.what());
            }
        } else if (head.front() == "map") {
            if (head.size() != 6 || head[2] != "from" || head[4] != "to") {
                throw ParseError(header_line, "expected 'map NAME from SOURCE to TARGET'");
            }
            const std::string name = head[1];
            require_fresh_name(name, header_line);
            auto source = scenario.find_domain(head[3]);
            if (!source) {
                throw ParseError(header_line, "map source '" + head[3] + "' is not declared");
            }
            auto target = scenario.find_domain(head[5]);
            if (!target) {
                throw ParseError(header_line, "map target '" + head[5] + "' is not declared");
            }

            std::vector<std::pair<std::string, std::vector<std::string>>> images;
            while (!in.done() && !in.peek().empty()) {
                const std::size_t line = in.line_no();
                std::vector<std::string> toks = tokens(in.peek());
                if (toks.size() < 2 || toks[1] != "->") {
                    throw ParseError(line, "expected 'ELEMENT -> image...'");
                }
                if (toks.size() == 2) {
                    throw ParseError(line, "empty image for '" + toks[0] + "'");
                }
                if (!source->carrier->find(toks[0])) {
                    throw ParseError(line, "unknown source element '" + toks[0] + "'");
                }
                for (std::size_t i = 2; i < toks.size(); ++i) {
                    if (!target->carrier->find(toks[i])) {
                        throw ParseError(line, "unknown target element '" + toks[i] + "'");
                    }
                }
                images.emplace_back(toks[0],
                                    std::vector<std::string>(toks.begin() + 2, toks.end()));
                in.advance();
            }
            try {
                scenario.add_map(SetValuedMap::make(name, *source, *target, images));
            } catch (const std::invalid_argument& err) {
                throw ParseError(header_line, err.what());
            }
        } else {
            throw ParseError(header_line, "unknown block '" + head.front() + "'");
        }
    }
    return scenario;
}

inline std::string serialize_scenario(const Scenario& scenario) {
    std::string out = "format grs1\n";
    for (const Scenario::Declaration& decl : scenario.declarations()) {
        out += '\n';
        switch (decl.kind) {
            case Scenario::EntryKind::Structure: {
                const Scenario::StructureEntry& e = scenario.structures()[decl.index];
                const GammaSemigroup& s = e.structure;
                out += "structure " + s.name() + (e.unchecked ? " unchecked" : "") + "\n";
                out += "elements:";
                for (const std::string& n : s.elements().names()) out += " " + n;
                out += "\ngammas:";
                for (const std::string& g : s.gammas().names()) out += " " + g;
                out += "\n";
                for (std::size_t g = 0; g < s.gammas().size(); ++g) {
                    out += "table " + s.gammas().name_of(g) + ":\n";
                    for (std::size_t a = 0; a < s.elements().size(); ++a) {
                        for (std::size_t b = 0; b < s.elements().size(); ++b) {
                            if (b) out += ' ';
                            out += s.elements().name_of(s.apply(a, g, b));
                        }
                        out += '\n';
                    }
                }
                break;
            }
            case Scenario::EntryKind::Universe: {
                const Carrier& u = scenario.universes()[decl.index];
                out += "universe " + u.label() + "\nelements:";
                for (const std::string& n : u.names()) out += " " + n;
                out += "\n";
                break;
            }
            case Scenario::EntryKind::Map: {
                const SetValuedMap& m = scenario.maps()[decl.index];
                out += "map " + m.name() + " from " + m.source().label() + " to " +
                       m.target().label() + "\n";
                for (std::size_t i = 0; i < m.source().size(); ++i) {
                    out += m.source().name_of(i) + " ->";
                    for (const std::string& n : m.image_of(i).names()) out += " " + n;
                    out += '\n';
                }
                break;
            }
        }
    }
    return out;
}

} // namespace grs
