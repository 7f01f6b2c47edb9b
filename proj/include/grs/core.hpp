// core.hpp -- finite Gamma-semigroups presented by ternary Cayley tables.
//
// A structure is a carrier M, an operation alphabet Gamma, and a total map
// (a, g, b) -> a g b whose generalized associativity (a g b) h c = a g (b h c)
// is checked exhaustively at construction unless the caller opts out.
// Carriers are capped so that subsets fit in a 64-bit membership word, which
// is what makes exhaustive subset sweeps cheap everywhere else.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace grs {

using Word = std::uint64_t; // membership word, bit i = i-th carrier element

class LookupError : public std::invalid_argument {
public:
    LookupError(std::string_view what, std::string name)
        : std::invalid_argument(std::string(what) + ": " + name), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class StructureMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered list of unique names; the index order is the canonical order used
/// by every set-valued result in the library.
class Carrier {
public:
    static constexpr std::size_t max_size = 64;

    Carrier(std::string label, std::vector<std::string> names)
        : label_(std::move(label)), names_(std::move(names)) {
        if (names_.empty()) {
            throw std::invalid_argument("carrier '" + label_ + "' must not be empty");
        }
        if (names_.size() > max_size) {
            throw std::invalid_argument("carrier '" + label_ + "' exceeds " +
                                        std::to_string(max_size) + " elements");
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second) {
                throw std::invalid_argument("duplicate name '" + names_[i] + "' in carrier '" +
                                            label_ + "'");
            }
        }
    }

    const std::string& label() const { return label_; }
    std::size_t size() const { return names_.size(); }
    const std::string& name_of(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw LookupError("unknown name in carrier '" + label_ + "'", std::string(name));
    }

    Word full_word() const {
        return names_.size() == 64 ? ~Word{0} : (Word{1} << names_.size()) - 1;
    }

private:
    std::string label_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Subset of a carrier, stored as a membership word in canonical order.
/// Two sets are comparable only when they reference the same carrier object.
class ElementSet {
public:
    ElementSet(const Carrier& carrier, Word bits)
        : carrier_(&carrier), bits_(bits & carrier.full_word()) {}

    static ElementSet empty(const Carrier& c) { return ElementSet(c, 0); }
    static ElementSet full(const Carrier& c) { return ElementSet(c, c.full_word()); }

    static ElementSet of(const Carrier& c, std::span<const std::string> names) {
        Word bits = 0;
        for (const auto& n : names) bits |= Word{1} << c.index_of(n);
        return ElementSet(c, bits);
    }

    static ElementSet of(const Carrier& c, std::initializer_list<const char*> names) {
        Word bits = 0;
        for (const char* n : names) bits |= Word{1} << c.index_of(n);
        return ElementSet(c, bits);
    }

    static ElementSet single(const Carrier& c, std::size_t i) {
        return ElementSet(c, Word{1} << i);
    }

    const Carrier& carrier() const { return *carrier_; }
    Word word() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }

    bool contains(std::size_t i) const { return (bits_ >> i) & 1; }
    bool contains(std::string_view name) const { return contains(carrier_->index_of(name)); }

    ElementSet united(const ElementSet& o) const {
        require_same(o);
        return ElementSet(*carrier_, bits_ | o.bits_);
    }
    ElementSet intersected(const ElementSet& o) const {
        require_same(o);
        return ElementSet(*carrier_, bits_ & o.bits_);
    }
    ElementSet minus(const ElementSet& o) const {
        require_same(o);
        return ElementSet(*carrier_, bits_ & ~o.bits_);
    }
    ElementSet complemented() const {
        return ElementSet(*carrier_, ~bits_ & carrier_->full_word());
    }
    bool subset_of(const ElementSet& o) const {
        require_same(o);
        return (bits_ & ~o.bits_) == 0;
    }
    bool intersects(const ElementSet& o) const {
        require_same(o);
        return (bits_ & o.bits_) != 0;
    }

    /// Lowest-index member, or nullopt when empty.
    std::optional<std::size_t> first() const {
        if (bits_ == 0) return std::nullopt;
        return static_cast<std::size_t>(__builtin_ctzll(bits_));
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < carrier_->size(); ++i)
            if (contains(i)) out.push_back(carrier_->name_of(i));
        return out;
    }

    /// Canonical rendering: "{a,b}", "{}" when empty.
    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (std::size_t i = 0; i < carrier_->size(); ++i) {
            if (!contains(i)) continue;
            if (sep) out += ',';
            out += carrier_->name_of(i);
            sep = true;
        }
        out += '}';
        return out;
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.carrier_ == b.carrier_ && a.bits_ == b.bits_;
    }

private:
    void require_same(const ElementSet& o) const {
        if (carrier_ != o.carrier_) {
            throw StructureMismatchError("element sets belong to different carriers ('" +
                                         carrier_->label() + "' vs '" + o.carrier_->label() + "')");
        }
    }

    const Carrier* carrier_;
    Word bits_;
};

/// One failed instance of (a alpha b) beta c = a alpha (b beta c), with both
/// evaluated sides. Names are stored so the record replays without context.
struct AssociativityFailure {
    std::string a, alpha, b, beta, c;
    std::string lhs, rhs;

    std::string to_string() const {
        return "(" + a + "," + alpha + "," + b + "," + beta + "," + c + "): (" + a + alpha + b +
               ")" + beta + c + "=" + lhs + " != " + a + alpha + "(" + b + beta + c + ")=" + rhs;
    }
};

struct ValidationReport {
    bool valid = true;
    std::vector<AssociativityFailure> witnesses; // canonical (a,alpha,b,beta,c) order
};

class InvalidStructureError : public std::runtime_error {
public:
    InvalidStructureError(std::string structure, ValidationReport report)
        : std::runtime_error("structure '" + structure + "' violates generalized associativity, " +
                             "first witness " + report.witnesses.front().to_string()),
          structure_(std::move(structure)),
          report_(std::move(report)) {}

    const std::string& structure() const { return structure_; }
    const ValidationReport& report() const { return report_; }

private:
    std::string structure_;
    ValidationReport report_;
};

/// Raw table input: tables[g][row][col] is the name of row(g)col, with rows
/// and columns in carrier order.
using RawTables = std::vector<std::vector<std::vector<std::string>>>;

/// Finite Gamma-semigroup. Immutable after construction; `make` verifies the
/// associativity axiom, `make_unchecked` records that the check was skipped
/// (needed to audit published tables that turn out not to satisfy it).
class GammaSemigroup {
public:
    static GammaSemigroup make(std::string name, std::vector<std::string> elements,
                               std::vector<std::string> gammas, const RawTables& tables) {
        GammaSemigroup s(std::move(name), std::move(elements), std::move(gammas), tables);
        ValidationReport report = s.validate();
        if (!report.valid) throw InvalidStructureError(s.name_, std::move(report));
        s.validated_ = true;
        return s;
    }

    static GammaSemigroup make_unchecked(std::string name, std::vector<std::string> elements,
                                         std::vector<std::string> gammas,
                                         const RawTables& tables) {
        return GammaSemigroup(std::move(name), std::move(elements), std::move(gammas), tables);
    }

    const std::string& name() const { return name_; }
    const Carrier& elements() const { return elements_; }
    const Carrier& gammas() const { return gammas_; }

    /// True when the associativity axiom was verified at construction.
    bool validated() const { return validated_; }

    std::size_t apply(std::size_t a, std::size_t g, std::size_t b) const {
        return table_[(a * gammas_.size() + g) * elements_.size() + b];
    }

    std::string apply(std::string_view a, std::string_view g, std::string_view b) const {
        return elements_.name_of(
            apply(elements_.index_of(a), gammas_.index_of(g), elements_.index_of(b)));
    }

    /// Exhaustive check of all n^2 m^2 n associativity instances. Witnesses
    /// come out in canonical (a, alpha, b, beta, c) order.
    ValidationReport validate() const {
        ValidationReport report;
        const std::size_t n = elements_.size();
        const std::size_t m = gammas_.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t al = 0; al < m; ++al)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t be = 0; be < m; ++be)
                        for (std::size_t c = 0; c < n; ++c) {
                            const std::size_t lhs = apply(apply(a, al, b), be, c);
                            const std::size_t rhs = apply(a, al, apply(b, be, c));
                            if (lhs != rhs) {
                                report.valid = false;
                                report.witnesses.push_back({elements_.name_of(a),
                                                            gammas_.name_of(al),
                                                            elements_.name_of(b),
                                                            gammas_.name_of(be),
                                                            elements_.name_of(c),
                                                            elements_.name_of(lhs),
                                                            elements_.name_of(rhs)});
                            }
                        }
        return report;
    }

private:
    GammaSemigroup(std::string name, std::vector<std::string> elements,
                   std::vector<std::string> gammas, const RawTables& tables)
        : name_(std::move(name)),
          elements_(name_, std::move(elements)),
          gammas_(name_ + ".gammas", std::move(gammas)) {
        const std::size_t n = elements_.size();
        const std::size_t m = gammas_.size();
        if (n * m > 64) {
            throw std::invalid_argument("structure '" + name_ + "' exceeds the supported order (" +
                                        std::to_string(n) + " elements x " + std::to_string(m) +
                                        " gammas > 64)");
        }
        if (tables.size() != m) {
            throw std::invalid_argument("structure '" + name_ + "' needs one table per gamma");
        }
        table_.resize(n * m * n);
        for (std::size_t g = 0; g < m; ++g) {
            if (tables[g].size() != n) {
                throw std::invalid_argument("table '" + gammas_.name_of(g) + "' of '" + name_ +
                                            "' must have " + std::to_string(n) + " rows");
            }
            for (std::size_t a = 0; a < n; ++a) {
                if (tables[g][a].size() != n) {
                    throw std::invalid_argument("table '" + gammas_.name_of(g) + "' of '" + name_ +
                                                "' has a ragged row " + std::to_string(a + 1));
                }
                for (std::size_t b = 0; b < n; ++b) {
                    table_[(a * m + g) * n + b] =
                        static_cast<std::uint8_t>(elements_.index_of(tables[g][a][b]));
                }
            }
        }
    }

    std::string name_;
    Carrier elements_;
    Carrier gammas_;
    std::vector<std::uint8_t> table_; // (a*m + g)*n + b -> element index
    bool validated_ = false;
};

/// Exhaustive associativity audit of raw tables (closure and totality are
/// construction-time errors, not validation findings).
inline ValidationReport validate_structure(std::string name, std::vector<std::string> elements,
                                           std::vector<std::string> gammas,
                                           const RawTables& tables) {
    return GammaSemigroup::make_unchecked(std::move(name), std::move(elements), std::move(gammas),
                                          tables)
        .validate();
}

inline void require_owned_by(const GammaSemigroup& s, const ElementSet& a) {
    if (&a.carrier() != &s.elements()) {
        throw StructureMismatchError("set over '" + a.carrier().label() +
                                     "' used with structure '" + s.name() + "'");
    }
}

/// A Gamma B = { a g b : a in A, g in Gamma, b in B }. Empty when either side is.
inline ElementSet gamma_product(const GammaSemigroup& s, const ElementSet& a,
                                const ElementSet& b) {
    require_owned_by(s, a);
    require_owned_by(s, b);
    Word out = 0;
    const std::size_t n = s.elements().size();
    const std::size_t m = s.gammas().size();
    for (std::size_t x = 0; x < n; ++x) {
        if (!a.contains(x)) continue;
        for (std::size_t g = 0; g < m; ++g)
            for (std::size_t y = 0; y < n; ++y)
                if (b.contains(y)) out |= Word{1} << s.apply(x, g, y);
    }
    return ElementSet(s.elements(), out);
}

/// Left-associated chain product A1 Gamma A2 Gamma ... Gamma Ak.
inline ElementSet gamma_product_chain(const GammaSemigroup& s,
                                      std::span<const ElementSet> parts) {
    if (parts.empty()) throw DomainError("gamma_product_chain needs at least one operand");
    ElementSet acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = gamma_product(s, acc, parts[i]);
    return acc;
}

} // namespace grs
