// approx.hpp -- generalized (T-rough) approximation operators induced by a
// set-valued map, plus the classical congruence/partition operators they
// generalize. A map may connect plain finite universes or full structures;
// only the algebraic layers above care about the difference.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grs/core.hpp"

namespace grs {

/// Either a bare universe or the carrier of a Gamma-semigroup. Lightweight
/// view used to build maps without duplicating overloads.
struct DomainRef {
    const Carrier* carrier;
    const GammaSemigroup* structure; // null for plain universes

    DomainRef(const Carrier& u) : carrier(&u), structure(nullptr) {}
    DomainRef(const GammaSemigroup& s) : carrier(&s.elements()), structure(&s) {}
};

/// Total map x -> T(x), every image a non-empty subset of the target.
class SetValuedMap {
public:
    static SetValuedMap make(std::string name, DomainRef source, DomainRef target,
                             const std::vector<std::pair<std::string, std::vector<std::string>>>&
                                 images) {
        std::vector<Word> words(source.carrier->size(), 0);
        std::vector<bool> seen(source.carrier->size(), false);
        for (const auto& [element, image] : images) {
            const std::size_t i = source.carrier->index_of(element);
            if (seen[i]) {
                throw std::invalid_argument("map '" + name + "' assigns '" + element + "' twice");
            }
            seen[i] = true;
            words[i] = ElementSet::of(*target.carrier, image).word();
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (!seen[i]) {
                throw DomainError("map '" + name + "' has no image for '" +
                                  source.carrier->name_of(i) + "'");
            }
            if (words[i] == 0) {
                throw DomainError("map '" + name + "' has an empty image for '" +
                                  source.carrier->name_of(i) + "'");
            }
        }
        return SetValuedMap(std::move(name), source, target, std::move(words));
    }

    static SetValuedMap from_words(std::string name, DomainRef source, DomainRef target,
                                   std::vector<Word> words) {
        if (words.size() != source.carrier->size()) {
            throw DomainError("map '" + name + "' must assign every source element");
        }
        for (Word w : words) {
            if ((w & target.carrier->full_word()) == 0 || (w & ~target.carrier->full_word()) != 0) {
                throw DomainError("map '" + name + "' has an image outside the target");
            }
        }
        return SetValuedMap(std::move(name), source, target, std::move(words));
    }

    const std::string& name() const { return name_; }
    const Carrier& source() const { return *source_.carrier; }
    const Carrier& target() const { return *target_.carrier; }
    const GammaSemigroup* source_structure() const { return source_.structure; }
    const GammaSemigroup* target_structure() const { return target_.structure; }

    ElementSet image_of(std::size_t i) const { return ElementSet(*target_.carrier, words_.at(i)); }
    ElementSet image_of(std::string_view name) const {
        return image_of(source_.carrier->index_of(name));
    }
    Word image_word(std::size_t i) const { return words_.at(i); }

    /// "a:{b,c};b:{a}" in canonical source order; used in witness records.
    std::string describe_images() const {
        std::string out;
        for (std::size_t i = 0; i < source_.carrier->size(); ++i) {
            if (i) out += ';';
            out += source_.carrier->name_of(i) + ":" + image_of(i).to_string();
        }
        return out;
    }

private:
    SetValuedMap(std::string name, DomainRef source, DomainRef target, std::vector<Word> words)
        : name_(std::move(name)), source_(source), target_(target), words_(std::move(words)) {}

    std::string name_;
    DomainRef source_;
    DomainRef target_;
    std::vector<Word> words_; // image membership word per source index
};

inline void require_over_target(const SetValuedMap& t, const ElementSet& b) {
    if (&b.carrier() != &t.target()) {
        throw StructureMismatchError("set over '" + b.carrier().label() +
                                     "' is not over the target of map '" + t.name() + "'");
    }
}

/// { x : T(x) included in B }
inline ElementSet lower_approx(const SetValuedMap& t, const ElementSet& b) {
    require_over_target(t, b);
    Word out = 0;
    for (std::size_t i = 0; i < t.source().size(); ++i)
        if ((t.image_word(i) & ~b.word()) == 0) out |= Word{1} << i;
    return ElementSet(t.source(), out);
}

/// { x : T(x) meets B }
inline ElementSet upper_approx(const SetValuedMap& t, const ElementSet& b) {
    require_over_target(t, b);
    Word out = 0;
    for (std::size_t i = 0; i < t.source().size(); ++i)
        if ((t.image_word(i) & b.word()) != 0) out |= Word{1} << i;
    return ElementSet(t.source(), out);
}

struct ApproximationPair {
    ElementSet lower;
    ElementSet upper;
    bool definable; // lower == upper
};

inline ApproximationPair approximate(const SetValuedMap& t, const ElementSet& b) {
    ElementSet lo = lower_approx(t, b);
    ElementSet up = upper_approx(t, b);
    const bool definable = lo == up;
    return {std::move(lo), std::move(up), definable};
}

/// Pairwise-disjoint non-empty blocks covering a carrier exactly.
class Partition {
public:
    Partition(const Carrier& carrier, std::vector<ElementSet> blocks)
        : carrier_(&carrier), blocks_(std::move(blocks)), block_of_(carrier.size(), 0) {
        Word covered = 0;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const ElementSet& blk = blocks_[k];
            if (&blk.carrier() != carrier_) {
                throw StructureMismatchError("partition block over a different carrier");
            }
            if (blk.empty()) throw DomainError("partition blocks must be non-empty");
            if (covered & blk.word()) throw DomainError("partition blocks overlap");
            covered |= blk.word();
            for (std::size_t i = 0; i < carrier.size(); ++i)
                if (blk.contains(i)) block_of_[i] = k;
        }
        if (covered != carrier.full_word()) {
            throw DomainError("partition does not cover the carrier");
        }
    }

    static Partition discrete(const Carrier& c) {
        std::vector<ElementSet> blocks;
        for (std::size_t i = 0; i < c.size(); ++i) blocks.push_back(ElementSet::single(c, i));
        return Partition(c, std::move(blocks));
    }

    static Partition one_block(const Carrier& c) {
        return Partition(c, {ElementSet::full(c)});
    }

    const Carrier& carrier() const { return *carrier_; }
    const std::vector<ElementSet>& blocks() const { return blocks_; }
    std::size_t block_index_of(std::size_t element) const { return block_of_.at(element); }
    const ElementSet& block_of(std::size_t element) const { return blocks_[block_of_.at(element)]; }

private:
    const Carrier* carrier_;
    std::vector<ElementSet> blocks_;
    std::vector<std::size_t> block_of_;
};

inline void require_over(const Partition& p, const ElementSet& a) {
    if (&a.carrier() != &p.carrier()) {
        throw StructureMismatchError("set is not over the partitioned carrier");
    }
}

inline ElementSet pawlak_lower(const Partition& p, const ElementSet& a) {
    require_over(p, a);
    Word out = 0;
    for (std::size_t i = 0; i < p.carrier().size(); ++i)
        if (p.block_of(i).subset_of(a)) out |= Word{1} << i;
    return ElementSet(p.carrier(), out);
}

inline ElementSet pawlak_upper(const Partition& p, const ElementSet& a) {
    require_over(p, a);
    Word out = 0;
    for (std::size_t i = 0; i < p.carrier().size(); ++i)
        if (p.block_of(i).intersects(a)) out |= Word{1} << i;
    return ElementSet(p.carrier(), out);
}

/// First violating instance of the compatibility condition, if any.
/// side: RightTranslation checks (a g y, b g y), LeftTranslation (y g a, y g b).
struct CongruenceWitness {
    enum class Side { RightTranslation, LeftTranslation };
    std::string a, b, y, gamma;
    Side side;

    std::string to_string() const {
        const char* tag = side == Side::RightTranslation ? "right-translation" : "left-translation";
        return "(" + a + "," + b + "," + y + "," + gamma + "," + tag + ")";
    }
};

struct CongruenceCheck {
    bool congruence = true;
    std::optional<CongruenceWitness> witness;
};

inline CongruenceCheck is_congruence(const GammaSemigroup& s, const Partition& p) {
    if (&p.carrier() != &s.elements()) {
        throw StructureMismatchError("partition is not over the structure's carrier");
    }
    const std::size_t n = s.elements().size();
    const std::size_t m = s.gammas().size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (p.block_index_of(a) != p.block_index_of(b)) continue;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t g = 0; g < m; ++g) {
                    if (p.block_index_of(s.apply(a, g, y)) != p.block_index_of(s.apply(b, g, y))) {
                        return {false,
                                CongruenceWitness{s.elements().name_of(a), s.elements().name_of(b),
                                                  s.elements().name_of(y), s.gammas().name_of(g),
                                                  CongruenceWitness::Side::RightTranslation}};
                    }
                    if (p.block_index_of(s.apply(y, g, a)) != p.block_index_of(s.apply(y, g, b))) {
                        return {false,
                                CongruenceWitness{s.elements().name_of(a), s.elements().name_of(b),
                                                  s.elements().name_of(y), s.gammas().name_of(g),
                                                  CongruenceWitness::Side::LeftTranslation}};
                    }
                }
        }
    return {};
}

class NotACongruenceError : public std::runtime_error {
public:
    explicit NotACongruenceError(CongruenceWitness witness)
        : std::runtime_error("partition is not a congruence, witness " + witness.to_string()),
          witness_(std::move(witness)) {}

    const CongruenceWitness& witness() const { return witness_; }

private:
    CongruenceWitness witness_;
};

/// First (a, b) whose class product differs from the union of product classes.
struct CompletenessWitness {
    std::string a, b;
    ElementSet class_product;   // [a] Gamma [b]
    ElementSet product_classes; // union of [a g b] over gamma
};

struct CompletenessCheck {
    bool complete = true;
    std::optional<CompletenessWitness> witness;
};

/// Complete congruence test: [a] Gamma [b] = union over gamma of [a g b].
/// Throws NotACongruenceError (carrying the witness) when p fails the
/// congruence test in the first place.
inline CompletenessCheck is_complete_congruence(const GammaSemigroup& s, const Partition& p) {
    CongruenceCheck base = is_congruence(s, p);
    if (!base.congruence) throw NotACongruenceError(*base.witness);
    const std::size_t n = s.elements().size();
    const std::size_t m = s.gammas().size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            ElementSet lhs = gamma_product(s, p.block_of(a), p.block_of(b));
            ElementSet rhs = ElementSet::empty(s.elements());
            for (std::size_t g = 0; g < m; ++g) rhs = rhs.united(p.block_of(s.apply(a, g, b)));
            if (!(lhs == rhs)) {
                return {false, CompletenessWitness{s.elements().name_of(a),
                                                   s.elements().name_of(b), lhs, rhs}};
            }
        }
    return {};
}

/// The set-valued map x -> [x]p. Pawlak approximations through this map
/// coincide with the partition operators, which the tests pin down.
inline SetValuedMap class_map(const GammaSemigroup& s, const Partition& p) {
    std::vector<Word> words;
    words.reserve(s.elements().size());
    for (std::size_t i = 0; i < s.elements().size(); ++i) words.push_back(p.block_of(i).word());
    return SetValuedMap::from_words("[.]" + s.name(), s, s, std::move(words));
}

} // namespace grs
