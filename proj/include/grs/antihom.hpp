// antihom.hpp -- the set-valued anti-homomorphism property and its strong
// (equality) variant, plus deterministic enumeration of all set-valued maps
// between two structures. The defining inclusion reverses operands: the
// image of a gamma b must contain T(b) gamma T(a).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grs/approx.hpp"
#include "grs/core.hpp"

namespace grs {

enum class AntiHomLevel { None = 0, Plain = 1, Strong = 2 };

inline std::string_view to_string(AntiHomLevel level) {
    switch (level) {
        case AntiHomLevel::None: return "none";
        case AntiHomLevel::Plain: return "plain";
        case AntiHomLevel::Strong: return "strong";
    }
    return "?";
}

/// First (a, gamma, b) whose product set escapes T(a gamma b), with the
/// escaping element.
struct PlainViolation {
    std::string a, gamma, b;
    std::string offending; // element of T(b) gamma T(a) missing from T(a gamma b)

    std::string to_string() const {
        return "(" + a + "," + gamma + "," + b + "):" + offending;
    }
};

/// First (a, gamma, b) where the inclusion is proper, with both sets.
struct EqualityFailure {
    std::string a, gamma, b;
    ElementSet image;   // T(a gamma b)
    ElementSet product; // T(b) gamma T(a)
};

struct AntiHomVerdict {
    AntiHomLevel level = AntiHomLevel::Strong;
    std::optional<PlainViolation> plain_witness;   // set when level == None
    std::optional<EqualityFailure> strong_witness; // set when level == Plain
};

inline void require_structured(const SetValuedMap& t) {
    const GammaSemigroup* src = t.source_structure();
    const GammaSemigroup* dst = t.target_structure();
    if (!src || !dst) {
        throw StructureMismatchError("map '" + t.name() +
                                     "' must connect Gamma-semigroups, not plain universes");
    }
    if (src->gammas().names() != dst->gammas().names()) {
        throw StructureMismatchError("map '" + t.name() +
                                     "' connects structures with different gamma lists");
    }
}

/// T(b) gamma T(a) computed in the target: images of the right operand
/// multiply images of the left operand from the left.
inline ElementSet image_product(const SetValuedMap& t, std::size_t a, std::size_t g,
                                std::size_t b) {
    require_structured(t);
    const GammaSemigroup& dst = *t.target_structure();
    if (g >= dst.gammas().size()) {
        throw LookupError("gamma index out of range for map '" + t.name() + "'",
                          std::to_string(g));
    }
    Word out = 0;
    const ElementSet vb = t.image_of(b);
    const ElementSet ua = t.image_of(a);
    for (std::size_t v = 0; v < dst.elements().size(); ++v) {
        if (!vb.contains(v)) continue;
        for (std::size_t u = 0; u < dst.elements().size(); ++u)
            if (ua.contains(u)) out |= Word{1} << dst.apply(v, g, u);
    }
    return ElementSet(dst.elements(), out);
}

inline ElementSet image_product(const SetValuedMap& t, std::string_view a, std::string_view g,
                                std::string_view b) {
    require_structured(t);
    return image_product(t, t.source().index_of(a), t.source_structure()->gammas().index_of(g),
                         t.source().index_of(b));
}

/// Classify a map as none/plain/strong by the exhaustive (a, gamma, b) sweep.
inline AntiHomVerdict check_anti_hom(const SetValuedMap& t) {
    require_structured(t);
    const GammaSemigroup& src = *t.source_structure();
    AntiHomVerdict verdict;
    bool inclusion_everywhere = true;
    bool equality_everywhere = true;
    for (std::size_t a = 0; a < src.elements().size(); ++a)
        for (std::size_t g = 0; g < src.gammas().size(); ++g)
            for (std::size_t b = 0; b < src.elements().size(); ++b) {
                ElementSet product = image_product(t, a, g, b);
                ElementSet image = t.image_of(src.apply(a, g, b));
                if (!product.subset_of(image)) {
                    if (inclusion_everywhere) {
                        ElementSet escape = product.minus(image);
                        verdict.plain_witness = PlainViolation{
                            src.elements().name_of(a), src.gammas().name_of(g),
                            src.elements().name_of(b),
                            image.carrier().name_of(*escape.first())};
                    }
                    inclusion_everywhere = false;
                }
                if (!(product == image)) {
                    if (equality_everywhere && !verdict.strong_witness) {
                        verdict.strong_witness =
                            EqualityFailure{src.elements().name_of(a), src.gammas().name_of(g),
                                            src.elements().name_of(b), image, product};
                    }
                    equality_everywhere = false;
                }
            }
    if (!inclusion_everywhere) {
        verdict.level = AntiHomLevel::None;
        verdict.strong_witness.reset();
    } else if (!equality_everywhere) {
        verdict.level = AntiHomLevel::Plain;
    } else {
        verdict.level = AntiHomLevel::Strong;
        verdict.strong_witness.reset();
    }
    return verdict;
}

/// Uniform draw from [1, bound] via rejection on the raw generator output.
/// std::uniform_int_distribution is implementation-defined, which would break
/// the byte-identical-reports contract across platforms.
inline std::uint64_t draw_nonzero_word(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t span = bound; // values 1..bound
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return 1 + r % span;
    }
}

/// Streams set-valued maps between two structures in a reproducible order.
///
/// When the raw space (2^|M2| - 1)^|M1| fits the budget the stream is the
/// full canonical enumeration: images ordered by membership-word value,
/// source positions varied rightmost-fastest. Otherwise `budget` maps are
/// sampled with the seed. The level filter applies after either choice;
/// None admits every map.
class MapEnumerator {
public:
    MapEnumerator(const GammaSemigroup& source, const GammaSemigroup& target, AntiHomLevel filter,
                  std::uint64_t budget, std::uint64_t seed = 0)
        : source_(&source),
          target_(&target),
          filter_(filter),
          budget_(budget),
          rng_(seed) {
        if (budget == 0) throw DomainError("map enumeration budget must be positive");
        if (source.gammas().names() != target.gammas().names()) {
            throw StructureMismatchError("map enumeration needs matching gamma lists");
        }
        images_per_position_ = target.elements().size() == 64
                                   ? ~Word{0}
                                   : (Word{1} << target.elements().size()) - 1;
        total_ = 1;
        exhaustive_ = true;
        for (std::size_t i = 0; i < source.elements().size(); ++i) {
            if (total_ > budget_ / images_per_position_) {
                exhaustive_ = false;
                break;
            }
            total_ *= images_per_position_;
        }
        if (!exhaustive_) total_ = budget_;
    }

    bool exhaustive() const { return exhaustive_; }
    /// Raw stream length before filtering (map count when exhaustive,
    /// sample count otherwise).
    std::uint64_t raw_total() const { return total_; }

    /// Next map passing the filter, nullopt when the stream is exhausted.
    std::optional<SetValuedMap> next() {
        while (cursor_ < total_) {
            SetValuedMap candidate = exhaustive_ ? nth_map(cursor_) : sampled_map(cursor_);
            ++cursor_;
            if (static_cast<int>(check_anti_hom(candidate).level) >= static_cast<int>(filter_)) {
                return candidate;
            }
        }
        return std::nullopt;
    }

    /// Canonical map for a raw index (exhaustive mode ordering).
    SetValuedMap nth_map(std::uint64_t index) const {
        const std::size_t n1 = source_->elements().size();
        std::vector<Word> words(n1);
        std::uint64_t rest = index;
        for (std::size_t i = n1; i-- > 0;) {
            words[i] = 1 + rest % images_per_position_;
            rest /= images_per_position_;
        }
        return SetValuedMap::from_words("T#" + std::to_string(index), *source_, *target_,
                                        std::move(words));
    }

private:
    SetValuedMap sampled_map(std::uint64_t index) {
        const std::size_t n1 = source_->elements().size();
        std::vector<Word> words(n1);
        for (std::size_t i = 0; i < n1; ++i) words[i] = draw_nonzero_word(rng_, images_per_position_);
        return SetValuedMap::from_words("T~" + std::to_string(index), *source_, *target_,
                                        std::move(words));
    }

    const GammaSemigroup* source_;
    const GammaSemigroup* target_;
    AntiHomLevel filter_;
    std::uint64_t budget_;
    std::uint64_t images_per_position_ = 0;
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;
    bool exhaustive_ = true;
    std::mt19937_64 rng_;
};

} // namespace grs
