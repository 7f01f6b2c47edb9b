// quotient.hpp -- the T-rough quotient M1/T: distinct image sets as classes,
// the representative-induced operation class(T(x)) g class(T(y)) := class(T(x g y))
// with an explicit well-definedness check, and the quotient approximation
// operators (classes inside H / classes meeting H).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grs/approx.hpp"
#include "grs/core.hpp"

namespace grs {

struct QuotientClass {
    ElementSet image;     // T(x), over the target carrier; doubles as the label
    ElementSet preimages; // { x : T(x) = image }, over the source carrier
};

/// The class decomposition alone. Needs no algebraic structure, so it works
/// for maps over plain universes too. Classes are ordered by the canonical
/// index of their least preimage element.
class QuotientClasses {
public:
    explicit QuotientClasses(const SetValuedMap& t) : source_(&t.source()), target_(&t.target()) {
        std::vector<std::size_t> class_of(t.source().size());
        for (std::size_t i = 0; i < t.source().size(); ++i) {
            const Word image = t.image_word(i);
            std::size_t k = 0;
            while (k < classes_.size() && classes_[k].image.word() != image) ++k;
            if (k == classes_.size()) {
                classes_.push_back(QuotientClass{ElementSet(t.target(), image),
                                                 ElementSet::empty(t.source())});
            }
            classes_[k].preimages =
                classes_[k].preimages.united(ElementSet::single(t.source(), i));
            class_of[i] = k;
        }
        class_of_ = std::move(class_of);
    }

    const std::vector<QuotientClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    std::size_t class_of(std::size_t source_index) const { return class_of_.at(source_index); }
    const Carrier& source() const { return *source_; }
    const Carrier& target() const { return *target_; }

    /// Word over the class list with the classes whose preimage set meets s.
    Word classes_of(const ElementSet& s) const {
        Word out = 0;
        for (std::size_t i = 0; i < source_->size(); ++i)
            if (s.contains(i)) out |= Word{1} << class_of_[i];
        return out;
    }

    std::string render_class_word(Word w) const {
        std::string out = "{";
        bool sep = false;
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            if (!((w >> k) & 1)) continue;
            if (sep) out += ',';
            out += classes_[k].image.to_string();
            sep = true;
        }
        out += '}';
        return out;
    }

private:
    const Carrier* source_;
    const Carrier* target_;
    std::vector<QuotientClass> classes_;
    std::vector<std::size_t> class_of_;
};

/// T-lower(H)/T: classes contained in H. Result is a word over the class list.
inline Word quotient_lower(const QuotientClasses& q, const ElementSet& h) {
    if (&h.carrier() != &q.target()) {
        throw StructureMismatchError("quotient approximation set is not over the map's target");
    }
    Word out = 0;
    for (std::size_t k = 0; k < q.size(); ++k)
        if ((q.classes()[k].image.word() & ~h.word()) == 0) out |= Word{1} << k;
    return out;
}

/// T-upper(H)/T: classes meeting H.
inline Word quotient_upper(const QuotientClasses& q, const ElementSet& h) {
    if (&h.carrier() != &q.target()) {
        throw StructureMismatchError("quotient approximation set is not over the map's target");
    }
    Word out = 0;
    for (std::size_t k = 0; k < q.size(); ++k)
        if ((q.classes()[k].image.word() & h.word()) != 0) out |= Word{1} << k;
    return out;
}

/// T(x) = T(x') but T(x g y) != T(x' g y), or the right-argument analogue.
struct QuotientWitness {
    std::string x, x_alt, y, gamma;
    bool right_argument; // true when the differing products are y g x vs y g x'

    std::string to_string() const {
        return "(" + x + "," + x_alt + "," + y + "," + gamma + "," +
               (right_argument ? "right-arg" : "left-arg") + ")";
    }
};

/// Classes plus the induced operation when it exists. The induced table is a
/// GammaSemigroup over class labels, so the ideal predicates run on it
/// unchanged; element i of the induced carrier is class i.
struct QuotientStructure {
    QuotientClasses classes;
    bool well_defined = false;
    std::optional<QuotientWitness> failure_witness;
    std::optional<GammaSemigroup> induced;

    ElementSet class_set(Word w) const {
        return ElementSet(induced->elements(), w);
    }
};

/// Build M1/T from a map whose source is a Gamma-semigroup. Failure of
/// well-definedness is a recorded outcome, not an error; when the operation
/// is well-defined its table is re-validated for associativity (it inherits
/// it, but the check is cheap and keeps the construction honest).
inline QuotientStructure build_quotient(const SetValuedMap& t) {
    const GammaSemigroup* src = t.source_structure();
    if (!src) {
        throw StructureMismatchError("quotient construction needs a Gamma-semigroup source");
    }
    QuotientStructure out{QuotientClasses(t)};
    const QuotientClasses& q = out.classes;
    const std::size_t n = src->elements().size();
    const std::size_t m = src->gammas().size();

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t xr = 0; xr < n; ++xr) {
            if (q.class_of(x) != q.class_of(xr)) continue;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t g = 0; g < m; ++g) {
                    if (q.class_of(src->apply(x, g, y)) != q.class_of(src->apply(xr, g, y))) {
                        out.failure_witness = QuotientWitness{
                            src->elements().name_of(x), src->elements().name_of(xr),
                            src->elements().name_of(y), src->gammas().name_of(g), false};
                        return out;
                    }
                    if (q.class_of(src->apply(y, g, x)) != q.class_of(src->apply(y, g, xr))) {
                        out.failure_witness = QuotientWitness{
                            src->elements().name_of(x), src->elements().name_of(xr),
                            src->elements().name_of(y), src->gammas().name_of(g), true};
                        return out;
                    }
                }
        }

    out.well_defined = true;
    std::vector<std::string> labels;
    std::vector<std::size_t> rep; // least preimage element per class
    for (const QuotientClass& c : q.classes()) {
        labels.push_back(c.image.to_string());
        rep.push_back(*c.preimages.first());
    }
    RawTables tables(m);
    for (std::size_t g = 0; g < m; ++g) {
        tables[g].resize(q.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j)
                tables[g][i].push_back(labels[q.class_of(src->apply(rep[i], g, rep[j]))]);
    }
    out.induced = GammaSemigroup::make(src->name() + "/" + t.name(), labels,
                                       src->gammas().names(), tables);
    return out;
}

} // namespace grs
