// catalog.hpp -- the built-in structures and maps the tooling sweeps over:
// the published example fixtures plus a handful of small standard structures
// (including a two-gamma one, which no published example provides).

#pragma once

#include <vector>

#include "grs/approx.hpp"
#include "grs/core.hpp"

namespace grs::catalog {

// -- published example structures -------------------------------------------

inline const GammaSemigroup& example2_m() {
    static const GammaSemigroup s = GammaSemigroup::make_unchecked(
        "example2.M", {"1", "2", "3", "4"}, {"alpha", "beta"},
        {{{"1", "3", "3", "1"}, {"3", "1", "1", "3"}, {"3", "1", "1", "3"}, {"1", "3", "3", "3"}},
         {{"3", "1", "1", "3"}, {"1", "3", "3", "1"}, {"1", "3", "3", "1"}, {"3", "1", "1", "3"}}});
    return s;
}

inline const GammaSemigroup& example3_m() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "example3.M", {"a", "b", "c"}, {"alpha"},
        {{{"a", "b", "c"}, {"b", "b", "b"}, {"c", "b", "b"}}});
    return s;
}

inline const GammaSemigroup& example4_m() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "example4.M", {"x1", "x2", "x3", "x4"}, {"alpha"},
        {{{"x1", "x3", "x3", "x1"},
          {"x3", "x1", "x1", "x3"},
          {"x3", "x1", "x1", "x3"},
          {"x1", "x3", "x3", "x1"}}});
    return s;
}

inline const GammaSemigroup& example5_m1() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "example5.M1", {"1", "2"}, {"alpha"}, {{{"1", "1"}, {"1", "2"}}});
    return s;
}

inline const GammaSemigroup& example6_m1() {
    static const GammaSemigroup s = GammaSemigroup::make_unchecked(
        "example6.M1", {"x", "y", "z"}, {"alpha"},
        {{{"x", "x", "x"}, {"z", "z", "z"}, {"x", "x", "z"}}});
    return s;
}

inline const GammaSemigroup& example6_m2() {
    static const GammaSemigroup s = GammaSemigroup::make_unchecked(
        "example6.M2", {"a", "b", "c"}, {"alpha"},
        {{{"a", "a", "c"}, {"c", "c", "c"}, {"a", "a", "a"}}});
    return s;
}

// -- published example universes and maps ------------------------------------

inline const Carrier& example1_x() {
    static const Carrier c("example1.X", {"1", "2", "3", "4"});
    return c;
}

inline const Carrier& example1_y() {
    static const Carrier c("example1.Y", {"a", "b", "c"});
    return c;
}

inline const SetValuedMap& example1_t() {
    static const SetValuedMap t = SetValuedMap::make(
        "example1.T", example1_x(), example1_y(),
        {{"1", {"b"}}, {"2", {"a", "c"}}, {"3", {"b"}}, {"4", {"a", "b", "c"}}});
    return t;
}

inline const SetValuedMap& example3_t() {
    static const SetValuedMap t = SetValuedMap::make(
        "example3.T", example3_m(), example3_m(),
        {{"a", {"b", "c"}}, {"b", {"a", "b", "c"}}, {"c", {"b"}}});
    return t;
}

inline const SetValuedMap& example4_t() {
    static const SetValuedMap t = SetValuedMap::make(
        "example4.T", example4_m(), example4_m(),
        {{"x1", {"x1", "x2", "x3", "x4"}}, {"x2", {"x1", "x3"}}, {"x3", {"x3"}}, {"x4", {"x4"}}});
    return t;
}

inline const SetValuedMap& example5_t() {
    static const SetValuedMap t = SetValuedMap::make("example5.T", example5_m1(), example3_m(),
                                                     {{"1", {"c"}}, {"2", {"a"}}});
    return t;
}

// Image for z taken from the later examples that reuse this map; the printed
// block omits it, which the example audit reports.
inline const SetValuedMap& example6_t() {
    static const SetValuedMap t = SetValuedMap::make(
        "example6.T", example6_m1(), example6_m2(),
        {{"x", {"c"}}, {"y", {"b", "c"}}, {"z", {"c"}}});
    return t;
}

// -- small standard structures -----------------------------------------------

inline const GammaSemigroup& singleton() {
    static const GammaSemigroup s =
        GammaSemigroup::make("singleton", {"e"}, {"alpha"}, {{{"e"}}});
    return s;
}

inline const GammaSemigroup& left_zero2() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "leftzero2", {"p", "q"}, {"alpha"}, {{{"p", "p"}, {"q", "q"}}});
    return s;
}

inline const GammaSemigroup& right_zero2() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "rightzero2", {"p", "q"}, {"alpha"}, {{{"p", "q"}, {"p", "q"}}});
    return s;
}

inline const GammaSemigroup& constant2() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "constant2", {"o", "p"}, {"alpha"}, {{{"o", "o"}, {"o", "o"}}});
    return s;
}

/// Z3 with two sandwich operations a g b := a + c_g + b (c_alpha = 0,
/// c_beta = 1); the only catalog entry with more than one gamma.
inline const GammaSemigroup& cyclic3_sandwich() {
    static const GammaSemigroup s = GammaSemigroup::make(
        "cyclic3sandwich", {"0", "1", "2"}, {"alpha", "beta"},
        {{{"0", "1", "2"}, {"1", "2", "0"}, {"2", "0", "1"}},
         {{"1", "2", "0"}, {"2", "0", "1"}, {"0", "1", "2"}}});
    return s;
}

/// Validated structures for exhaustive sweeps, smallest first.
inline std::vector<const GammaSemigroup*> validated_structures(std::size_t max_order = 64) {
    std::vector<const GammaSemigroup*> all = {
        &singleton(),  &left_zero2(),     &right_zero2(),      &constant2(),
        &example5_m1(), &example3_m(),    &cyclic3_sandwich(), &example4_m(),
    };
    std::vector<const GammaSemigroup*> out;
    for (const GammaSemigroup* s : all)
        if (s->elements().size() <= max_order) out.push_back(s);
    return out;
}

/// Maps the quotient/approximation sweeps run over (all published fixtures).
inline std::vector<const SetValuedMap*> fixture_maps() {
    return {&example1_t(), &example3_t(), &example4_t(), &example5_t(), &example6_t()};
}

} // namespace grs::catalog
