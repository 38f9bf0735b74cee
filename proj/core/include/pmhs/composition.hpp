#pragma once
// Index compositions and evaluation tables keyed by them.
//
// A composition (s_d, ..., s_1) lists the exponents of a multiple harmonic
// sum *outermost entry first*: in
//
//     H_N(s_d, ..., s_1) = sum over 0 < n_1 < ... < n_d < N of
//                          n_d^{-s_d} ... n_1^{-s_1}
//
// the first listed entry s_d is the exponent of the largest index n_d, and
// the last listed entry s_1 the innermost one.  Entries are usually >= 1;
// entries <= 0 denote monomial factors n^{|s|} (used by the "reversed-sign"
// power-sum variants).  The text form is comma-separated in the same order,
// e.g. "2,1"; the empty composition is "" with depth 0 and H_N() = 1.

#include <map>
#include <string>
#include <vector>

#include "pmhs/rational.hpp"
#include "pmhs/word.hpp"

namespace pmhs {

struct Composition {
    std::vector<long> s;  // display order: s.front() is outermost (s_d)

    Composition() = default;
    explicit Composition(std::vector<long> entries) : s(std::move(entries)) {}

    int depth() const { return static_cast<int>(s.size()); }
    long weight() const {
        long w = 0;
        for (long e : s) w += e;
        return w;
    }
    bool all_positive() const {
        for (long e : s)
            if (e < 1) return false;
        return true;
    }
    /// Innermost entry (s_1) — the last listed one.
    long inner() const {
        if (s.empty()) throw input_error("Composition::inner: empty composition");
        return s.back();
    }

    /// "2,1" style text (empty composition -> "").
    std::string str() const;
    static Composition parse(const std::string& text);

    /// Word e0^{s_d-1} e1 ... e0^{s_1-1} e1 (entries must be >= 1).
    Word word() const { return word_of_composition(s); }
    static Composition of_word(const Word& w) { return Composition(composition_of_word(w)); }

    bool operator==(const Composition& o) const { return s == o.s; }
    bool operator<(const Composition& o) const { return s < o.s; }
};

/// A finite table composition -> value (a "point" of the dual harmonic
/// algebra: the values of one fixed sum at many compositions).
template <class K>
struct HarPoint {
    std::map<Composition, K> entries;

    bool has(const Composition& c) const { return entries.count(c) != 0; }
    const K& at(const Composition& c) const {
        auto it = entries.find(c);
        if (it == entries.end())
            throw input_error("HarPoint: missing composition " +
                              (c.s.empty() ? std::string("(empty)") : c.str()));
        return it->second;
    }
    void set(const Composition& c, K v) { entries[c] = std::move(v); }
};

}  // namespace pmhs
