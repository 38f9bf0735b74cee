#pragma once
// Action of the truncated-series group on harmonic-sum points.
//
// A "point" h assigns a value to every composition (plus the conventional
// value 1 at the empty composition).  A series g acts on points through the
// brackets of its symmetrized image: for the template word
//
//     e_0^{L} e_1 e_0^{s_d-1} e_1 ... e_0^{s_1-1} e_1      (L summed over)
//
// the result at (s_d, ..., s_1) is a sum over covers of the template's e_1
// letters by disjoint consecutive segments.  Each segment contributes a
// bracket of the symmetrized series (its interior e_0 runs are absorbed
// whole; at each boundary run the left segment may keep a right extension
// rho and the right segment a left extension lambda, with rho + lambda at
// most the run length — adjacent segments are allowed); the run lengths left
// over become the entries of a quotient composition, evaluated under h.  The
// segment containing the first e_1 absorbs the leading run, so its bracket
// is summed over all leading exponents L >= 0.
//
// The graded variant keeps only covers whose segments have total
// (weight - 1) equal to a prescribed grade; twisting the acting series by
// tau(N) multiplies the grade-t part by N^t, and grade 0 is the identity.
//
// Brackets are supplied through a provider interface so that the same walker
// runs on explicit truncated series (exact tests) and on certified p-adic
// bracket tables (solver output).

#include <vector>

#include "pmhs/composition.hpp"
#include "pmhs/series.hpp"

namespace pmhs {

/// Brackets of a symmetrized series.  With word(c) the word of a composition
/// c (entries >= 1), `bracket` evaluates at word(c) e_0^rho, and `lsum`
/// evaluates the sum over L >= 0 at e_0^L e_1 word(c) e_0^rho (c may be
/// empty: the template is then e_0^L e_1 e_0^rho).  The represented series
/// must vanish on words without the second letter — true of every
/// symmetrized series — since the cover walker never queries such segments.
template <class K>
struct SymBrackets {
    virtual ~SymBrackets() = default;
    virtual K bracket(const Composition& c, long rho) const = 0;
    virtual K lsum(const Composition& c, long rho) const = 0;
};

/// Brackets read off an explicit truncated series (normally the symmetrized
/// image of a grouplike series).  Words beyond the cap count as zero, so
/// `lsum` is the truncated leading-exponent sum.
template <class K>
class SeriesSymBrackets : public SymBrackets<K> {
public:
    explicit SeriesSymBrackets(NCSeries<K> S) : S_(std::move(S)) {}

    K bracket(const Composition& c, long rho) const override {
        if (!c.all_positive())
            throw input_error("SeriesSymBrackets: composition entries must be >= 1");
        long w = c.weight() + rho;
        if (c.depth() == 0 || w > S_.cap()) return K{};
        Word word = concat(c.word(), Word::e0_pow(static_cast<int>(rho)));
        return S_.coeff(word);
    }

    K lsum(const Composition& c, long rho) const override {
        K acc{};
        for (long L = 0; L + 1 + c.weight() + rho <= S_.cap(); ++L) {
            std::vector<long> entries;
            entries.push_back(L + 1);
            entries.insert(entries.end(), c.s.begin(), c.s.end());
            acc = acc + bracket(Composition(entries), rho);
        }
        return acc;
    }

private:
    NCSeries<K> S_;
};

/// Value of the acted-on point at one composition (entries >= 1, depth >= 1).
/// grade < 0 gives the full action; grade >= 0 the graded part.  Covers whose
/// quotient is the empty composition use h's stored entry for it when present
/// and the conventional value 1 otherwise (the walker is linear in h, so a
/// stored entry other than 1 — e.g. the graded part of a previous action
/// result — is respected).
template <class K>
K har_act_value(const SymBrackets<K>& g, const HarPoint<K>& h, const Composition& s,
                long grade = -1);

/// Whole-point action over a composition list (the point h must hold every
/// quotient composition that can appear: all merges of adjacent entries with
/// shortened runs — holding all compositions of weight <= wt covers it).
/// An empty composition in the list copies h's entry verbatim.
template <class K>
HarPoint<K> har_act(const SymBrackets<K>& g, const HarPoint<K>& h,
                    const std::vector<Composition>& comps, long grade = -1);

/// The point induced by the acting series itself: value at s is the leading
/// sum over L of the bracket at e_0^L e_1 word(s)  (the image of the trivial
/// point under the action).
template <class K>
HarPoint<K> sigma_point(const SymBrackets<K>& g, const std::vector<Composition>& comps);

/// All compositions with positive entries and weight <= wmax, including the
/// empty one.
std::vector<Composition> compositions_up_to_weight(long wmax);

}  // namespace pmhs
