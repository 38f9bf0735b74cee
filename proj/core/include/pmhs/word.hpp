#pragma once
// Words over the two-letter alphabet {e0, e1}.
//
// A word is stored as its length plus the binary numeral formed by reading
// its letters left to right (e0 -> bit 0, e1 -> bit 1).  The empty word has
// length 0.  This makes words directly usable as dense table indices: the
// weight-n block of a series is a vector of 2^n coefficients indexed by the
// numeral.
//
// An index composition (s_d, ..., s_1) — written outermost entry first —
// corresponds to the word e0^{s_d-1} e1 ... e0^{s_1-1} e1; such words are
// exactly the ones ending in e1.  depth = number of e1 letters, weight =
// total length = sum of the composition entries.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pmhs/rational.hpp"

namespace pmhs {

struct Word {
    int len = 0;
    std::uint64_t bits = 0;

    static constexpr int MAX_LEN = 62;

    static Word empty() { return Word{}; }
    static Word e0() { return Word{1, 0}; }
    static Word e1() { return Word{1, 1}; }
    /// e0^a
    static Word e0_pow(int a);

    int weight() const { return len; }
    int depth() const;

    /// Letter at position i (0 = leftmost): 0 or 1.
    int letter(int i) const { return static_cast<int>((bits >> (len - 1 - i)) & 1u); }

    /// First/last letter (word must be nonempty).
    int first() const { return letter(0); }
    int last() const { return static_cast<int>(bits & 1u); }

    /// Prefix of length k / suffix of length k.
    Word prefix(int k) const { return Word{k, bits >> (len - k)}; }
    Word suffix(int k) const {
        return Word{k, k == 0 ? 0 : (bits & ((std::uint64_t(1) << k) - 1))};
    }

    /// Left quotient by one letter: drops the first letter (word nonempty).
    Word tail() const { return suffix(len - 1); }

    bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const {
        return len != o.len ? len < o.len : bits < o.bits;
    }

    /// "0"/"1" string, e.g. e0 e1 e1 -> "011"; empty word -> "".
    std::string str() const;
    static Word parse(const std::string& s);
};

/// Concatenation uv.
Word concat(const Word& u, const Word& v);

/// Word of a composition given outermost entry first:
/// (s_d, ..., s_1) -> e0^{s_d-1} e1 ... e0^{s_1-1} e1.  Entries must be >= 1.
Word word_of_composition(const std::vector<long>& s);

/// True if w is empty or ends in e1 (i.e. is the word of a composition).
bool is_composition_word(const Word& w);

/// Inverse of word_of_composition (outermost entry first).  Throws
/// input_error if the word does not end in e1.
std::vector<long> composition_of_word(const Word& w);

/// The shuffle product u ⧢ v as a multiset of words: word -> multiplicity.
/// Multiplicities sum to binom(|u|+|v|, |u|).
std::map<Word, Int> shuffle_words(const Word& u, const Word& v);

/// Subsequence of w selected by a position mask (bit i of mask = keep
/// position i, positions counted from the left).
Word subsequence(const Word& w, std::uint64_t position_mask);

}  // namespace pmhs
