#include "pmhs/word.hpp"

#include <bit>

#include "pmhs/util.hpp"

namespace pmhs {

Word Word::e0_pow(int a) {
    if (a < 0 || a > MAX_LEN) throw input_error("e0_pow: length out of range");
    return Word{a, 0};
}

int Word::depth() const { return std::popcount(bits); }

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if (letter(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Word Word::parse(const std::string& s) {
    if (static_cast<int>(s.size()) > MAX_LEN) throw input_error("Word::parse: too long");
    Word w;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw input_error("Word::parse: invalid letter '" + std::string(1, c) + "'");
        w.bits = (w.bits << 1) | static_cast<std::uint64_t>(c - '0');
        ++w.len;
    }
    return w;
}

Word concat(const Word& u, const Word& v) {
    if (u.len + v.len > Word::MAX_LEN) throw input_error("concat: word too long");
    return Word{u.len + v.len, (u.bits << v.len) | v.bits};
}

Word word_of_composition(const std::vector<long>& s) {
    Word w;
    for (long e : s) {
        if (e < 1) throw input_error("word_of_composition: entries must be >= 1");
        w = concat(w, concat(Word::e0_pow(static_cast<int>(e) - 1), Word::e1()));
    }
    return w;
}

bool is_composition_word(const Word& w) { return w.len == 0 || w.last() == 1; }

std::vector<long> composition_of_word(const Word& w) {
    if (!is_composition_word(w))
        throw input_error("composition_of_word: word does not end in e1");
    std::vector<long> s;
    long run = 0;
    for (int i = 0; i < w.len; ++i) {
        if (w.letter(i) == 0) {
            ++run;
        } else {
            s.push_back(run + 1);
            run = 0;
        }
    }
    return s;
}

namespace {
void shuffle_rec(const Word& u, int iu, const Word& v, int iv, Word acc,
                 std::map<Word, Int>& out) {
    if (iu == u.len && iv == v.len) {
        ++out[acc];
        return;
    }
    if (iu < u.len)
        shuffle_rec(u, iu + 1, v, iv,
                    concat(acc, u.letter(iu) ? Word::e1() : Word::e0()), out);
    if (iv < v.len)
        shuffle_rec(u, iu, v, iv + 1,
                    concat(acc, v.letter(iv) ? Word::e1() : Word::e0()), out);
}
}  // namespace

std::map<Word, Int> shuffle_words(const Word& u, const Word& v) {
    std::map<Word, Int> out;
    shuffle_rec(u, 0, v, 0, Word::empty(), out);
    return out;
}

Word subsequence(const Word& w, std::uint64_t position_mask) {
    Word out;
    for (int i = 0; i < w.len; ++i) {
        if ((position_mask >> i) & 1u) {
            out.bits = (out.bits << 1) | static_cast<std::uint64_t>(w.letter(i));
            ++out.len;
        }
    }
    return out;
}

}  // namespace pmhs
