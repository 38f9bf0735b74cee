#pragma once
// Truncated noncommutative formal series over the alphabet {e0, e1}.
//
// A series is a function from words of weight <= cap to coefficients, stored
// densely per weight (the weight-n block is a vector of 2^n coefficients
// indexed by the word's binary numeral).  Two products are provided:
//
//   * concat_mul — the concatenation (noncommutative power-series) product,
//     (f g)[w] = sum over splittings w = u v of f[u] g[v];
//   * shuffle_mul — the commutative shuffle product,
//     (f ⧢ g)[w] = sum over complementary subsequences u, v of w of f[u] g[v].
//
// Group-like elements are the series with f[u] f[v] = <f, u ⧢ v> for all
// words; equivalently exp (concatenation) of a Lie series.  All algorithms
// here are exact: truncation at the cap is the only approximation, and every
// operation is weight-graded so truncated results agree with the untruncated
// ones below the cap.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pmhs/coeff.hpp"
#include "pmhs/word.hpp"

namespace pmhs {

template <class K>
class NCSeries {
public:
    /// The zero series with the given weight cap (inclusive).
    explicit NCSeries(int cap) : cap_(cap) {
        if (cap < 0 || cap > Word::MAX_LEN) throw input_error("NCSeries: bad cap");
        c_.resize(static_cast<std::size_t>(cap) + 1);
        for (int n = 0; n <= cap; ++n)
            c_[static_cast<std::size_t>(n)].resize(std::size_t(1) << n);
    }

    static NCSeries zero(int cap) { return NCSeries(cap); }
    static NCSeries unit(int cap, const K& one) {
        NCSeries f(cap);
        f.coeff(Word::empty()) = one;
        return f;
    }
    /// The single-letter series one * e_which.
    static NCSeries letter(int cap, int which, const K& one) {
        NCSeries f(cap);
        f.coeff(which ? Word::e1() : Word::e0()) = one;
        return f;
    }

    int cap() const { return cap_; }

    const K& coeff(const Word& w) const {
        return c_[static_cast<std::size_t>(w.len)][static_cast<std::size_t>(w.bits)];
    }
    K& coeff(const Word& w) {
        return c_[static_cast<std::size_t>(w.len)][static_cast<std::size_t>(w.bits)];
    }

    bool is_zero() const {
        for (const auto& blk : c_)
            for (const K& x : blk)
                if (!CoeffOps<K>::exact_zero(x)) return false;
        return true;
    }

    NCSeries operator+(const NCSeries& o) const {
        require_same_cap(o);
        NCSeries out(cap_);
        for (std::size_t n = 0; n < c_.size(); ++n)
            for (std::size_t i = 0; i < c_[n].size(); ++i)
                out.c_[n][i] = c_[n][i] + o.c_[n][i];
        return out;
    }
    NCSeries operator-(const NCSeries& o) const {
        require_same_cap(o);
        NCSeries out(cap_);
        for (std::size_t n = 0; n < c_.size(); ++n)
            for (std::size_t i = 0; i < c_[n].size(); ++i)
                out.c_[n][i] = c_[n][i] - o.c_[n][i];
        return out;
    }
    NCSeries operator-() const {
        NCSeries out(cap_);
        for (std::size_t n = 0; n < c_.size(); ++n)
            for (std::size_t i = 0; i < c_[n].size(); ++i)
                out.c_[n][i] = -c_[n][i];
        return out;
    }

    /// Scale every coefficient by an exact rational.
    NCSeries scaled(const Rational& q) const {
        NCSeries out(cap_);
        for (std::size_t n = 0; n < c_.size(); ++n)
            for (std::size_t i = 0; i < c_[n].size(); ++i)
                if (!CoeffOps<K>::exact_zero(c_[n][i]))
                    out.c_[n][i] = CoeffOps<K>::scale(c_[n][i], q);
        return out;
    }

    /// tau(lambda): scale the weight-n block by lambda^n.
    NCSeries tau(const Rational& lambda) const {
        NCSeries out(cap_);
        Rational pw = 1;
        for (std::size_t n = 0; n < c_.size(); ++n) {
            for (std::size_t i = 0; i < c_[n].size(); ++i)
                if (!CoeffOps<K>::exact_zero(c_[n][i]))
                    out.c_[n][i] = CoeffOps<K>::scale(c_[n][i], pw);
            pw *= lambda;
        }
        return out;
    }

    /// Concatenation product, truncated at the cap.
    NCSeries concat_mul(const NCSeries& o) const {
        require_same_cap(o);
        NCSeries out(cap_);
        for (int n = 0; n <= cap_; ++n) {
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
                Word w{n, b};
                K acc{};
                for (int i = 0; i <= n; ++i) {
                    const K& fu = coeff(w.prefix(i));
                    if (CoeffOps<K>::exact_zero(fu)) continue;
                    const K& gv = o.coeff(w.suffix(n - i));
                    if (CoeffOps<K>::exact_zero(gv)) continue;
                    acc = acc + fu * gv;
                }
                out.coeff(w) = std::move(acc);
            }
        }
        return out;
    }
    NCSeries operator*(const NCSeries& o) const { return concat_mul(o); }

    /// Shuffle product, truncated at the cap.
    NCSeries shuffle_mul(const NCSeries& o) const {
        require_same_cap(o);
        NCSeries out(cap_);
        for (int n = 0; n <= cap_; ++n) {
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
                Word w{n, b};
                K acc{};
                const std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t(1) << n) - 1);
                std::uint64_t mask = 0;
                while (true) {
                    const K& fu = coeff(subsequence(w, mask));
                    if (!CoeffOps<K>::exact_zero(fu)) {
                        const K& gv = o.coeff(subsequence(w, full & ~mask));
                        if (!CoeffOps<K>::exact_zero(gv)) acc = acc + fu * gv;
                    }
                    if (mask == full) break;
                    ++mask;
                }
                out.coeff(w) = std::move(acc);
            }
        }
        return out;
    }

    /// Multiplicative inverse for the concatenation product; the constant
    /// term must be a unit (throws calc_error("non-unit constant term")).
    NCSeries inverse() const {
        K c_inv = CoeffOps<K>::inv(coeff(Word::empty()));
        NCSeries g(cap_);
        g.coeff(Word::empty()) = c_inv;
        for (int n = 1; n <= cap_; ++n) {
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
                Word w{n, b};
                K acc{};
                // sum over w = u v with u nonempty: f[u] g[v]
                for (int i = 1; i <= n; ++i) {
                    const K& fu = coeff(w.prefix(i));
                    if (CoeffOps<K>::exact_zero(fu)) continue;
                    const K& gv = g.coeff(w.suffix(n - i));
                    if (CoeffOps<K>::exact_zero(gv)) continue;
                    acc = acc + fu * gv;
                }
                g.coeff(w) = -(c_inv * acc);
            }
        }
        return g;
    }

    /// Keep only weights <= new_cap (new_cap <= cap allowed; result has the
    /// requested cap).
    NCSeries truncated(int new_cap) const {
        NCSeries out(new_cap);
        int n_top = std::min(new_cap, cap_);
        for (int n = 0; n <= n_top; ++n) out.c_[n] = c_[n];
        return out;
    }

    /// The single-weight slice (other weights zeroed; cap preserved).
    NCSeries weight_part(int n) const {
        NCSeries out(cap_);
        if (n >= 0 && n <= cap_) out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
        return out;
    }

private:
    void require_same_cap(const NCSeries& o) const {
        if (cap_ != o.cap_) throw input_error("NCSeries: cap mismatch");
    }

    int cap_;
    std::vector<std::vector<K>> c_;
};

/// f(A, B): substitute the series A for e0 and B for e1.  A and B must have
/// exactly-zero constant terms (guarantees weight-graded convergence under
/// truncation).  Implemented by recursion on the leading letter:
/// f = f[∅] + e0·(∂0 f) + e1·(∂1 f) gives f(A,B) = f[∅] + A·(∂0 f)(A,B)
/// + B·(∂1 f)(A,B), where ∂i is the left quotient.
template <class K>
NCSeries<K> subst(const NCSeries<K>& f, const NCSeries<K>& A, const NCSeries<K>& B) {
    if (!CoeffOps<K>::exact_zero(A.coeff(Word::empty())) ||
        !CoeffOps<K>::exact_zero(B.coeff(Word::empty())))
        throw input_error("subst: substituted series must have zero constant term");
    if (f.cap() != A.cap() || f.cap() != B.cap())
        throw input_error("subst: cap mismatch");
    const int cap = f.cap();
    NCSeries<K> out(cap);
    out.coeff(Word::empty()) = f.coeff(Word::empty());
    if (f.is_zero()) return out;

    // Left quotients: (d_i f)[w] = f[letter_i w], truncated to weights < cap.
    for (int letter = 0; letter < 2; ++letter) {
        NCSeries<K> q(cap);
        bool any = false;
        for (int n = 0; n + 1 <= cap; ++n) {
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
                Word w{n, b};
                Word lw = concat(letter ? Word::e1() : Word::e0(), w);
                const K& x = f.coeff(lw);
                if (!CoeffOps<K>::exact_zero(x)) {
                    q.coeff(w) = x;
                    any = true;
                }
            }
        }
        if (!any) continue;
        NCSeries<K> inner = subst(q, A, B);
        out = out + (letter ? B : A).concat_mul(inner);
    }
    return out;
}

/// <f, sum of words with Int multiplicities> coefficient pairing.
template <class K>
K pairing(const NCSeries<K>& f, const std::map<Word, Int>& combo) {
    K acc{};
    for (const auto& [w, m] : combo) {
        if (w.len > f.cap()) throw input_error("pairing: word exceeds cap");
        const K& x = f.coeff(w);
        if (CoeffOps<K>::exact_zero(x)) continue;
        acc = acc + CoeffOps<K>::scale(x, Rational(m));
    }
    return acc;
}

/// Group-likeness test (exact coefficients): checks f[∅] == 1 and
/// f[u] f[v] == <f, u ⧢ v> for all nonempty u, v with |u|+|v| <= cap.
/// Returns the first failing pair, or nullopt if f is group-like.
std::optional<std::pair<Word, Word>> grouplike_defect(const NCSeries<Rational>& f);

/// Primitivity test (exact coefficients): f[∅] == 0 and <f, u ⧢ v> == 0 for
/// all nonempty u, v.  Returns the first failing pair.
std::optional<std::pair<Word, Word>> primitive_defect(const NCSeries<Rational>& f);

/// exp for the concatenation product (coefficient ring must contain the
/// rationals exactly); requires zero constant term.
NCSeries<Rational> exp_concat(const NCSeries<Rational>& f);

/// log for the concatenation product; requires constant term 1.
NCSeries<Rational> log_concat(const NCSeries<Rational>& f);

/// Lie bracket [f, g] = fg - gf (concatenation product).
template <class K>
NCSeries<K> lie_bracket(const NCSeries<K>& f, const NCSeries<K>& g) {
    return f.concat_mul(g) - g.concat_mul(f);
}

/// A random group-like series: exp of a random Lie series with small exact
/// rational coefficients.  If tilde_subgroup is true the Lie series has no
/// weight-1 part, so the result satisfies f[e0] = f[e1] = 0.
NCSeries<Rational> random_grouplike(int cap, std::mt19937_64& rng, bool tilde_subgroup);

}  // namespace pmhs
