#include "pmhs/haraction.hpp"

#include <functional>

#include "pmhs/padic.hpp"

namespace pmhs {

namespace {

// Entries [from, from+count) of the display vector, as a composition.
Composition slice_comp(const Composition& s, int from, int count) {
    return Composition(std::vector<long>(s.s.begin() + from, s.s.begin() + from + count));
}

// Composition (lam+1, s[from], ..., s[from+count-1]) — the cover segment
// with left extension lam whose interior runs are the given display entries.
Composition seg_comp(long lam, const Composition& s, int from, int count) {
    std::vector<long> e;
    e.reserve(static_cast<std::size_t>(count) + 1);
    e.push_back(lam + 1);
    e.insert(e.end(), s.s.begin() + from, s.s.begin() + from + count);
    return Composition(e);
}

}  // namespace

template <class K>
K har_act_value(const SymBrackets<K>& g, const HarPoint<K>& h, const Composition& s,
                long grade) {
    const int d = s.depth();
    if (d == 0) throw input_error("har_act_value: composition must be nonempty");
    if (!s.all_positive()) throw input_error("har_act_value: entries must be >= 1");

    K total{};

    // Covers are walked one segment block at a time.  Blocks group the d+1
    // e_1 letters (indices 0..d) of the template word into consecutive runs;
    // the leading block's bracket is deferred to the end of each cover so the
    // graded variant can solve for its leading exponent last.
    //
    // State while walking blocks after the leading one:
    //   i          first e_1 index of the current block
    //   lam        its left extension into the boundary run
    //   partial    product of the brackets of finished non-leading blocks
    //   quot       display entries of the quotient composition so far
    //   used       total (weight - 1) of finished non-leading blocks
    // The leading block [0..j0] keeps (j0, rho1): interior entries
    // s[0..j0-1], right extension rho1.
    int lead_j0 = 0;
    long lead_rho = 0;
    std::vector<long> quot;

    std::function<void(int, long, const K*, long)> walk;

    auto finish = [&](const K* partial, long used) {
        // Leading-block factor.  Its (weight - 1) is L + c0 with
        // c0 = interior entries + right extension.
        long c0 = lead_rho;
        for (int m = 0; m < lead_j0; ++m) c0 += s.s[static_cast<std::size_t>(m)];
        K lead;
        if (grade < 0) {
            lead = g.lsum(slice_comp(s, 0, lead_j0), lead_rho);
        } else {
            long L = grade - used - c0;
            if (L < 0) return;
            lead = g.bracket(seg_comp(L, s, 0, lead_j0), lead_rho);
        }
        if (CoeffOps<K>::exact_zero(lead)) return;
        K term = partial ? (lead * (*partial)) : lead;
        Composition qc{quot};
        if (qc.depth() > 0 || h.has(qc)) {
            // empty quotient: stored entry if any, else the conventional 1
            const K& hv = h.at(qc);
            if (CoeffOps<K>::exact_zero(hv)) return;
            term = term * hv;
        }
        total = total + term;
    };

    walk = [&](int i, long lam, const K* partial, long used) {
        for (int j = i; j <= d; ++j) {
            // current block covers e_1 indices [i..j]; interior display
            // entries s[i..j-1]
            long interior = 0;
            for (int m = i; m < j; ++m) interior += s.s[static_cast<std::size_t>(m)];
            if (j == d) {
                // last block: no right extension
                K f = g.bracket(seg_comp(lam, s, i, j - i), 0);
                if (CoeffOps<K>::exact_zero(f)) continue;
                K prod = partial ? (f * (*partial)) : f;
                finish(&prod, used + lam + interior);
            } else {
                long run = s.s[static_cast<std::size_t>(j)] - 1;
                for (long rho = 0; rho <= run; ++rho) {
                    K f = g.bracket(seg_comp(lam, s, i, j - i), rho);
                    if (CoeffOps<K>::exact_zero(f)) continue;
                    K prod = partial ? (f * (*partial)) : f;
                    long used2 = used + lam + interior + rho;
                    for (long lam2 = 0; lam2 + rho <= run; ++lam2) {
                        quot.push_back(run - rho - lam2 + 1);
                        walk(j + 1, lam2, &prod, used2);
                        quot.pop_back();
                    }
                }
            }
        }
    };

    // Leading block alone (single-block covers), then every choice of its
    // extent and right extension followed by the remaining blocks.
    for (int j0 = 0; j0 <= d; ++j0) {
        lead_j0 = j0;
        if (j0 == d) {
            lead_rho = 0;
            finish(nullptr, 0);
        } else {
            long run = s.s[static_cast<std::size_t>(j0)] - 1;
            for (long rho1 = 0; rho1 <= run; ++rho1) {
                lead_rho = rho1;
                for (long lam1 = 0; lam1 + rho1 <= run; ++lam1) {
                    quot.push_back(run - rho1 - lam1 + 1);
                    walk(j0 + 1, lam1, nullptr, 0);
                    quot.pop_back();
                }
            }
        }
    }
    return total;
}

template <class K>
HarPoint<K> har_act(const SymBrackets<K>& g, const HarPoint<K>& h,
                    const std::vector<Composition>& comps, long grade) {
    HarPoint<K> out;
    for (const Composition& c : comps) {
        if (c.depth() == 0) {
            // the empty coordinate is inert: the full action (and its grade-0
            // part) keep it, higher graded parts of it vanish
            if (grade >= 1)
                out.set(c, K{});
            else if (h.has(c))
                out.set(c, h.at(c));
            continue;
        }
        out.set(c, har_act_value(g, h, c, grade));
    }
    return out;
}

template <class K>
HarPoint<K> sigma_point(const SymBrackets<K>& g, const std::vector<Composition>& comps) {
    HarPoint<K> out;
    for (const Composition& c : comps) {
        if (c.depth() == 0) continue;
        if (!c.all_positive())
            throw input_error("sigma_point: entries must be >= 1");
        out.set(c, g.lsum(c, 0));
    }
    return out;
}

std::vector<Composition> compositions_up_to_weight(long wmax) {
    std::vector<Composition> out;
    out.emplace_back();  // empty composition
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long left) {
        for (long e = 1; e <= left; ++e) {
            cur.push_back(e);
            out.emplace_back(cur);
            rec(left - e);
            cur.pop_back();
        }
    };
    rec(wmax);
    return out;
}

template Rational har_act_value<Rational>(const SymBrackets<Rational>&,
                                          const HarPoint<Rational>&, const Composition&,
                                          long);
template PAdicApprox har_act_value<PAdicApprox>(const SymBrackets<PAdicApprox>&,
                                                const HarPoint<PAdicApprox>&,
                                                const Composition&, long);
template HarPoint<Rational> har_act<Rational>(const SymBrackets<Rational>&,
                                              const HarPoint<Rational>&,
                                              const std::vector<Composition>&, long);
template HarPoint<PAdicApprox> har_act<PAdicApprox>(const SymBrackets<PAdicApprox>&,
                                                    const HarPoint<PAdicApprox>&,
                                                    const std::vector<Composition>&, long);
template HarPoint<Rational> sigma_point<Rational>(const SymBrackets<Rational>&,
                                                  const std::vector<Composition>&);
template HarPoint<PAdicApprox> sigma_point<PAdicApprox>(const SymBrackets<PAdicApprox>&,
                                                        const std::vector<Composition>&);

}  // namespace pmhs
