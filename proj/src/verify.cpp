#include "hookschur/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hookschur/enumerate.hpp"
#include "hookschur/genfun.hpp"
#include "hookschur/insertion.hpp"
#include "hookschur/maps.hpp"
#include "hookschur/parallel.hpp"

namespace hookschur {

namespace {

SuperLetter letter_at(int idx, int k) { return idx < k ? unprimed(idx + 1) : primed(idx - k + 1); }

Report commute_case(const Filling& t, SuperLetter x, long long& checked) {
    Filling lhs = f_map(remmel_insert(t, x).tableau);
    Filling rhs = hct_insert(f_map(t), x).tableau;
    if (!(lhs == rhs)) {
        Report r;
        r.ok = false;
        r.detail = "commutation fails for tableau [" + to_string(t) + "] and letter " +
                   to_string(x) + ": f(insert) = [" + to_string(lhs) + "], insert(f) = [" +
                   to_string(rhs) + "]";
        return r;
    }
    ++checked;
    return {};
}

}  // namespace

Report compare_polynomials(const Polynomial& lhs, const Polynomial& rhs,
                           const std::string& context) {
    if (lhs == rhs) {
        Report r;
        r.detail = context + ": equal (" + std::to_string(lhs.terms().size()) + " terms)";
        return r;
    }
    Report r;
    r.ok = false;
    auto li = lhs.terms().begin(), le = lhs.terms().end();
    auto ri = rhs.terms().begin(), re = rhs.terms().end();
    MonomialOrder before;
    while (li != le || ri != re) {
        if (ri == re || (li != le && before(li->first, ri->first))) {
            r.detail = context + ": monomial " + li->first.to_text() + " has coefficient " +
                       li->second.str() + " on the left, 0 on the right";
            return r;
        }
        if (li == le || (ri != re && before(ri->first, li->first))) {
            r.detail = context + ": monomial " + ri->first.to_text() +
                       " has coefficient 0 on the left, " + ri->second.str() + " on the right";
            return r;
        }
        if (li->second != ri->second) {
            r.detail = context + ": monomial " + li->first.to_text() + " has coefficient " +
                       li->second.str() + " on the left, " + ri->second.str() + " on the right";
            return r;
        }
        ++li;
        ++ri;
    }
    r.detail = context + ": polynomials differ";
    return r;
}

Report verify_decomposition(const Partition& lambda, int k, int l) {
    Polynomial lhs = hs(lambda, k, l);
    Polynomial rhs;
    for (const Composition& alpha : rearrangements_of(lambda)) rhs += hq(alpha, k, l);
    return compare_polynomials(lhs, rhs, "hs(" + to_string(lambda) + ") vs sum of hq");
}

Report verify_transpose(const Partition& lambda, int k, int l) {
    Polynomial lhs, rhs;
    for (const Composition& alpha : rearrangements_of(lambda)) lhs += hq(alpha, k, l);
    for (const Composition& beta : rearrangements_of(conjugate(lambda))) rhs += rhq(beta, k, l);
    return compare_polynomials(lhs, rhs,
                               "sum of hq over rearrangements of " + to_string(lambda) +
                                   " vs sum of rhq over the conjugate");
}

Report verify_skew_cs_rs(const Composition& alpha, int k, int l) {
    Polynomial lhs = hq(alpha, k, l);
    Polynomial rhs;
    int rows = alpha.length();
    std::vector<int> gamma(rows, 0);
    std::function<void(int)> rec = [&](int i) {
        // Rows beyond i-1 stay unmasked: the inner shape occupies a bottom
        // prefix of the rows.
        std::vector<int> beta_parts;
        for (int r = 0; r < i - 1; ++r) beta_parts.push_back(gamma[r]);
        Composition beta(beta_parts);
        rhs += cs(beta, k, VarFamily::x) *
               rs_skew(alpha, SkewMask{WeakComposition(gamma)}, l, VarFamily::y);
        if (i > rows) return;
        for (int p = 1; p <= alpha.parts[i - 1]; ++p) {
            gamma[i - 1] = p;
            rec(i + 1);
            gamma[i - 1] = 0;
        }
    };
    rec(1);
    return compare_polynomials(lhs, rhs,
                               "hq(" + to_string(alpha) + ") vs sum of cs times skew rs");
}

Report verify_fundamental(const Composition& alpha, int m) {
    Polynomial cs_lhs = cs(alpha, m);
    Polynomial cs_rhs;
    for (const Filling& t : enumerate_standard(alpha, StandardFamily::syct))
        cs_rhs += fundamental(descent_set(t, StandardFamily::syct), m);
    Report r1 = compare_polynomials(cs_lhs, cs_rhs, "cs(" + to_string(alpha) + ") vs fundamentals");
    if (!r1.ok) return r1;

    Polynomial rs_lhs = rs(alpha, m);
    Polynomial rs_rhs;
    for (const Filling& t : enumerate_standard(alpha, StandardFamily::syrt))
        rs_rhs += fundamental(descent_set(t, StandardFamily::syrt), m);
    Report r2 = compare_polynomials(rs_lhs, rs_rhs, "rs(" + to_string(alpha) + ") vs fundamentals");
    if (!r2.ok) return r2;
    Report r;
    r.detail = r1.detail + "; " + r2.detail;
    return r;
}

Report verify_superfund_split(const DescentSet& d, int k, int l) {
    Polynomial lhs = super_fundamental(d, k, l);
    Polynomial rhs;
    for (int i = 0; i <= d.n; ++i) {
        SplitSets split = superfund_split(d, i);
        rhs += fundamental(split.d1, k, VarFamily::x) * fundamental(split.d2, l, VarFamily::y);
    }
    std::ostringstream ctx;
    ctx << "super fundamental (n=" << d.n << ", D={";
    for (size_t i = 0; i < d.members.size(); ++i) ctx << (i ? "," : "") << d.members[i];
    ctx << "}) vs split products";
    return compare_polynomials(lhs, rhs, ctx.str());
}

Report verify_hq_fundamental(const Composition& alpha, int k, int l) {
    Polynomial lhs = hq(alpha, k, l);
    Polynomial rhs;
    for (const Filling& s : enumerate_standard(alpha, StandardFamily::shct))
        rhs += super_fundamental(descent_set(s, StandardFamily::shct), k, l);
    return compare_polynomials(lhs, rhs,
                               "hq(" + to_string(alpha) + ") vs super fundamentals");
}

Report verify_cauchy(int max_weight, int vars) {
    if (max_weight < 0) throw std::invalid_argument("weight bound must be nonnegative");
    std::vector<Partition> shapes;
    for (int n = 0; n <= max_weight; ++n)
        for (const Partition& lambda : partitions_of(n)) shapes.push_back(lambda);
    std::vector<Polynomial> products = parallel_map<Polynomial>(
        (int)shapes.size(), [&](int idx) {
            Polynomial left, right;
            for (const Composition& alpha : rearrangements_of(shapes[idx])) {
                left += hq(alpha, vars, vars, {VarFamily::x, VarFamily::s});
                right += hq(alpha, vars, vars, {VarFamily::y, VarFamily::t});
            }
            return left * right;
        });
    Polynomial lhs;
    for (const Polynomial& p : products) lhs += p;
    std::vector<ProductFactor> factors;
    for (int i = 1; i <= vars; ++i)
        for (int j = 1; j <= vars; ++j) {
            factors.push_back({{VarFamily::x, i}, {VarFamily::y, j}, false});
            factors.push_back({{VarFamily::s, i}, {VarFamily::t, j}, false});
            factors.push_back({{VarFamily::x, i}, {VarFamily::t, j}, true});
            factors.push_back({{VarFamily::y, i}, {VarFamily::s, j}, true});
        }
    Polynomial rhs = truncated_product(factors, 2 * max_weight);
    std::ostringstream ctx;
    ctx << "Cauchy sum over shapes of weight <= " << max_weight << " vs truncated product";
    return compare_polynomials(lhs, rhs, ctx.str());
}

Report verify_insertion_commute(int max_size, int k, int l) {
    long long checked = 0;
    for (int n = 0; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            Report failed;
            bool stop = false;
            for_each_filling(Composition(lambda.parts), std::nullopt, Family::ssht, k, l,
                             [&](const Filling& t) {
                                 for (int idx = 0; idx < k + l && !stop; ++idx) {
                                     Report r = commute_case(t, letter_at(idx, k), checked);
                                     if (!r.ok) {
                                         failed = r;
                                         stop = true;
                                     }
                                 }
                                 return !stop;
                             });
            if (stop) return failed;
        }
    Report r;
    r.detail = "insertion commutes with f on " + std::to_string(checked) + " cases";
    return r;
}

Report verify_insertion_commute_random(int cases, int max_size, int k, int l,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick_letter = [&]() {
        return letter_at((int)(rng() % (std::uint64_t)(k + l)), k);
    };
    long long checked = 0;
    for (int c = 0; c < cases; ++c) {
        int size = (int)(rng() % (std::uint64_t)(max_size + 1));
        Filling t{Composition{}, {}};
        for (int i = 0; i < size; ++i) t = remmel_insert(t, pick_letter()).tableau;
        Report r = commute_case(t, pick_letter(), checked);
        if (!r.ok) {
            r.detail += " (seed " + std::to_string(seed) + ", case " + std::to_string(c) + ")";
            return r;
        }
    }
    Report r;
    r.detail = "insertion commutes with f on " + std::to_string(checked) +
               " random cases (seed " + std::to_string(seed) + ")";
    return r;
}

}  // namespace hookschur
