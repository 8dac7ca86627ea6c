#include "hookschur/genfun.hpp"

#include <functional>
#include <stdexcept>

namespace hookschur {

namespace {

Polynomial family_sum(const Composition& shape, const std::optional<SkewMask>& mask,
                      Family family, int k, int l, FamilyPair vars) {
    Polynomial out;
    for_each_filling(shape, mask, family, k, l, [&](const Filling& f) {
        out.add_term(weight_monomial(f, vars), 1);
        return true;
    });
    return out;
}

Composition partition_shape(const Partition& lambda) { return Composition(lambda.parts); }

}  // namespace

Monomial weight_monomial(const Filling& f, FamilyPair vars) {
    Weight w = weight(f);
    Monomial m;
    for (const auto& [v, e] : w.x) m = m.times(Monomial::var(vars.unprimed, v, e));
    for (const auto& [v, e] : w.y) m = m.times(Monomial::var(vars.primed, v, e));
    return m;
}

Polynomial hs(const Partition& lambda, int k, int l, FamilyPair vars) {
    return family_sum(partition_shape(lambda), std::nullopt, Family::ssht, k, l, vars);
}

Polynomial hq(const Composition& alpha, int k, int l, FamilyPair vars) {
    return family_sum(alpha, std::nullopt, Family::hct, k, l, vars);
}

Polynomial rhq(const Composition& alpha, int k, int l, FamilyPair vars) {
    return family_sum(alpha, std::nullopt, Family::rhct, k, l, vars);
}

Polynomial cs(const Composition& alpha, int k, VarFamily vars) {
    return family_sum(alpha, std::nullopt, Family::ssyct, k, 0, {vars, vars});
}

Polynomial rs(const Composition& alpha, int k, VarFamily vars) {
    return family_sum(alpha, std::nullopt, Family::ssyrt, k, 0, {vars, vars});
}

Polynomial cs_skew(const Composition& shape, const SkewMask& mask, int k, VarFamily vars) {
    return family_sum(shape, mask, Family::ssyct, k, 0, {vars, vars});
}

Polynomial rs_skew(const Composition& shape, const SkewMask& mask, int k, VarFamily vars) {
    return family_sum(shape, mask, Family::ssyrt, k, 0, {vars, vars});
}

Polynomial fundamental(const DescentSet& d, int m, VarFamily vars) {
    if (m < 0) throw std::invalid_argument("number of variables must be nonnegative");
    Polynomial out;
    std::vector<int> word(d.n);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == d.n) {
            Monomial mono;
            for (int a : word) mono = mono.times(Monomial::var(vars, a));
            out.add_term(mono, 1);
            return;
        }
        for (int a = low; a <= m; ++a) {
            word[pos] = a;
            rec(pos + 1, d.has(pos + 1) ? a + 1 : a);
        }
    };
    rec(0, 1);
    return out;
}

Polynomial super_fundamental(const DescentSet& d, int k, int l, FamilyPair vars) {
    if (k < 0 || l < 0) throw std::invalid_argument("alphabet sizes must be nonnegative");
    std::vector<SuperLetter> letters;
    for (int v = 1; v <= k; ++v) letters.push_back(unprimed(v));
    for (int v = 1; v <= l; ++v) letters.push_back(primed(v));
    Polynomial out;
    std::vector<size_t> word(d.n);
    std::function<void(int, size_t)> rec = [&](int pos, size_t low) {
        if (pos == d.n) {
            Monomial mono;
            for (size_t idx : word) {
                SuperLetter a = letters[idx];
                mono = mono.times(Monomial::var(a.primed ? vars.primed : vars.unprimed, a.value));
            }
            out.add_term(mono, 1);
            return;
        }
        for (size_t idx = low; idx < letters.size(); ++idx) {
            word[pos] = idx;
            bool descend = d.has(pos + 1);
            // Equal adjacent letters: unprimed forbid a descent, primed require one.
            size_t next_low = idx;
            if (letters[idx].primed != descend) ++next_low;
            rec(pos + 1, next_low);
        }
    };
    rec(0, 0);
    return out;
}

Polynomial truncated_product(const std::vector<ProductFactor>& factors, int max_degree) {
    Polynomial acc = Polynomial::one();
    for (const auto& f : factors) {
        Monomial vw = Monomial::var(f.v.family, f.v.index).times(Monomial::var(f.w.family, f.w.index));
        Polynomial factor = Polynomial::one();
        if (f.plus) {
            factor.add_term(vw, 1);
        } else {
            Monomial power = vw;
            while (power.total_degree() <= max_degree) {
                factor.add_term(power, 1);
                power = power.times(vw);
            }
        }
        acc = mul_truncated(acc, factor, max_degree);
    }
    return acc.truncated(max_degree);
}

}  // namespace hookschur
