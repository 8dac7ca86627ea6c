#include "hookschur/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hookschur {

char family_char(VarFamily f) {
    switch (f) {
        case VarFamily::x:
            return 'x';
        case VarFamily::y:
            return 'y';
        case VarFamily::s:
            return 's';
        case VarFamily::t:
            return 't';
    }
    throw std::logic_error("bad variable family");
}

VarFamily parse_family(char c) {
    switch (c) {
        case 'x':
            return VarFamily::x;
        case 'y':
            return VarFamily::y;
        case 's':
            return VarFamily::s;
        case 't':
            return VarFamily::t;
        default:
            throw std::invalid_argument(std::string("unknown variable family '") + c + "'");
    }
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [k, e] : exps) d += e;
    return d;
}

int Monomial::degree_in(VarFamily f) const {
    int d = 0;
    for (const auto& [k, e] : exps)
        if (k.family == f) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < exps.size() && j < other.exps.size()) {
        if (exps[i].first == other.exps[j].first) {
            out.exps.emplace_back(exps[i].first, exps[i].second + other.exps[j].second);
            ++i;
            ++j;
        } else if (exps[i].first < other.exps[j].first) {
            out.exps.push_back(exps[i++]);
        } else {
            out.exps.push_back(other.exps[j++]);
        }
    }
    while (i < exps.size()) out.exps.push_back(exps[i++]);
    while (j < other.exps.size()) out.exps.push_back(other.exps[j++]);
    return out;
}

std::string Monomial::to_text() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : exps) {
        if (!first) os << '*';
        first = false;
        os << family_char(k.family) << k.index;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

Monomial Monomial::one() { return {}; }

Monomial Monomial::var(VarFamily f, int index, int exp) {
    if (index < 1) throw std::invalid_argument("variable index must be positive");
    if (exp < 1) throw std::invalid_argument("exponent must be positive");
    Monomial m;
    m.exps.emplace_back(VarKey{f, index}, exp);
    return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        const auto& [ka, ea] = a.exps[i];
        const auto& [kb, eb] = b.exps[j];
        if (ka == kb) {
            if (ea != eb) return ea > eb;
            ++i;
            ++j;
        } else {
            // The lexicographically earlier key has a positive exponent in one
            // monomial and zero in the other; larger exponent first.
            return ka < kb;
        }
    }
    if (i < a.exps.size()) return true;
    return false;
}

Polynomial Polynomial::one() { return constant(1); }

Polynomial Polynomial::constant(const Coeff& c) {
    Polynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(VarFamily f, int index) {
    return term(Monomial::var(f, index), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Coeff& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() <= max_degree) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::without_family(VarFamily f) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.degree_in(f) == 0) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::renamed(VarFamily from, VarFamily to) const {
    if (from == to) return *this;
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(to) != 0)
            throw std::invalid_argument("rename target family already present");
        Monomial r;
        for (const auto& [k, e] : m.exps)
            r = r.times(Monomial::var(k.family == from ? to : k.family, k.index, e));
        out.add_term(r, c);
    }
    return out;
}

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Coeff a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.exps.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << '*';
            os << m.to_text();
        }
    }
    return os.str();
}

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms()) {
        int da = ma.total_degree();
        if (da > max_degree) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (da + mb.total_degree() > max_degree) continue;
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

}  // namespace hookschur
