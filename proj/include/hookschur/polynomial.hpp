#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hookschur {

using Coeff = boost::multiprecision::cpp_int;

// Variable families: x pairs with s, y with t in the Cauchy products.
enum class VarFamily { x, y, s, t };

char family_char(VarFamily f);
VarFamily parse_family(char c);

struct VarKey {
    VarFamily family = VarFamily::x;
    int index = 1;  // 1-based
    auto operator<=>(const VarKey&) const = default;
};

struct Monomial {
    // Sorted by VarKey with positive exponents.
    std::vector<std::pair<VarKey, int>> exps;

    int total_degree() const;
    int degree_in(VarFamily f) const;
    Monomial times(const Monomial& other) const;
    std::string to_text() const;

    static Monomial one();
    static Monomial var(VarFamily f, int index, int exp = 1);

    bool operator==(const Monomial&) const = default;
};

// Rendering order: lower total degree first; within a degree, walk variables
// in family order x, y, s, t with smaller index first, and at the first
// exponent difference the monomial with the larger exponent comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Coeff, MonomialOrder>;

    Polynomial() = default;

    static Polynomial zero() { return {}; }
    static Polynomial one();
    static Polynomial constant(const Coeff& c);
    static Polynomial variable(VarFamily f, int index);
    static Polynomial term(const Monomial& m, const Coeff& c);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    Coeff coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Coeff& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

    Polynomial truncated(int max_degree) const;
    // Sets every variable of the family to zero (keeps terms free of it).
    Polynomial without_family(VarFamily f) const;
    Polynomial renamed(VarFamily from, VarFamily to) const;

    std::string to_text() const;

private:
    TermMap terms_;
};

// Product discarding every term of total degree above max_degree.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

}  // namespace hookschur
