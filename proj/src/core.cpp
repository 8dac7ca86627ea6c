#include "hookschur/core.hpp"

#include <algorithm>
#include <functional>

namespace hookschur {

std::string to_string(const SuperLetter& a) {
    std::string s = std::to_string(a.value);
    if (a.primed) s += '\'';
    return s;
}

SuperLetter parse_letter(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty letter token");
    std::string body = text;
    bool prime = false;
    if (body.back() == '\'') {
        prime = true;
        body.pop_back();
    }
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad letter token '" + text + "'");
    int v = std::stoi(body);
    if (v < 1) throw std::invalid_argument("letter value must be positive: '" + text + "'");
    return SuperLetter{v, prime};
}

Partition underlying_partition(const Composition& alpha) {
    std::vector<int> p = alpha.parts;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(p);
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    int cols = lambda.parts.empty() ? 0 : lambda.parts[0];
    for (int j = 1; j <= cols; ++j) {
        int c = 0;
        for (int p : lambda.parts)
            if (p >= j) ++c;
        out.push_back(c);
    }
    return Partition(out);
}

Composition composition_of_set(const DescentSet& s) {
    if (s.n == 0) return Composition();
    std::vector<int> parts;
    int prev = 0;
    for (int d : s.members) {
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(s.n - prev);
    return Composition(parts);
}

DescentSet set_of_composition(const Composition& alpha) {
    std::vector<int> members;
    int acc = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha.parts[i];
        members.push_back(acc);
    }
    return DescentSet(alpha.size(), members);
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    return Composition(parts);
}

Composition almost_concat(const Composition& a, const Composition& b) {
    if (a.parts.empty() || b.parts.empty())
        throw std::invalid_argument("almost_concat requires nonempty operands");
    std::vector<int> parts = a.parts;
    parts.back() += b.parts.front();
    parts.insert(parts.end(), b.parts.begin() + 1, b.parts.end());
    return Composition(parts);
}

bool contains(const Composition& alpha, const Composition& beta) {
    if (alpha.length() > beta.length()) return false;
    for (int i = 0; i < alpha.length(); ++i)
        if (alpha.parts[i] > beta.parts[i]) return false;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> rearrangements_of(const Partition& lambda) {
    std::vector<int> parts = lambda.parts;
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    if (parts.empty()) {
        out.emplace_back();
        return out;
    }
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

std::vector<std::vector<int>> subsets_of_range(int n) {
    int m = n - 1;
    if (m < 0) m = 0;
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= m; ++i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

static std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad integer token '" + tok + "'");
        out.push_back(std::stoi(tok));
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else {
            tok += c;
        }
    }
    flush();
    return out;
}

Composition parse_composition(const std::string& text) {
    return Composition(parse_int_list(text));
}

WeakComposition parse_weak_composition(const std::string& text) {
    return WeakComposition(parse_int_list(text));
}

static std::string join(const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

std::string to_string(const Composition& alpha) { return join(alpha.parts); }
std::string to_string(const Partition& lambda) { return join(lambda.parts); }

std::vector<int> parse_int_set(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw std::invalid_argument("unbalanced braces in set '" + text + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> v = parse_int_list(body);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace hookschur
