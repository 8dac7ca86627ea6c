#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookschur {

/**
 * Letter of the super alphabet {1 < 2 < ... < k < 1' < 2' < ... < l'}.
 * Every unprimed letter is smaller than every primed letter; within an
 * alphabet letters compare by value.
 */
struct SuperLetter {
    int value = 1;
    bool primed = false;

    friend std::strong_ordering operator<=>(const SuperLetter& a, const SuperLetter& b) {
        if (a.primed != b.primed)
            return a.primed ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value <=> b.value;
    }
    friend bool operator==(const SuperLetter&, const SuperLetter&) = default;
};

inline SuperLetter unprimed(int v) { return SuperLetter{v, false}; }
inline SuperLetter primed(int v) { return SuperLetter{v, true}; }

std::string to_string(const SuperLetter& a);
SuperLetter parse_letter(const std::string& text);

/** Weakly decreasing sequence of positive parts. */
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("partition part must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must weakly decrease");
        }
    }

    int length() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

/** Sequence of positive parts in arbitrary order; may be empty. */
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 1) throw std::invalid_argument("composition part must be positive");
    }

    int length() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int max_part() const {
        int m = 0;
        for (int p : parts)
            if (p > m) m = p;
        return m;
    }
    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts <=> b.parts; }
};

/** Like Composition but zero parts are allowed. */
struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("weak composition part must be nonnegative");
    }

    int length() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    /** Drops the zero parts. */
    Composition positive_parts() const {
        std::vector<int> out;
        for (int p : parts)
            if (p > 0) out.push_back(p);
        return Composition(out);
    }
    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

/** Subset of {1, ..., n-1}, kept sorted. */
struct DescentSet {
    int n = 0;
    std::vector<int> members;

    DescentSet() = default;
    DescentSet(int n_, std::vector<int> m) : n(n_), members(std::move(m)) {
        for (size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 1 || members[i] > n - 1)
                throw std::invalid_argument("descent out of range [1, n-1]");
            if (i > 0 && members[i] <= members[i - 1])
                throw std::invalid_argument("descents must strictly increase");
        }
    }

    bool has(int i) const {
        for (int d : members)
            if (d == i) return true;
        return false;
    }
    friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

Partition underlying_partition(const Composition& alpha);
Partition conjugate(const Partition& lambda);

/** (s1, s2-s1, ..., n-sk); the empty set gives (n), and n = 0 gives (). */
Composition composition_of_set(const DescentSet& s);
/** Partial sums of alpha except the last; inverse of composition_of_set. */
DescentSet set_of_composition(const Composition& alpha);

Composition concat(const Composition& a, const Composition& b);
/** (a1, ..., a_{k-1}, a_k + b1, b2, ..., bm); both operands must be nonempty. */
Composition almost_concat(const Composition& a, const Composition& b);

/** True iff length(alpha) <= length(beta) and alpha_i <= beta_i throughout. */
bool contains(const Composition& alpha, const Composition& beta);

std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);
/** All compositions whose parts rearrange to lambda. */
std::vector<Composition> rearrangements_of(const Partition& lambda);
/** All subsets of {1, ..., n-1} as sorted vectors. */
std::vector<std::vector<int>> subsets_of_range(int n);

Composition parse_composition(const std::string& text);
/** Comma-separated nonnegative parts in the given order. */
WeakComposition parse_weak_composition(const std::string& text);
std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);
/** Parses "{3,5,7}" or "3,5,7" or "{}". */
std::vector<int> parse_int_set(const std::string& text);

}  // namespace hookschur
