#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cshuf {

// A word of pairwise distinct positive letters. Letters need not be 1..n;
// positions are 1-indexed in every statistic.
class LinearPerm {
public:
    LinearPerm() = default;
    explicit LinearPerm(std::vector<int> letters);

    // Parses "6,3,1,4". Rejects duplicates, non-positive entries, garbage.
    static LinearPerm parse(std::string_view text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int at(int pos) const { return letters_[pos - 1]; }  // 1-indexed
    bool contains(int letter) const;

    std::string to_string() const;  // "6,3,1,4"

    auto operator<=>(const LinearPerm&) const = default;

private:
    std::vector<int> letters_;
};

// Positions i in [1, n-1] with p_i > p_{i+1}.
std::set<int> descent_set(const LinearPerm& p);

// Sum of the descent positions.
int major_index(const LinearPerm& p);

// Positions i in [1, n] with p_i > p_{i+1}, reading p_{n+1} = p_1.
// The empty word is a domain error.
std::set<int> cyclic_descent_set(const LinearPerm& p);

// Rotation class of a nonempty word, stored as the rotation that starts
// at the largest letter. Equality is representative equality.
class CyclicPerm {
public:
    explicit CyclicPerm(const LinearPerm& any_rotation);
    explicit CyclicPerm(std::vector<int> letters);

    // Parses "[6,3,1,4]"; any rotation is accepted and canonicalized.
    static CyclicPerm parse(std::string_view text);

    const LinearPerm& rep() const { return rep_; }
    int size() const { return rep_.size(); }
    bool contains(int letter) const { return rep_.contains(letter); }
    int max_letter() const { return rep_.letters().front(); }

    std::string to_string() const;  // "[6,3,1,4]"

    auto operator<=>(const CyclicPerm&) const = default;

private:
    LinearPerm rep_;
};

CyclicPerm canonicalize(const std::vector<int>& seq);

// Count of cyclic descents; identical for every rotation of the class.
int cyclic_descent_number(const CyclicPerm& cp);

// The unique rotation of cp beginning with the given letter.
LinearPerm split(const CyclicPerm& cp, int letter);

// Letters sitting immediately after a cyclic descent (circularly).
std::set<int> cyclic_descent_bottoms(const CyclicPerm& cp);

// Major index of the canonical representative.
int cyclic_major_index(const CyclicPerm& cp);

struct StatSummary {
    std::set<int> des_set;
    int des = 0;
    int maj = 0;
    std::set<int> cdes_set;
    int cdes = 0;
    std::set<int> cbd;
};

StatSummary summarize(const LinearPerm& p);
StatSummary summarize(const CyclicPerm& cp);

bool disjoint(const LinearPerm& a, const LinearPerm& b);

}  // namespace cshuf
