#include "cshuf/shuffle.hpp"

#include <algorithm>
#include <unordered_set>

namespace cshuf {

std::vector<LinearPerm> linear_shuffles(const LinearPerm& sigma,
                                        const LinearPerm& pi) {
    std::vector<LinearPerm> out;
    for_each_linear_shuffle(sigma, pi, [&](const std::vector<int>& w) {
        out.emplace_back(w);
    });
    return out;
}

bool is_circular_subsequence(const CyclicPerm& inner, const CyclicPerm& outer) {
    const auto& in = inner.rep().letters();
    const auto& ot = outer.rep().letters();
    std::unordered_set<int> outer_letters(ot.begin(), ot.end());
    for (int x : in)
        if (!outer_letters.count(x))
            throw std::invalid_argument("is_circular_subsequence: letter " +
                                        std::to_string(x) + " not in " +
                                        outer.to_string());
    const int n = static_cast<int>(ot.size());
    const int k = static_cast<int>(in.size());
    if (k > n) return false;
    // Scan the doubled outer word; one rotation of inner suffices.
    for (int start = 0; start < n; ++start) {
        int matched = 0;
        for (int j = 0; j < n && matched < k; ++j)
            if (ot[(start + j) % n] == in[matched]) ++matched;
        if (matched == k) return true;
    }
    return false;
}

std::vector<CyclicPerm> cyclic_shuffles(const CyclicPerm& csigma,
                                        const CyclicPerm& cpi) {
    if (!disjoint(csigma.rep(), cpi.rep()))
        throw std::invalid_argument("cyclic shuffle operands share letters: " +
                                    csigma.to_string() + " / " + cpi.to_string());
    // Orient so the global maximum sits in the left operand; the set is
    // symmetric in its arguments.
    const bool max_left = csigma.max_letter() > cpi.max_letter();
    const CyclicPerm& top = max_left ? csigma : cpi;
    const CyclicPerm& other = max_left ? cpi : csigma;

    const auto& top_rep = top.rep().letters();
    LinearPerm top_tail(std::vector<int>(top_rep.begin() + 1, top_rep.end()));

    // Every class has a representative of the form max . w with w a linear
    // shuffle of the tail and some rotation of the other operand; distinct
    // (rotation, shuffle) choices give distinct words.
    std::vector<CyclicPerm> out;
    for (int i : other.rep().letters()) {
        LinearPerm rotated = split(other, i);
        for_each_linear_shuffle(top_tail, rotated, [&](const std::vector<int>& w) {
            std::vector<int> rep;
            rep.reserve(w.size() + 1);
            rep.push_back(top.max_letter());
            rep.insert(rep.end(), w.begin(), w.end());
            out.emplace_back(std::move(rep));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CyclicPerm> cyclic_shuffles_oracle(const CyclicPerm& csigma,
                                               const CyclicPerm& cpi,
                                               int oracle_bound) {
    if (!disjoint(csigma.rep(), cpi.rep()))
        throw std::invalid_argument("cyclic shuffle operands share letters: " +
                                    csigma.to_string() + " / " + cpi.to_string());
    const int total = csigma.size() + cpi.size();
    if (total > oracle_bound)
        throw std::length_error("cyclic_shuffles_oracle: total length " +
                                std::to_string(total) + " exceeds bound " +
                                std::to_string(oracle_bound));
    std::vector<int> rest;
    rest.reserve(total - 1);
    int maximum = std::max(csigma.max_letter(), cpi.max_letter());
    for (int x : csigma.rep().letters())
        if (x != maximum) rest.push_back(x);
    for (int x : cpi.rep().letters())
        if (x != maximum) rest.push_back(x);
    std::sort(rest.begin(), rest.end());

    std::vector<CyclicPerm> out;
    do {
        std::vector<int> rep;
        rep.reserve(total);
        rep.push_back(maximum);
        rep.insert(rep.end(), rest.begin(), rest.end());
        CyclicPerm candidate(std::move(rep));
        if (is_circular_subsequence(csigma, candidate) &&
            is_circular_subsequence(cpi, candidate))
            out.push_back(std::move(candidate));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace cshuf
