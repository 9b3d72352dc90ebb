#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cshuf/permcore.hpp"

namespace cshuf {

namespace detail {

// Emits every interleaving of a and b into buf. Letters are distinct, so
// always recursing on the smaller available head first yields the
// interleavings in lexicographic order.
template <typename F>
void interleave_rec(const std::vector<int>& a, std::size_t ia,
                    const std::vector<int>& b, std::size_t ib,
                    std::vector<int>& buf, F&& emit) {
    if (ia == a.size() && ib == b.size()) {
        emit(static_cast<const std::vector<int>&>(buf));
        return;
    }
    bool take_a_first =
        ib == b.size() || (ia != a.size() && a[ia] < b[ib]);
    for (int round = 0; round < 2; ++round) {
        bool take_a = (round == 0) == take_a_first;
        if (take_a && ia < a.size()) {
            buf.push_back(a[ia]);
            interleave_rec(a, ia + 1, b, ib, buf, emit);
            buf.pop_back();
        } else if (!take_a && ib < b.size()) {
            buf.push_back(b[ib]);
            interleave_rec(a, ia, b, ib + 1, buf, emit);
            buf.pop_back();
        }
    }
}

}  // namespace detail

// Streams each interleaving of sigma and pi (as a raw letter vector) in
// lexicographic order, preserving the internal order of each operand.
template <typename F>
void for_each_linear_shuffle(const LinearPerm& sigma, const LinearPerm& pi,
                             F&& emit) {
    if (!disjoint(sigma, pi))
        throw std::invalid_argument("shuffle operands share letters: " +
                                    sigma.to_string() + " / " + pi.to_string());
    std::vector<int> buf;
    buf.reserve(sigma.letters().size() + pi.letters().size());
    detail::interleave_rec(sigma.letters(), 0, pi.letters(), 0, buf, emit);
}

// All interleavings of two disjoint words, in lexicographic order.
// Cardinality is binomial(m+n, n).
std::vector<LinearPerm> linear_shuffles(const LinearPerm& sigma,
                                        const LinearPerm& pi);

// True iff some rotation of outer contains inner's representative as a
// linear subsequence. Inner letters absent from outer are a domain error.
bool is_circular_subsequence(const CyclicPerm& inner, const CyclicPerm& outer);

// All cyclic permutations of the union letters having both operands as
// circular subsequences; representatives in lexicographic order.
// Cardinality is (m+n-1) * binomial(m+n-2, m-1).
std::vector<CyclicPerm> cyclic_shuffles(const CyclicPerm& csigma,
                                        const CyclicPerm& cpi);

// Independent witness: enumerates every arrangement of the non-maximal
// letters after the fixed global maximum and filters with the circular
// subsequence predicate. Total length above the bound is a resource error.
std::vector<CyclicPerm> cyclic_shuffles_oracle(const CyclicPerm& csigma,
                                               const CyclicPerm& cpi,
                                               int oracle_bound = 9);

}  // namespace cshuf
