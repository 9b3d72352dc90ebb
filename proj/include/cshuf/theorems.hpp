#pragma once

#include <compare>
#include <string>

#include "cshuf/permcore.hpp"
#include "cshuf/qpoly.hpp"

namespace cshuf {

// Ordered operand pair for the cyclic identity: disjoint classes with the
// global maximum letter in csigma. Construction enforces both invariants;
// callers with the maximum on the right swap before constructing.
class CyclicShufflePair {
public:
    CyclicShufflePair(CyclicPerm csigma, CyclicPerm cpi);

    const CyclicPerm& csigma() const { return csigma_; }
    const CyclicPerm& cpi() const { return cpi_; }
    std::string to_string() const;  // "([6,3],[4,1])"

    auto operator<=>(const CyclicShufflePair&) const = default;

private:
    CyclicPerm csigma_;
    CyclicPerm cpi_;
};

// Closed form for the linear shuffle generating function:
// [m-r+s, k-r] [n-s+r, k-s] q^{maj(sigma)+maj(pi)+(k-s)(k-r)},
// with the zero convention for out-of-range Gaussian binomials.
QPoly stanley_rhs(const LinearPerm& sigma, const LinearPerm& pi, int k);

// Brute force: sum of q^{maj(alpha)} over shuffles alpha with des(alpha)=k.
QPoly shuffle_maj_gf(const LinearPerm& sigma, const LinearPerm& pi, int k);

// Count of cyclic shuffles with cyclic descent number k, by the closed
// rational formula. Computed exactly; a non-integer or negative result is
// an internal-consistency failure.
long long agrr_count(int m, int n, int r, int s, int k);

// Closed form for the cyclic shuffle generating function (two-term sum
// over letters of cpi inside/outside the cyclic descent-bottom set).
QPoly cyclic_stanley_rhs(const CyclicShufflePair& pair, int k);

// Brute force: sum of q^{maj([alpha])} over cyclic shuffles with
// cdes([alpha])=k. Orientation is not required for this form.
QPoly cyclic_shuffle_maj_gf(const CyclicPerm& csigma, const CyclicPerm& cpi,
                            int k);
QPoly cyclic_shuffle_maj_gf(const CyclicShufflePair& pair, int k);

// Image of a cyclic shuffle under the descent-preserving bijection onto
// anchored linear shuffles: strip the leading maximum from the
// representative; the anchor is the first cpi-letter of the remainder.
struct PsiImage {
    int anchor = 0;
    LinearPerm word;

    auto operator<=>(const PsiImage&) const = default;
};

PsiImage psi_forward(const CyclicPerm& alpha, const CyclicShufflePair& pair);
CyclicPerm psi_inverse(const PsiImage& image, const CyclicShufflePair& pair);

}  // namespace cshuf
