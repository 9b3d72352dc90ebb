#include "cshuf/theorems.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cshuf/shuffle.hpp"

namespace cshuf {

namespace {

// Product of two Gaussian binomials, memoized. The identity sweeps hit the
// same handful of factor pairs millions of times.
const QPoly& gauss_product(int n1, int m1, int n2, int m2) {
    static std::map<std::array<int, 4>, QPoly> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    std::array<int, 4> key{n1, m1, n2, m2};
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, gauss_binomial(n1, m1) * gauss_binomial(n2, m2))
                 .first;
    return it->second;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

}  // namespace

CyclicShufflePair::CyclicShufflePair(CyclicPerm csigma, CyclicPerm cpi)
    : csigma_(std::move(csigma)), cpi_(std::move(cpi)) {
    if (!disjoint(csigma_.rep(), cpi_.rep()))
        throw std::invalid_argument("CyclicShufflePair: operands share letters: " +
                                    to_string());
    if (csigma_.max_letter() < cpi_.max_letter())
        throw std::invalid_argument(
            "CyclicShufflePair: largest letter must lie in the first operand; "
            "swap the operands: " + to_string());
}

std::string CyclicShufflePair::to_string() const {
    return "(" + csigma_.to_string() + "," + cpi_.to_string() + ")";
}

QPoly stanley_rhs(const LinearPerm& sigma, const LinearPerm& pi, int k) {
    if (!disjoint(sigma, pi))
        throw std::invalid_argument("stanley_rhs: operands share letters");
    const int m = sigma.size(), n = pi.size();
    const int r = static_cast<int>(descent_set(sigma).size());
    const int s = static_cast<int>(descent_set(pi).size());
    const QPoly& prod = gauss_product(m - r + s, k - r, n - s + r, k - s);
    if (prod.is_zero()) return {};
    // A nonzero product forces k >= r and k >= s, so the exponent is
    // nonnegative.
    return prod.shifted(major_index(sigma) + major_index(pi) +
                        (k - s) * (k - r));
}

QPoly shuffle_maj_gf(const LinearPerm& sigma, const LinearPerm& pi, int k) {
    QPoly out;
    for_each_linear_shuffle(sigma, pi, [&](const std::vector<int>& w) {
        int des = 0, maj = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i - 1] > w[i]) {
                ++des;
                maj += static_cast<int>(i);
            }
        if (des == k) out += QPoly::monomial(maj);
    });
    return out;
}

long long agrr_count(int m, int n, int r, int s, int k) {
    const bool r_ok = (0 <= r && r < m) || (m == 1 && r == 0);
    const bool s_ok = (0 <= s && s < n) || (n == 1 && s == 0);
    if (!r_ok || !s_ok)
        throw std::invalid_argument("agrr_count: statistics out of range");
    const long long den =
        static_cast<long long>(m - r + s) * (n - s + r);
    if (den == 0)
        throw std::invalid_argument("agrr_count: zero denominator");
    const long long num =
        (static_cast<long long>(k) * (m - r) * (n - s) +
         static_cast<long long>(m + n - k) * r * s) *
        binomial(m - r + s, k - r) * binomial(n - s + r, k - s);
    if (num % den != 0)
        throw std::logic_error("agrr_count: non-integer value for m=" +
                               std::to_string(m) + " n=" + std::to_string(n) +
                               " r=" + std::to_string(r) + " s=" +
                               std::to_string(s) + " k=" + std::to_string(k));
    const long long value = num / den;
    if (value < 0)
        throw std::logic_error("agrr_count: negative value");
    return value;
}

QPoly cyclic_stanley_rhs(const CyclicShufflePair& pair, int k) {
    const int m = pair.csigma().size(), n = pair.cpi().size();
    const int r = cyclic_descent_number(pair.csigma());
    const int s = cyclic_descent_number(pair.cpi());
    const int maj_sigma = cyclic_major_index(pair.csigma());
    const std::set<int> cbd = cyclic_descent_bottoms(pair.cpi());

    QPoly bottoms_sum, others_sum;
    for (int i : pair.cpi().rep().letters()) {
        QPoly term = QPoly::monomial(major_index(split(pair.cpi(), i)));
        (cbd.count(i) ? bottoms_sum : others_sum) += term;
    }

    QPoly out;
    const QPoly& p1 = gauss_product(m - r + s, k - r, n - s + r - 1, k - s - 1);
    if (!p1.is_zero() && !others_sum.is_zero())
        out += (p1 * others_sum).shifted(maj_sigma + (k - s) * (k - r));
    const QPoly& p2 = gauss_product(m - r + s - 1, k - r, n - s + r, k - s);
    if (!p2.is_zero() && !bottoms_sum.is_zero())
        out += (p2 * bottoms_sum).shifted(maj_sigma + (k - s + 1) * (k - r));
    return out;
}

QPoly cyclic_shuffle_maj_gf(const CyclicPerm& csigma, const CyclicPerm& cpi,
                            int k) {
    QPoly out;
    for (const CyclicPerm& alpha : cyclic_shuffles(csigma, cpi))
        if (cyclic_descent_number(alpha) == k)
            out += QPoly::monomial(cyclic_major_index(alpha));
    return out;
}

QPoly cyclic_shuffle_maj_gf(const CyclicShufflePair& pair, int k) {
    return cyclic_shuffle_maj_gf(pair.csigma(), pair.cpi(), k);
}

PsiImage psi_forward(const CyclicPerm& alpha, const CyclicShufflePair& pair) {
    if (alpha.size() != pair.csigma().size() + pair.cpi().size() ||
        !is_circular_subsequence(pair.csigma(), alpha) ||
        !is_circular_subsequence(pair.cpi(), alpha))
        throw std::invalid_argument("psi_forward: " + alpha.to_string() +
                                    " is not a cyclic shuffle of " +
                                    pair.to_string());
    const auto& rep = alpha.rep().letters();
    LinearPerm word(std::vector<int>(rep.begin() + 1, rep.end()));
    for (int x : word.letters())
        if (pair.cpi().contains(x)) return PsiImage{x, std::move(word)};
    throw std::invalid_argument("psi_forward: no letter of " +
                                pair.cpi().to_string() + " in " +
                                alpha.to_string());
}

CyclicPerm psi_inverse(const PsiImage& image, const CyclicShufflePair& pair) {
    if (!pair.cpi().contains(image.anchor))
        throw std::invalid_argument("psi_inverse: anchor " +
                                    std::to_string(image.anchor) +
                                    " is not a letter of " +
                                    pair.cpi().to_string());
    const auto& sigma_rep = pair.csigma().rep().letters();
    const std::vector<int> sigma_tail(sigma_rep.begin() + 1, sigma_rep.end());
    const std::vector<int> pi_part = split(pair.cpi(), image.anchor).letters();

    // The word must restrict to the sigma tail and to the anchored rotation
    // of cpi; that is exactly membership in their shuffle set.
    std::vector<int> got_sigma, got_pi;
    for (int x : image.word.letters()) {
        if (pair.csigma().contains(x))
            got_sigma.push_back(x);
        else if (pair.cpi().contains(x))
            got_pi.push_back(x);
        else
            throw std::invalid_argument("psi_inverse: foreign letter " +
                                        std::to_string(x));
    }
    if (got_sigma != sigma_tail || got_pi != pi_part)
        throw std::invalid_argument(
            "psi_inverse: word " + image.word.to_string() +
            " is not a shuffle for anchor " + std::to_string(image.anchor));

    std::vector<int> rep;
    rep.reserve(image.word.size() + 1);
    rep.push_back(pair.csigma().max_letter());
    rep.insert(rep.end(), image.word.letters().begin(),
               image.word.letters().end());
    return CyclicPerm(std::move(rep));
}

}  // namespace cshuf
