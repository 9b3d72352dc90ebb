#include "cshuf/permcore.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cshuf {

namespace {

void require_valid_letters(const std::vector<int>& letters) {
    std::unordered_set<int> seen;
    for (int x : letters) {
        if (x <= 0)
            throw std::invalid_argument(
                "permutation letters must be positive, got " + std::to_string(x));
        if (!seen.insert(x).second)
            throw std::invalid_argument(
                "permutation letters must be distinct, repeated " + std::to_string(x));
    }
}

std::string join_commas(const std::vector<int>& letters) {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ",";
        os << letters[i];
    }
    return os.str();
}

}  // namespace

LinearPerm::LinearPerm(std::vector<int> letters) : letters_(std::move(letters)) {
    require_valid_letters(letters_);
}

LinearPerm LinearPerm::parse(std::string_view text) {
    std::vector<int> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw std::invalid_argument("malformed permutation literal: \"" +
                                        std::string(text) + "\"");
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("malformed permutation literal: \"" +
                                        std::string(text) + "\"");
    }
    return LinearPerm(std::move(letters));
}

bool LinearPerm::contains(int letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

std::string LinearPerm::to_string() const { return join_commas(letters_); }

std::set<int> descent_set(const LinearPerm& p) {
    std::set<int> out;
    const auto& w = p.letters();
    for (int i = 1; i + 1 <= p.size(); ++i)
        if (w[i - 1] > w[i]) out.insert(i);
    return out;
}

int major_index(const LinearPerm& p) {
    int sum = 0;
    for (int i : descent_set(p)) sum += i;
    return sum;
}

std::set<int> cyclic_descent_set(const LinearPerm& p) {
    if (p.empty())
        throw std::invalid_argument("cyclic_descent_set: empty permutation");
    std::set<int> out = descent_set(p);
    const auto& w = p.letters();
    if (w.back() > w.front()) out.insert(p.size());
    return out;
}

CyclicPerm::CyclicPerm(const LinearPerm& any_rotation) {
    if (any_rotation.empty())
        throw std::invalid_argument("CyclicPerm: empty rotation class");
    const auto& w = any_rotation.letters();
    auto max_it = std::max_element(w.begin(), w.end());
    std::vector<int> rep(max_it, w.end());
    rep.insert(rep.end(), w.begin(), max_it);
    rep_ = LinearPerm(std::move(rep));
}

CyclicPerm::CyclicPerm(std::vector<int> letters)
    : CyclicPerm(LinearPerm(std::move(letters))) {}

CyclicPerm CyclicPerm::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed cyclic literal: \"" +
                                    std::string(text) + "\" (expected [a,b,...])");
    return CyclicPerm(LinearPerm::parse(text.substr(1, text.size() - 2)));
}

std::string CyclicPerm::to_string() const {
    return "[" + rep_.to_string() + "]";
}

CyclicPerm canonicalize(const std::vector<int>& seq) { return CyclicPerm(seq); }

int cyclic_descent_number(const CyclicPerm& cp) {
    return static_cast<int>(cyclic_descent_set(cp.rep()).size());
}

LinearPerm split(const CyclicPerm& cp, int letter) {
    const auto& w = cp.rep().letters();
    auto it = std::find(w.begin(), w.end(), letter);
    if (it == w.end())
        throw std::invalid_argument("split: letter " + std::to_string(letter) +
                                    " is not in " + cp.to_string());
    std::vector<int> out(it, w.end());
    out.insert(out.end(), w.begin(), it);
    return LinearPerm(std::move(out));
}

std::set<int> cyclic_descent_bottoms(const CyclicPerm& cp) {
    std::set<int> out;
    const auto& w = cp.rep().letters();
    int n = cp.size();
    for (int i = 0; i < n; ++i) {
        int next = w[(i + 1) % n];
        if (w[i] > next) out.insert(next);
    }
    return out;
}

int cyclic_major_index(const CyclicPerm& cp) { return major_index(cp.rep()); }

StatSummary summarize(const LinearPerm& p) {
    StatSummary s;
    s.des_set = descent_set(p);
    s.des = static_cast<int>(s.des_set.size());
    s.maj = major_index(p);
    if (!p.empty()) {
        s.cdes_set = cyclic_descent_set(p);
        s.cdes = static_cast<int>(s.cdes_set.size());
        s.cbd = cyclic_descent_bottoms(CyclicPerm(p));
    }
    return s;
}

StatSummary summarize(const CyclicPerm& cp) {
    StatSummary s = summarize(cp.rep());
    s.cbd = cyclic_descent_bottoms(cp);
    return s;
}

bool disjoint(const LinearPerm& a, const LinearPerm& b) {
    std::unordered_set<int> seen(a.letters().begin(), a.letters().end());
    for (int x : b.letters())
        if (seen.count(x)) return false;
    return true;
}

}  // namespace cshuf
