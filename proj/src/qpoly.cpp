#include "cshuf/qpoly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cshuf {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("QPoly: 64-bit coefficient overflow in add");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("QPoly: 64-bit coefficient overflow in mul");
    return r;
}

}  // namespace

QPoly QPoly::constant(long long c) { return monomial(0, c); }

QPoly QPoly::monomial(int exp, long long coeff) {
    if (exp < 0) throw std::invalid_argument("QPoly: negative exponent");
    QPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

int QPoly::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

long long QPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

long long QPoly::eval_at_one() const {
    long long sum = 0;
    for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

void QPoly::add_term(int exp, long long c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    QPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term(ea + eb, checked_mul(ca, cb));
    return out;
}

QPoly QPoly::shifted(int k) const {
    QPoly out;
    for (const auto& [e, c] : terms_) {
        if (e + k < 0)
            throw std::invalid_argument("QPoly::shifted: negative exponent");
        out.terms_[e + k] = c;
    }
    return out;
}

std::vector<std::pair<int, long long>> QPoly::pairs() const {
    return {terms_.begin(), terms_.end()};
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

// Memoized Pascal recurrence; all intermediates stay in the integer ring.
QPoly gauss_rec(int n, int m, std::map<std::pair<int, int>, QPoly>& memo) {
    if (m < 0 || m > n || n < 0) return {};
    if (m == 0 || m == n) return QPoly::constant(1);
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    QPoly val = gauss_rec(n - 1, m, memo) +
                gauss_rec(n - 1, m - 1, memo).shifted(n - m);
    memo.emplace(key, val);
    return val;
}

}  // namespace

QPoly gauss_binomial(int n, int m) {
    static std::map<std::pair<int, int>, QPoly> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return gauss_rec(n, m, memo);
}

}  // namespace cshuf
