#include "cshuf/veritool.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cshuf/shuffle.hpp"

namespace cshuf {

namespace {

using ordered_json = nlohmann::ordered_json;

long long binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.max_total < 2)
        throw std::invalid_argument("verify: max-total must be at least 2");
    if (cfg.oracle_bound > cfg.max_total)
        throw std::invalid_argument(
            "verify: oracle-bound must not exceed max-total");
    const int hard_cap = cfg.sample_count ? 12 : 9;
    if (cfg.max_total > hard_cap)
        throw std::length_error(
            "verify: max-total " + std::to_string(cfg.max_total) +
            " exceeds the resource guard (" + std::to_string(hard_cap) +
            (cfg.sample_count ? " sampled)" : " exhaustive; use --sample)"));
    if (cfg.sample_count && *cfg.sample_count < 1)
        throw std::invalid_argument("verify: sample count must be positive");
    for (const auto& t : cfg.theorems) {
        const auto& known = all_theorems();
        if (std::find(known.begin(), known.end(), t) == known.end())
            throw std::invalid_argument("verify: unknown theorem \"" + t + "\"");
    }
    if (cfg.output_format != "json" && cfg.output_format != "tsv" &&
        cfg.output_format != "text")
        throw std::invalid_argument("verify: unknown format \"" +
                                    cfg.output_format + "\"");
}

// Lexicographic k-combinations of {1..limit}.
void for_each_combination(int limit, int k,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    while (true) {
        fn(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == limit - (k - 1 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

struct ShuffleStats {
    std::map<int, QPoly> gf_by_des;       // des -> sum q^maj
    std::map<int, long long> count_by_des;
    long long total = 0;
};

ShuffleStats linear_shuffle_stats(const LinearPerm& sigma, const LinearPerm& pi) {
    ShuffleStats st;
    for_each_linear_shuffle(sigma, pi, [&](const std::vector<int>& w) {
        int des = 0, maj = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i - 1] > w[i]) {
                ++des;
                maj += static_cast<int>(i);
            }
        st.gf_by_des[des] += QPoly::monomial(maj);
        ++st.count_by_des[des];
        ++st.total;
    });
    return st;
}

ShuffleStats cyclic_shuffle_stats(const std::vector<CyclicPerm>& classes) {
    ShuffleStats st;
    for (const CyclicPerm& alpha : classes) {
        int k = cyclic_descent_number(alpha);
        st.gf_by_des[k] += QPoly::monomial(cyclic_major_index(alpha));
        ++st.count_by_des[k];
        ++st.total;
    }
    return st;
}

class Sweep {
public:
    explicit Sweep(const SweepConfig& cfg) : cfg_(cfg) {
        for (const auto& t : cfg.theorems) selected_.insert(t);
    }

    VerificationReport run() {
        const auto t0 = std::chrono::steady_clock::now();
        report_.config = cfg_;
        for (const auto& t : cfg_.theorems) report_.rollup[t];
        if (cfg_.sample_count)
            run_sampled();
        else
            run_exhaustive();
        const auto t1 = std::chrono::steady_clock::now();
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        return std::move(report_);
    }

private:
    bool wants(const std::string& t) const { return selected_.count(t) > 0; }

    void record(const std::string& theorem, const std::string& pair, int k,
                const QPoly& expected, QPoly actual, const std::string& witness) {
        if (cfg_.inject_failure && !injected_) {
            actual += QPoly::constant(1);
            injected_ = true;
        }
        ++report_.cases_checked;
        auto& roll = report_.rollup[theorem];
        ++roll.cases;
        if (expected != actual) {
            ++roll.failures;
            report_.failures.push_back({pair, theorem, k, expected, actual, witness});
        }
    }

    void run_exhaustive() {
        for (int total = 1; total <= cfg_.max_total; ++total) {
            if (wants("stanley") || wants("counts"))
                enumerate_linear_pairs(total, [&](const LinearPerm& s,
                                                  const LinearPerm& p) {
                    check_linear_pair(s, p);
                });
            if (total >= 2 &&
                (wants("cyclic") || wants("agrr") || wants("bijection") ||
                 wants("counts")))
                enumerate_pairs(total, [&](const CyclicShufflePair& pair) {
                    check_cyclic_pair(pair);
                });
        }
    }

    void run_sampled() {
        std::mt19937_64 rng(cfg_.seed);
        const int total = cfg_.max_total;
        for (int i = 0; i < *cfg_.sample_count; ++i) {
            if (wants("stanley") || wants("counts")) {
                auto [s, p] = sample_linear_pair(rng, total);
                check_linear_pair(s, p);
            }
            if (wants("cyclic") || wants("agrr") || wants("bijection") ||
                wants("counts"))
                check_cyclic_pair(sample_cyclic_pair(rng, total));
        }
    }

    static std::vector<int> shuffled_letters(std::mt19937_64& rng, int total) {
        std::vector<int> pool(total);
        for (int i = 0; i < total; ++i) pool[i] = i + 1;
        for (int i = total - 1; i > 0; --i)
            std::swap(pool[i], pool[rng() % (i + 1)]);
        return pool;
    }

    static std::pair<LinearPerm, LinearPerm> sample_linear_pair(
        std::mt19937_64& rng, int total) {
        auto pool = shuffled_letters(rng, total);
        int m = static_cast<int>(rng() % (total + 1));
        return {LinearPerm(std::vector<int>(pool.begin(), pool.begin() + m)),
                LinearPerm(std::vector<int>(pool.begin() + m, pool.end()))};
    }

    static CyclicShufflePair sample_cyclic_pair(std::mt19937_64& rng,
                                                int total) {
        // Uniform split with the maximum forced into the left class.
        auto pool = shuffled_letters(rng, total - 1);  // letters 1..total-1
        int m = 1 + static_cast<int>(rng() % (total - 1));
        std::vector<int> sigma_rep{total};
        sigma_rep.insert(sigma_rep.end(), pool.begin(), pool.begin() + (m - 1));
        std::vector<int> pi_letters(pool.begin() + (m - 1), pool.end());
        return {CyclicPerm(std::move(sigma_rep)),
                CyclicPerm(std::move(pi_letters))};
    }

    void check_linear_pair(const LinearPerm& sigma, const LinearPerm& pi) {
        const int total = sigma.size() + pi.size();
        const std::string pair_str =
            "(" + sigma.to_string() + ";" + pi.to_string() + ")";
        const ShuffleStats st = linear_shuffle_stats(sigma, pi);
        if (wants("stanley")) {
            for (int k = 0; k <= total - 1; ++k) {
                auto it = st.gf_by_des.find(k);
                const QPoly lhs = it == st.gf_by_des.end() ? QPoly{} : it->second;
                record("stanley", pair_str, k, lhs, stanley_rhs(sigma, pi, k),
                       "lhs: brute force over shuffles; rhs: closed form");
            }
        }
        if (wants("counts")) {
            record("counts", pair_str, -1, QPoly::constant(st.total),
                   QPoly::constant(binomial(total, pi.size())),
                   "linear shuffle cardinality vs binomial(m+n, n)");
        }
    }

    void check_cyclic_pair(const CyclicShufflePair& pair) {
        const int m = pair.csigma().size(), n = pair.cpi().size();
        const int total = m + n;
        const std::string pair_str = pair.to_string();
        const std::vector<CyclicPerm> classes =
            cyclic_shuffles(pair.csigma(), pair.cpi());
        const ShuffleStats st = cyclic_shuffle_stats(classes);

        if (wants("cyclic")) {
            for (int k = 0; k <= total - 1; ++k) {
                auto it = st.gf_by_des.find(k);
                const QPoly lhs = it == st.gf_by_des.end() ? QPoly{} : it->second;
                record("cyclic", pair_str, k, lhs, cyclic_stanley_rhs(pair, k),
                       "lhs: brute force over cyclic shuffles; rhs: closed form");
            }
        }
        if (wants("agrr")) check_agrr(pair, st);
        if (wants("bijection")) check_bijection(pair, classes);
        if (wants("counts")) {
            record("counts", pair_str, -1, QPoly::constant(st.total),
                   QPoly::constant((total - 1) * binomial(total - 2, m - 1)),
                   "cyclic shuffle cardinality vs (m+n-1)*binomial(m+n-2, m-1)");
            if (total <= cfg_.oracle_bound) {
                const auto oracle =
                    cyclic_shuffles_oracle(pair.csigma(), pair.cpi(),
                                           cfg_.oracle_bound);
                record("counts", pair_str, -1,
                       QPoly::constant(static_cast<long long>(oracle.size())),
                       QPoly::constant(std::equal(classes.begin(), classes.end(),
                                                  oracle.begin(), oracle.end())
                                           ? static_cast<long long>(oracle.size())
                                           : -1),
                       "cyclic_shuffles vs arrangement-enumeration oracle (set equality)");
            }
        }
    }

    void check_agrr(const CyclicShufflePair& pair, const ShuffleStats& st) {
        const int m = pair.csigma().size(), n = pair.cpi().size();
        const int r = cyclic_descent_number(pair.csigma());
        const int s = cyclic_descent_number(pair.cpi());
        const std::string pair_str = pair.to_string();
        long long closed_sum = 0;
        for (int k = 0; k <= m + n - 1; ++k) {
            auto it = st.count_by_des.find(k);
            const long long bf = it == st.count_by_des.end() ? 0 : it->second;
            long long closed;
            try {
                closed = agrr_count(m, n, r, s, k);
            } catch (const std::logic_error& e) {
                record("agrr", pair_str, k, QPoly::constant(bf),
                       QPoly::constant(-1), e.what());
                continue;
            }
            closed_sum += closed;
            record("agrr", pair_str, k, QPoly::constant(bf),
                   QPoly::constant(closed),
                   "brute-force class count vs closed rational form");
            record("agrr", pair_str, k, QPoly::constant(bf),
                   QPoly::constant(cyclic_stanley_rhs(pair, k).eval_at_one()),
                   "brute-force class count vs cyclic closed form at q=1");
        }
        record("agrr", pair_str, -1, QPoly::constant(st.total),
               QPoly::constant(closed_sum),
               "sum over k of closed counts vs total cyclic shuffle count");
    }

    void check_bijection(const CyclicShufflePair& pair,
                         const std::vector<CyclicPerm>& classes) {
        const std::string pair_str = pair.to_string();
        long long defects = 0;
        std::ostringstream why;
        std::set<std::pair<int, std::vector<int>>> images;
        for (const CyclicPerm& alpha : classes) {
            const PsiImage img = psi_forward(alpha, pair);
            if (!images.emplace(img.anchor, img.word.letters()).second) {
                ++defects;
                why << " duplicate-image " << alpha.to_string() << ";";
            }
            const int cdes = cyclic_descent_number(alpha);
            const int cmaj = cyclic_major_index(alpha);
            const int wdes = static_cast<int>(descent_set(img.word).size());
            const int wmaj = major_index(img.word);
            if (cdes != wdes + 1) {
                ++defects;
                why << " descent-relation " << alpha.to_string() << ";";
            }
            if (cmaj != wmaj + wdes + 1) {
                ++defects;
                why << " major-relation " << alpha.to_string() << ";";
            }
            if (psi_inverse(img, pair) != alpha) {
                ++defects;
                why << " round-trip " << alpha.to_string() << ";";
            }
        }
        // Image must be exactly the union of anchored shuffle sets, and the
        // reverse round trip must land back on each image.
        std::set<std::pair<int, std::vector<int>>> expected;
        const auto& sigma_rep = pair.csigma().rep().letters();
        const LinearPerm sigma_tail(
            std::vector<int>(sigma_rep.begin() + 1, sigma_rep.end()));
        for (int i : pair.cpi().rep().letters()) {
            const LinearPerm rotated = split(pair.cpi(), i);
            for (const LinearPerm& w : linear_shuffles(sigma_tail, rotated)) {
                expected.emplace(i, w.letters());
                const PsiImage img{i, w};
                if (psi_forward(psi_inverse(img, pair), pair) != img) {
                    ++defects;
                    why << " reverse-round-trip anchor=" << i << " word="
                        << w.to_string() << ";";
                }
            }
        }
        if (images != expected) {
            ++defects;
            why << " image-set mismatch;";
        }
        record("bijection", pair_str, -1, QPoly{}, QPoly::constant(defects),
               defects == 0 ? "all round trips and descent/major relations hold"
                            : "defects:" + why.str());
    }

    SweepConfig cfg_;
    std::set<std::string> selected_;
    VerificationReport report_;
    bool injected_ = false;
};

ordered_json poly_json(const QPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e, c});
    return arr;
}

ordered_json config_json(const SweepConfig& cfg) {
    ordered_json j;
    j["max_total"] = cfg.max_total;
    j["oracle_bound"] = cfg.oracle_bound;
    j["theorems"] = cfg.theorems;
    if (cfg.sample_count)
        j["sample"] = {{"count", *cfg.sample_count}, {"seed", cfg.seed}};
    else
        j["sample"] = nullptr;
    j["format"] = cfg.output_format;
    return j;
}

std::string config_line(const SweepConfig& cfg) {
    std::ostringstream os;
    os << "max_total=" << cfg.max_total << " oracle_bound=" << cfg.oracle_bound
       << " theorems=";
    for (std::size_t i = 0; i < cfg.theorems.size(); ++i)
        os << (i ? "," : "") << cfg.theorems[i];
    if (cfg.sample_count)
        os << " sample=" << *cfg.sample_count << " seed=" << cfg.seed;
    os << " format=" << cfg.output_format;
    return os.str();
}

}  // namespace

const std::vector<std::string>& all_theorems() {
    static const std::vector<std::string> names{"stanley", "cyclic", "agrr",
                                                "bijection", "counts"};
    return names;
}

void enumerate_pairs(int total,
                     const std::function<void(const CyclicShufflePair&)>& fn) {
    if (total < 2)
        throw std::invalid_argument("enumerate_pairs: total must be at least 2");
    for (int m = 1; m <= total - 1; ++m) {
        const int n = total - m;
        // m-1 companions for the maximum letter, drawn from {1..total-1}.
        for_each_combination(total - 1, m - 1, [&](const std::vector<int>& comb) {
            std::vector<int> pi_letters;
            pi_letters.reserve(n);
            for (int x = 1; x <= total - 1; ++x)
                if (!std::binary_search(comb.begin(), comb.end(), x))
                    pi_letters.push_back(x);
            const int pi_max = pi_letters.back();
            std::vector<int> pi_rest(pi_letters.begin(), pi_letters.end() - 1);

            std::vector<int> sigma_rest = comb;
            do {
                std::vector<int> sigma_rep{total};
                sigma_rep.insert(sigma_rep.end(), sigma_rest.begin(),
                                 sigma_rest.end());
                const CyclicPerm csigma{sigma_rep};
                std::vector<int> pi_tail = pi_rest;
                std::sort(pi_tail.begin(), pi_tail.end());
                do {
                    std::vector<int> pi_rep{pi_max};
                    pi_rep.insert(pi_rep.end(), pi_tail.begin(), pi_tail.end());
                    fn(CyclicShufflePair{csigma, CyclicPerm{pi_rep}});
                } while (std::next_permutation(pi_tail.begin(), pi_tail.end()));
            } while (std::next_permutation(sigma_rest.begin(), sigma_rest.end()));
        });
    }
}

void enumerate_linear_pairs(
    int total,
    const std::function<void(const LinearPerm&, const LinearPerm&)>& fn) {
    if (total < 1)
        throw std::invalid_argument(
            "enumerate_linear_pairs: total must be at least 1");
    for (int m = 0; m <= total; ++m) {
        for_each_combination(total, m, [&](const std::vector<int>& comb) {
            std::vector<int> pi_letters;
            pi_letters.reserve(total - m);
            for (int x = 1; x <= total; ++x)
                if (!std::binary_search(comb.begin(), comb.end(), x))
                    pi_letters.push_back(x);
            std::vector<int> sigma_word = comb;
            do {
                const LinearPerm sigma(sigma_word);
                std::vector<int> pi_word = pi_letters;
                do {
                    fn(sigma, LinearPerm(pi_word));
                } while (std::next_permutation(pi_word.begin(), pi_word.end()));
            } while (std::next_permutation(sigma_word.begin(), sigma_word.end()));
        });
    }
}

VerificationReport run_sweep(const SweepConfig& config) {
    validate_config(config);
    return Sweep(config).run();
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["schema"] = 1;
    j["config"] = config_json(report.config);
    j["cases_checked"] = report.cases_checked;
    ordered_json fails = ordered_json::array();
    for (const Failure& f : report.failures) {
        ordered_json jf;
        jf["pair"] = f.pair;
        jf["theorem"] = f.theorem;
        jf["k"] = f.k;
        jf["expected"] = poly_json(f.expected);
        jf["actual"] = poly_json(f.actual);
        jf["witness"] = f.witness;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    j["elapsed_ms"] = report.elapsed_ms;
    ordered_json roll;
    for (const auto& [name, r] : report.rollup)
        roll[name] = {{"cases", r.cases}, {"failures", r.failures}};
    j["rollup"] = std::move(roll);
    return j.dump(2) + "\n";
}

std::string report_to_tsv(const VerificationReport& report) {
    std::ostringstream os;
    os << "# schema\t1\n";
    os << "# config\t" << config_line(report.config) << "\n";
    os << "# cases_checked\t" << report.cases_checked << "\n";
    for (const auto& [name, r] : report.rollup)
        os << "# rollup\t" << name << "\tcases=" << r.cases
           << "\tfailures=" << r.failures << "\n";
    os << "# elapsed_ms\t" << report.elapsed_ms << "\n";
    os << "pair\ttheorem\tk\texpected\tactual\twitness\n";
    for (const Failure& f : report.failures)
        os << f.pair << "\t" << f.theorem << "\t" << f.k << "\t"
           << f.expected.to_string() << "\t" << f.actual.to_string() << "\t"
           << f.witness << "\n";
    return os.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "schema: 1\n";
    os << "config: " << config_line(report.config) << "\n";
    os << "cases_checked: " << report.cases_checked << "\n";
    for (const auto& [name, r] : report.rollup)
        os << "rollup: " << name << " cases=" << r.cases
           << " failures=" << r.failures << "\n";
    for (const Failure& f : report.failures)
        os << "FAIL " << f.theorem << " " << f.pair << " k=" << f.k
           << " expected=" << f.expected.to_string()
           << " actual=" << f.actual.to_string() << " (" << f.witness << ")\n";
    os << "elapsed_ms: " << report.elapsed_ms << "\n";
    os << "result: " << (report.clean() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_report(const VerificationReport& report) {
    if (report.config.output_format == "json") return report_to_json(report);
    if (report.config.output_format == "tsv") return report_to_tsv(report);
    return report_to_text(report);
}

namespace {

std::string set_to_string(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int x : s) {
        if (!first) os << ",";
        first = false;
        os << x;
    }
    os << "}";
    return os.str();
}

int run_stats(const std::string& perm_text, bool cyclic) {
    if (cyclic) {
        const CyclicPerm cp = CyclicPerm::parse(
            perm_text.front() == '[' ? perm_text : "[" + perm_text + "]");
        const StatSummary s = summarize(cp);
        std::cout << "class: " << cp.to_string() << "\n"
                  << "cdes: " << s.cdes << "\n"
                  << "cmaj: " << s.maj << "\n"
                  << "cbd: " << set_to_string(s.cbd) << "\n";
    } else {
        const LinearPerm p = LinearPerm::parse(perm_text);
        const StatSummary s = summarize(p);
        std::cout << "perm: " << p.to_string() << "\n"
                  << "des_set: " << set_to_string(s.des_set) << "\n"
                  << "des: " << s.des << "\n"
                  << "maj: " << s.maj << "\n"
                  << "cdes_set: " << set_to_string(s.cdes_set) << "\n"
                  << "cdes: " << s.cdes << "\n"
                  << "cbd: " << set_to_string(s.cbd) << "\n";
    }
    return 0;
}

int run_shuffles(const std::string& sigma_text, const std::string& pi_text,
                 bool cyclic) {
    if (cyclic) {
        const CyclicPerm a = CyclicPerm::parse("[" + sigma_text + "]");
        const CyclicPerm b = CyclicPerm::parse("[" + pi_text + "]");
        for (const CyclicPerm& alpha : cyclic_shuffles(a, b))
            std::cout << alpha.to_string()
                      << " cdes=" << cyclic_descent_number(alpha)
                      << " cmaj=" << cyclic_major_index(alpha) << "\n";
    } else {
        const LinearPerm a = LinearPerm::parse(sigma_text);
        const LinearPerm b = LinearPerm::parse(pi_text);
        for (const LinearPerm& w : linear_shuffles(a, b))
            std::cout << w.to_string()
                      << " des=" << descent_set(w).size()
                      << " maj=" << major_index(w) << "\n";
    }
    return 0;
}

int run_table(const std::string& sigma_text, const std::string& pi_text,
              bool cyclic) {
    bool all_match = true;
    if (cyclic) {
        CyclicPerm a = CyclicPerm::parse("[" + sigma_text + "]");
        CyclicPerm b = CyclicPerm::parse("[" + pi_text + "]");
        if (a.max_letter() < b.max_letter()) std::swap(a, b);
        const CyclicShufflePair pair{a, b};
        const int total = a.size() + b.size();
        for (int k = 0; k <= total - 1; ++k) {
            const QPoly lhs = cyclic_shuffle_maj_gf(pair, k);
            const QPoly rhs = cyclic_stanley_rhs(pair, k);
            if (lhs.is_zero() && rhs.is_zero()) continue;
            const bool ok = lhs == rhs;
            all_match = all_match && ok;
            std::cout << "k=" << k << ": lhs = " << lhs.to_string()
                      << " | rhs = " << rhs.to_string()
                      << " | match = " << (ok ? "yes" : "NO") << "\n";
        }
    } else {
        const LinearPerm a = LinearPerm::parse(sigma_text);
        const LinearPerm b = LinearPerm::parse(pi_text);
        const int total = a.size() + b.size();
        for (int k = 0; k <= std::max(0, total - 1); ++k) {
            const QPoly lhs = shuffle_maj_gf(a, b, k);
            const QPoly rhs = stanley_rhs(a, b, k);
            if (lhs.is_zero() && rhs.is_zero() && !(total == 0 && k == 0))
                continue;
            const bool ok = lhs == rhs;
            all_match = all_match && ok;
            std::cout << "k=" << k << ": lhs = " << lhs.to_string()
                      << " | rhs = " << rhs.to_string()
                      << " | match = " << (ok ? "yes" : "NO") << "\n";
        }
    }
    return all_match ? 0 : 1;
}

std::vector<std::string> parse_theorem_list(const std::string& text) {
    if (text == "all") return all_theorems();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    if (out.empty())
        throw std::invalid_argument("verify: empty theorem list");
    return out;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Exact verification of shuffle identities for linear and "
                 "cyclic permutation statistics"};
    app.require_subcommand(1);

    std::string perm_text, sigma_text, pi_text;
    bool cyclic = false;

    auto* stats = app.add_subcommand("stats", "Print permutation statistics");
    stats->add_option("perm", perm_text, "comma-separated letters")->required();
    stats->add_flag("--cyclic", cyclic, "treat the input as a rotation class");

    auto* shuffles =
        app.add_subcommand("shuffles", "List shuffles with their statistics");
    shuffles->add_option("--sigma", sigma_text)->required();
    shuffles->add_option("--pi", pi_text)->required();
    shuffles->add_flag("--cyclic", cyclic);

    auto* table = app.add_subcommand(
        "table", "Per-k brute-force and closed-form polynomials side by side");
    table->add_option("--sigma", sigma_text)->required();
    table->add_option("--pi", pi_text)->required();
    table->add_flag("--cyclic", cyclic);

    SweepConfig cfg;
    std::string theorems_text = "all";
    int sample_count = 0;
    auto* verify =
        app.add_subcommand("verify", "Run an exhaustive verification sweep");
    verify->add_option("--theorems", theorems_text,
                       "comma list of stanley,cyclic,agrr,bijection,counts or 'all'");
    verify->add_option("--max-total", cfg.max_total, "bound on m+n");
    verify->add_option("--oracle-bound", cfg.oracle_bound,
                       "cap for the arrangement-enumeration oracle");
    verify->add_option("--sample", sample_count,
                       "sampled pairs at m+n = max-total instead of exhaustive");
    verify->add_option("--seed", cfg.seed, "seed for sampled mode");
    verify->add_option("--format", cfg.output_format, "json | tsv | text");
    verify->add_flag("--inject-failure", cfg.inject_failure)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (stats->parsed()) return run_stats(perm_text, cyclic);
        if (shuffles->parsed()) return run_shuffles(sigma_text, pi_text, cyclic);
        if (table->parsed()) return run_table(sigma_text, pi_text, cyclic);
        // verify
        cfg.theorems = parse_theorem_list(theorems_text);
        if (sample_count > 0) cfg.sample_count = sample_count;
        cfg.oracle_bound = std::min(cfg.oracle_bound, cfg.max_total);
        const VerificationReport report = run_sweep(cfg);
        std::cout << render_report(report);
        return report.clean() ? 0 : 1;
    } catch (const std::length_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        const std::string what = e.what();
        return what.find("share letters") != std::string::npos ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace cshuf
