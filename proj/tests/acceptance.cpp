// Acceptance suite: runs every exit criterion at full scale and prints one
// pass/fail line per criterion. Exit status is nonzero iff any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cshuf/shuffle.hpp"
#include "cshuf/theorems.hpp"
#include "cshuf/veritool.hpp"

using namespace cshuf;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << number << " (" << name << "): "
              << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
        res.out.append(buf, got);
    res.status = pclose(pipe);
    return res;
}

std::set<std::string> first_tokens(const std::string& text) {
    std::set<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto space = line.find(' ');
        if (!line.empty()) out.insert(line.substr(0, space));
    }
    return out;
}

std::string strip_elapsed(std::string text) {
    static const std::regex elapsed_line("[^\n]*elapsed[^\n]*\n");
    return std::regex_replace(text, elapsed_line, "");
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool sweep_clean(const std::vector<std::string>& theorems, int max_total,
                 int oracle_bound, std::string& detail, double budget_s) {
    SweepConfig cfg;
    cfg.max_total = max_total;
    cfg.oracle_bound = oracle_bound;
    cfg.theorems = theorems;
    const auto t0 = Clock::now();
    const VerificationReport report = run_sweep(cfg);
    const double elapsed = seconds_since(t0);
    if (!report.clean()) {
        detail = std::to_string(report.failures.size()) + " failing cells, first: " +
                 report.failures.front().theorem + " " +
                 report.failures.front().pair;
        return false;
    }
    if (elapsed > budget_s) {
        detail = "took " + std::to_string(elapsed) + " s, budget " +
                 std::to_string(budget_s) + " s";
        return false;
    }
    if (report.cases_checked == 0) {
        detail = "no cases checked";
        return false;
    }
    return true;
}

long long pascal_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<long long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row[k];
}

}  // namespace

int main() {
    const std::string tool = VERITOOL_BIN;

    criterion(1, "worked shuffle displays via the CLI", [&](std::string& detail) {
        auto t0 = Clock::now();
        const auto lin = run_command(tool + " shuffles --sigma 6,3 --pi 1,4");
        const auto cyc =
            run_command(tool + " shuffles --sigma 6,3 --pi 4,1 --cyclic");
        if (seconds_since(t0) > 1.0) {
            detail = "over the 1 s budget";
            return false;
        }
        const std::set<std::string> lin_expected{"6,3,1,4", "6,1,3,4", "6,1,4,3",
                                                 "1,4,6,3", "1,6,3,4", "1,6,4,3"};
        const std::set<std::string> cyc_expected{
            "[6,3,1,4]", "[6,3,4,1]", "[6,1,4,3]",
            "[6,4,1,3]", "[6,1,3,4]", "[6,4,3,1]"};
        if (first_tokens(lin.out) != lin_expected) {
            detail = "linear set mismatch: " + lin.out;
            return false;
        }
        if (first_tokens(cyc.out) != cyc_expected) {
            detail = "cyclic set mismatch: " + cyc.out;
            return false;
        }
        return lin.status == 0 && cyc.status == 0;
    });

    criterion(2, "worked statistics", [&](std::string& detail) {
        auto t0 = Clock::now();
        bool ok = cyclic_major_index(CyclicPerm({4, 1, 3, 2})) == 4;
        ok = ok && cyclic_descent_bottoms(CyclicPerm({6, 4, 1, 3})) ==
                       std::set<int>{1, 4};
        const CyclicPerm c({5, 1, 3, 4});
        ok = ok && split(c, 5) == LinearPerm({5, 1, 3, 4});
        ok = ok && split(c, 1) == LinearPerm({1, 3, 4, 5});
        ok = ok && split(c, 3) == LinearPerm({3, 4, 5, 1});
        ok = ok && split(c, 4) == LinearPerm({4, 5, 1, 3});
        if (seconds_since(t0) > 1.0) {
            detail = "over the 1 s budget";
            return false;
        }
        if (!ok) detail = "statistic mismatch";
        return ok;
    });

    criterion(3, "linear identity sweep, m+n <= 8", [&](std::string& detail) {
        return sweep_clean({"stanley"}, 8, 8, detail, 300.0);
    });

    criterion(4, "cyclic identity sweep, m+n <= 8", [&](std::string& detail) {
        return sweep_clean({"cyclic"}, 8, 8, detail, 300.0);
    });

    criterion(5, "count chain, m+n <= 8", [&](std::string& detail) {
        return sweep_clean({"agrr"}, 8, 8, detail, 300.0);
    });

    criterion(6, "bijection suite, m+n <= 7", [&](std::string& detail) {
        return sweep_clean({"bijection"}, 7, 7, detail, 300.0);
    });

    criterion(7, "oracle equivalence, m+n <= 7", [&](std::string& detail) {
        return sweep_clean({"counts"}, 7, 7, detail, 300.0);
    });

    criterion(8, "q-binomial property suite, n <= 12", [&](std::string& detail) {
        for (int n = 0; n <= 12; ++n) {
            for (int m = 0; m <= n; ++m) {
                const QPoly g = gauss_binomial(n, m);
                bool ok = g == gauss_binomial(n, n - m) &&
                          g.degree() == m * (n - m) &&
                          g.eval_at_one() == pascal_binomial(n, m);
                for (const auto& [e, c] : g.terms()) ok = ok && c > 0;
                if (m >= 1 && m <= n - 1) {
                    ok = ok && g == gauss_binomial(n - 1, m) +
                                   gauss_binomial(n - 1, m - 1).shifted(n - m);
                    ok = ok && g == gauss_binomial(n - 1, m).shifted(m) +
                                   gauss_binomial(n - 1, m - 1);
                }
                if (!ok) {
                    detail = "property fails at n=" + std::to_string(n) +
                             " m=" + std::to_string(m);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(9, "deterministic and reproducible reports", [&](std::string& detail) {
        const std::string exhaustive =
            tool + " verify --theorems all --max-total 6 --oracle-bound 6 "
                   "--format json";
        const auto a = run_command(exhaustive);
        const auto b = run_command(exhaustive);
        if (a.status != 0 || b.status != 0) {
            detail = "exhaustive verify exited nonzero";
            return false;
        }
        if (strip_elapsed(a.out) != strip_elapsed(b.out)) {
            detail = "exhaustive reports differ beyond the elapsed field";
            return false;
        }
        const std::string sampled =
            tool + " verify --theorems cyclic,agrr,bijection,counts "
                   "--max-total 10 --sample 5 --seed 7 --format json";
        const auto c = run_command(sampled);
        const auto d = run_command(sampled);
        if (c.status != 0 || d.status != 0) {
            detail = "sampled verify exited nonzero";
            return false;
        }
        if (strip_elapsed(c.out) != strip_elapsed(d.out)) {
            detail = "sampled reports differ beyond the elapsed field";
            return false;
        }
        return true;
    });

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) +
                                        " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
