/*******************************************************************************
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *******************************************************************************/

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "abelwords/constructions.hpp"
#include "abelwords/counting.hpp"
#include "abelwords/numtheory.hpp"
#include "abelwords/primitivity.hpp"
#include "abelwords/relations.hpp"
#include "abelwords/roots.hpp"
#include "abelwords/word.hpp"
#include "support.hpp"

namespace {

using namespace abelwords;
namespace brute = abelwords::testing::brute;
using abelwords::testing::all_words;
using counting::BigInt;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Report {
public:
    void fail(const std::string& what) {
        if (outcome_.ok) outcome_.detail = what;
        outcome_.ok = false;
    }
    void note(const std::string& what) {
        if (outcome_.ok) outcome_.detail = what;
    }
    [[nodiscard]] const Outcome& outcome() const { return outcome_; }

private:
    Outcome outcome_;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const BigInt& v) { return v.str(); }

// Published psi_a values, indexed by alphabet size then length.
const std::map<unsigned, std::map<std::uint64_t, BigInt>>& published() {
    static const auto table = [] {
        std::map<unsigned, std::map<std::uint64_t, BigInt>> t;
        const std::vector<std::uint64_t> k2 = {2,     2,     6,     10,     30,     36,    126,
                                               186,   456,   740,   2046,   2972,   8190,  12824,
                                               30030, 52666, 131070, 202392, 524286, 859180};
        const std::vector<std::uint64_t> k3 = {3,       6,        24,        66,       240,
                                               612,     2184,     5922,      19302,    54300,
                                               177144,  490488,   1594320,   4509750,  14227920,
                                               40888962, 129140160, 368252856, 1162261464};
        const std::vector<std::uint64_t> k4 = {4,      12,      60,       228,      1020,
                                               3792,   16380,   62820,    260952,   1016880,
                                               4194300, 16354320, 67108860, 263483136};
        const std::vector<std::uint64_t> k5 = {5,       20,       120,       580,       3120,
                                               15000,   78120,    382740,    1950420,   9637400,
                                               48828120, 241776440, 1220703120};
        for (std::size_t i = 0; i < k2.size(); ++i) t[2][i + 1] = k2[i];
        for (std::size_t i = 0; i < k3.size(); ++i) t[3][i + 1] = k3[i];
        for (std::size_t i = 0; i < k4.size(); ++i) t[4][i + 1] = k4[i];
        for (std::size_t i = 0; i < k5.size(); ++i) t[5][i + 1] = k5[i];
        t[4][17] = BigInt("17179869180");
        t[4][19] = BigInt("274877906940");
        t[5][17] = BigInt("762939453120");
        t[5][19] = BigInt("19073486328120");
        return t;
    }();
    return table;
}

Word make_word(const std::vector<Letter>& letters, std::size_t k) { return Word(letters, k); }

void psi_a_tables(Report& report) {
    const std::vector<std::pair<unsigned, std::uint64_t>> ranges = {{2, 20}, {3, 13}, {4, 12}, {5, 9}};
    const auto start = Clock::now();
    std::size_t cells = 0;
    for (const auto& [k, max_n] : ranges) {
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            const BigInt got = counting::psi_a(k, n);
            const BigInt& want = published().at(k).at(n);
            ++cells;
            if (got != want) {
                report.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": got " + str(got) +
                            ", expected " + str(want));
            }
        }
    }
    std::ostringstream os;
    os << cells << " cells enumerated in " << seconds_since(start) << " s";
    report.note(os.str());
}

void prime_closed_form(Report& report) {
    std::size_t cells = 0;
    for (const auto& [k, column] : published()) {
        for (const auto& [n, want] : column) {
            if (!numtheory::is_prime(n)) continue;
            counting::EnumerationOptions tiny;
            tiny.budget = 0;  // forbids enumeration
            const auto row = counting::count_row(k, n, tiny);
            const BigInt closed = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n)) - k;
            ++cells;
            if (row.psi_a != want || closed != want || row.delta != 0) {
                report.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": got " +
                            str(row.psi_a) + ", expected " + str(want));
            }
        }
    }
    report.note(std::to_string(cells) + " prime cells");
}

void decider_agreement(Report& report) {
    const auto start = Clock::now();
    std::size_t words = 0;
    auto sweep = [&](std::size_t k, std::size_t max_n) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            LinearDecider linear(n);
            all_words(k, n, [&](const std::vector<Letter>& letters) {
                const WordView w{letters, k};
                const bool truth = brute::is_a_primitive(letters, k);
                const auto oracle = is_a_primitive_oracle(w);
                const auto fast = is_a_primitive(w);
                const auto lin = linear(w);
                ++words;
                if (oracle.is_a_primitive != truth || fast.is_a_primitive != truth ||
                    lin.is_a_primitive != truth || is_a_primitive_linear(w).is_a_primitive != truth) {
                    report.fail("disagreement on k=" + std::to_string(k) + " word " +
                                make_word(letters, k).to_string());
                }
            });
        }
    };
    sweep(2, 16);
    sweep(3, 9);
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) report.fail("took " + std::to_string(elapsed) + " s");
    std::ostringstream os;
    os << words << " words, " << elapsed << " s";
    report.note(os.str());
}

void delta_prime_powers(Report& report) {
    struct Case {
        unsigned k;
        std::uint64_t p;
        unsigned r;
    };
    const std::vector<Case> cases = {{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 2, 2},
                                     {2, 3, 2}, {3, 3, 2}, {4, 2, 2}};
    std::ostringstream os;
    for (const auto& c : cases) {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < c.r; ++i) n *= c.p;
        const BigInt closed = counting::delta_prime_power(c.k, c.p, c.r);
        const BigInt enumerated = counting::psi(c.k, n) - counting::psi_a(c.k, n);
        const BigInt from_table = counting::psi(c.k, n) - published().at(c.k).at(n);
        if (closed != enumerated || closed != from_table) {
            report.fail("(k=" + std::to_string(c.k) + ", n=" + std::to_string(n) + "): closed " +
                        str(closed) + ", enumerated " + str(enumerated));
        }
        os << "D" << c.k << "(" << n << ")=" << closed << " ";
    }
    report.note(os.str());
}

void root_multiplicity(Report& report) {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11};
    for (std::uint64_t n = 2; n <= 5; ++n) {
        const auto w = multiroot_word(n);
        std::vector<std::size_t> expected;
        for (std::uint64_t m = 0; m < n; ++m) expected.push_back(2 * primes[m]);
        const auto profile = root_profile(w);
        if (profile.a_primitive_root_lengths != expected ||
            count_distinct_a_primitive_roots(w) != n) {
            report.fail("multiroot n=" + std::to_string(n));
        }
    }
    for (std::uint64_t n = 2; n <= 200; ++n) {
        const auto w = antichain_word(n);
        const auto profile = root_profile(w);
        const auto middle = numtheory::middle_antichain(n);
        const auto& lengths = profile.a_primitive_root_lengths;
        if (count_distinct_a_primitive_roots(w) < middle.size()) {
            report.fail("antichain n=" + std::to_string(n) + ": too few roots");
        }
        for (const auto t : middle) {
            if (std::find(lengths.begin(), lengths.end(), 2 * t) == lengths.end()) {
                report.fail("antichain n=" + std::to_string(n) + ": missing root length " +
                            std::to_string(2 * t));
            }
        }
    }
    const std::string z30 = "aabbababababaabbababaabbaabbababaabbaabbababaabbababababaabb";
    if (antichain_word(30).to_string() != z30) report.fail("z_30 differs from the published word");
    report.note("multiroot n=2..5, antichain n=2..200, z_30 exact");
}

void root_length_properties(Report& report) {
    std::size_t words = 0;
    std::size_t violations = 0;
    auto violate = [&](const std::string& what) {
        ++violations;
        report.fail(what);
    };
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto divs = brute::divisors(n);
        const std::size_t s_n = numtheory::middle_antichain(n).size();
        all_words(2, n, [&](const std::vector<Letter>& letters) {
            ++words;
            const WordView w{letters, 2};
            const auto profile = root_profile(w);
            std::vector<std::uint64_t> lengths(profile.a_primitive_root_lengths.begin(),
                                               profile.a_primitive_root_lengths.end());
            const auto text = make_word(letters, 2).to_string();
            if (!numtheory::is_division_free(lengths)) violate("not division-free: " + text);
            for (std::size_t i = 0; i < lengths.size(); ++i) {
                for (std::size_t j = i + 1; j < lengths.size(); ++j) {
                    if (std::gcd(lengths[i], lengths[j]) < 2) violate("coprime root lengths: " + text);
                }
            }
            if (count_distinct_a_primitive_roots(w) > s_n) violate("too many roots: " + text);
            for (const auto d : divs) {
                if (!brute::has_root(letters, d, 2)) continue;
                for (const auto e : divs) {
                    if (e % d == 0 && !has_a_root_of_length(w, e)) violate("not upward closed: " + text);
                }
            }
        });
    }
    report.note(std::to_string(words) + " words, " + std::to_string(violations) + " violations");
}

void commutation_witnesses(Report& report) {
    std::size_t checked = 0;
    std::size_t witnesses = 0;
    for (std::size_t total = 2; total <= 12; ++total) {
        for (std::size_t lu = 1; lu < total; ++lu) {
            const std::size_t lx = total - lu;
            all_words(2, lu, [&](const std::vector<Letter>& ul) {
                const Word u(ul, 2);
                all_words(2, lx, [&](const std::vector<Letter>& xl) {
                    const Word x(xl, 2);
                    const Word ux = concat(u, x);
                    const Word xu = concat(x, u);
                    for (std::size_t n = 1; n <= total; ++n) {
                        if (total % n != 0) continue;
                        ++checked;
                        const bool related = sim_n(ux, xu, n);
                        const auto witness = commute_check(u, x, n);
                        if (witness.has_value() != related) {
                            report.fail("u=" + u.to_string() + " x=" + x.to_string() +
                                        " n=" + std::to_string(n));
                        } else if (witness) {
                            ++witnesses;
                            const auto problem = witness_violation(u, x, n, *witness);
                            if (!problem.empty()) report.fail("invalid witness: " + problem);
                        }
                    }
                });
            });
        }
    }
    const auto example = commute_check(Word::from_string("cbabc"), Word::from_string("abca"), 3);
    if (!example) report.fail("cbabc/abca has no witness");
    const Word baa_a = Word::from_string("abaa");
    const Word a_baa = Word::from_string("baaa");
    if (sim_n(baa_a, a_baa, 2) || !simeq_n(baa_a, a_baa, 2)) report.fail("abaa/baaa relations");
    if (commute_check(Word::from_string("baa"), Word::from_string("a", 2), 2)) {
        report.fail("baa/a has a witness");
    }
    report.note(std::to_string(checked) + " (u,x,n) triples, " + std::to_string(witnesses) +
                " witnesses");
}

double mean_linear_seconds(const Word& w, int runs) {
    double total = 0;
    for (int i = 0; i < runs; ++i) {
        const auto start = Clock::now();
        const auto verdict = is_a_primitive_linear(w);
        total += seconds_since(start);
        if (verdict.is_a_primitive) throw std::logic_error("unary word reported A-primitive");
    }
    return total / runs;
}

void performance(Report& report) {
    const Word big(std::vector<Letter>(10'000'000, 0), 2);
    mean_linear_seconds(big, 1);
    const double big_time = mean_linear_seconds(big, 1);
    if (big_time >= 2.0) report.fail("10^7 letters took " + std::to_string(big_time) + " s");

    constexpr int kRuns = 5;
    std::vector<Word> words;
    for (const std::size_t n : {std::size_t{1} << 20, std::size_t{1} << 21, std::size_t{1} << 22}) {
        words.emplace_back(std::vector<Letter>(n, 0), 2);
        mean_linear_seconds(words.back(), 1);
    }
    // Sizes are interleaved within each run so drift affects all of them alike.
    std::vector<double> times(words.size(), 0.0);
    for (int run = 0; run < kRuns; ++run) {
        for (std::size_t i = 0; i < words.size(); ++i) times[i] += mean_linear_seconds(words[i], 1) / kRuns;
    }
    std::ostringstream os;
    os << "10^7: " << big_time << " s; ratios";
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double ratio = times[i] / times[i - 1];
        os << " " << ratio;
        if (ratio < 1.5 || ratio > 3.0) report.fail("time ratio " + std::to_string(ratio));
    }
    report.note(os.str());
}

void number_theory(Report& report) {
    constexpr std::uint64_t kLimit = 1'000'000;
    // Smallest-prime-factor sieve as an independent source of omega and gpf.
    std::vector<std::uint32_t> spf(kLimit + 1, 0);
    for (std::uint64_t i = 2; i <= kLimit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= kLimit; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    for (std::uint64_t n = 2; n <= kLimit; ++n) {
        std::uint64_t m = n;
        std::uint64_t omega = 0;
        std::uint64_t gpf = 0;
        while (m > 1) {
            const std::uint64_t p = spf[m];
            ++omega;
            gpf = p;
            while (m % p == 0) m /= p;
        }
        const auto a = numtheory::arith(n);
        if (a.omega != omega || a.gpf != gpf) report.fail("arith mismatch at n=" + std::to_string(n));
        if (3 * omega > 2 * gpf) report.fail("omega/gpf > 2/3 at n=" + std::to_string(n));
    }
    std::size_t tested = 0;
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        const auto divs = brute::divisors(n);
        if (divs.size() > 20) continue;
        ++tested;
        const auto middle = numtheory::middle_antichain(n);
        const bool divides = std::all_of(middle.begin(), middle.end(),
                                         [n](std::uint64_t d) { return n % d == 0; });
        if (!divides || !numtheory::is_division_free(middle) ||
            middle.size() != brute::max_antichain_size(divs)) {
            report.fail("middle antichain not maximal at n=" + std::to_string(n));
        }
    }
    report.note("n <= 10^6 bounded; " + std::to_string(tested) + " antichains maximal");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
        {"psi_a table by enumeration", psi_a_tables},
        {"prime lengths by closed form", prime_closed_form},
        {"decider agreement", decider_agreement},
        {"delta at prime powers", delta_prime_powers},
        {"root multiplicity constructions", root_multiplicity},
        {"root length properties", root_length_properties},
        {"commutation witnesses", commutation_witnesses},
        {"linear decider scaling", performance},
        {"number theory bounds", number_theory},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Report report;
        try {
            criteria[i].second(report);
        } catch (const std::exception& e) {
            report.fail(std::string("exception: ") + e.what());
        }
        const auto& outcome = report.outcome();
        if (!outcome.ok) ++failures;
        std::printf("%s  %zu  %s: %s\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
