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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelwords/constructions.hpp"
#include "abelwords/counting.hpp"
#include "abelwords/error.hpp"
#include "abelwords/numtheory.hpp"
#include "abelwords/primitivity.hpp"
#include "abelwords/relations.hpp"
#include "abelwords/roots.hpp"

namespace abelwords::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum class Format { Text, Tsv, Json };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"tsv", Format::Tsv}, {"json", Format::Json}};

void add_format_option(CLI::App& cmd, Format& format) {
    cmd.add_option("--format", format, "Output format: text, tsv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

// Counts that fit in 64 bits are JSON numbers; larger ones are decimal strings.
json big_to_json(const counting::BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return value.convert_to<std::uint64_t>();
    }
    return value.str();
}

std::string read_word_argument(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::erase_if(text, [](unsigned char c) { return std::isspace(c) != 0; });
    return text;
}

Word parse_word(const std::string& text, std::optional<std::size_t> k) {
    if (text.empty()) throw DomainError("word must be nonempty");
    return Word::from_string(text, k);
}

std::string alphabet_label(std::size_t k) {
    std::string label = std::to_string(k) + " (a";
    if (k > 1) label += std::string("..") + static_cast<char>('a' + k - 1);
    return label + ")";
}

std::string render_part(const Word& w) { return w.empty() ? "(empty)" : w.to_string(); }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

PrimalityVerdict decide(const std::string& algorithm, WordView w) {
    if (algorithm == "oracle") return is_a_primitive_oracle(w);
    if (algorithm == "fast") return is_a_primitive(w);
    return is_a_primitive_linear(w);
}

void print_rows(std::ostream& out, Format format, const std::vector<counting::CountRow>& rows) {
    switch (format) {
        case Format::Json: {
            json array = json::array();
            for (const auto& row : rows) {
                array.push_back({{"n", row.n},
                                 {"psi", big_to_json(row.psi)},
                                 {"psi_a", big_to_json(row.psi_a)},
                                 {"delta", big_to_json(row.delta)}});
            }
            out << array.dump() << '\n';
            return;
        }
        case Format::Tsv:
            out << "n\tpsi\tpsi_a\tdelta\n";
            for (const auto& row : rows) {
                out << row.n << '\t' << row.psi << '\t' << row.psi_a << '\t' << row.delta << '\n';
            }
            return;
        case Format::Text: {
            std::size_t width = 7;
            for (const auto& row : rows) width = std::max(width, row.psi.str().size() + 2);
            out << std::setw(4) << "n" << std::setw(static_cast<int>(width)) << "psi"
                << std::setw(static_cast<int>(width)) << "psi_a" << std::setw(static_cast<int>(width))
                << "delta" << '\n';
            for (const auto& row : rows) {
                out << std::setw(4) << row.n << std::setw(static_cast<int>(width)) << row.psi.str()
                    << std::setw(static_cast<int>(width)) << row.psi_a.str()
                    << std::setw(static_cast<int>(width)) << row.delta.str() << '\n';
            }
            return;
        }
    }
}

int cmd_check(const std::string& word_arg, std::optional<std::size_t> k,
              const std::string& algorithm, Format format, std::istream& in, std::ostream& out) {
    const auto w = parse_word(read_word_argument(word_arg, in), k);
    const auto start = Clock::now();
    const auto verdict = decide(algorithm, w);
    const double elapsed = seconds_since(start);

    switch (format) {
        case Format::Json:
            out << json{{"verdict", verdict.is_a_primitive ? "A-primitive" : "not A-primitive"},
                        {"witness", verdict.witness_root_length
                                        ? json(*verdict.witness_root_length)
                                        : json(nullptr)}}
                       .dump()
                << '\n';
            break;
        case Format::Tsv:
            out << "verdict\twitness\n"
                << (verdict.is_a_primitive ? "A-primitive" : "not A-primitive") << '\t'
                << (verdict.witness_root_length ? std::to_string(*verdict.witness_root_length) : "")
                << '\n';
            break;
        case Format::Text:
            out << "length: " << w.size() << '\n'
                << "alphabet: " << alphabet_label(w.alphabet_size()) << '\n'
                << "algorithm: " << algorithm << '\n'
                << "verdict: " << (verdict.is_a_primitive ? "A-primitive" : "not A-primitive")
                << '\n';
            if (verdict.witness_root_length) {
                out << "witness root length: " << *verdict.witness_root_length << '\n';
            }
            out << "elapsed: " << std::fixed << std::setprecision(6) << elapsed << " s\n";
            out.unsetf(std::ios::floatfield);
            break;
    }
    return verdict.is_a_primitive ? kPositive : kNegative;
}

int cmd_roots(const std::string& word_arg, std::optional<std::size_t> k, Format format,
              std::istream& in, std::ostream& out) {
    const auto w = parse_word(read_word_argument(word_arg, in), k);
    const auto profile = root_profile(w);

    switch (format) {
        case Format::Json: {
            json roots = json::array();
            for (const auto d : profile.a_primitive_root_lengths) {
                roots.push_back({{"length", d}, {"root", w.prefix(d).to_string()}});
            }
            out << json{{"length", profile.word_length},
                        {"a_root_lengths", profile.a_root_lengths},
                        {"a_primitive_roots", roots}}
                       .dump()
                << '\n';
            break;
        }
        case Format::Tsv:
            out << "length\troot\n";
            for (const auto d : profile.a_primitive_root_lengths) {
                out << d << '\t' << w.prefix(d).to_string() << '\n';
            }
            break;
        case Format::Text:
            out << "length: " << profile.word_length << '\n';
            if (profile.a_root_lengths.empty()) {
                out << "word is A-primitive: it has no proper A-roots\n";
                break;
            }
            out << "A-root lengths:";
            for (const auto d : profile.a_root_lengths) out << ' ' << d;
            out << "\nA-primitive roots:\n";
            for (const auto d : profile.a_primitive_root_lengths) {
                out << "  " << d << ' ' << w.prefix(d).to_string() << '\n';
            }
            out << "distinct A-primitive roots: " << profile.a_primitive_root_lengths.size() << '\n';
            break;
    }
    return kPositive;
}

int cmd_construct(const std::string& family_arg, std::uint64_t parameter, Format format,
                  std::ostream& out) {
    const ConstructionSpec spec{parse_family(family_arg), parameter};
    const auto word = construct(spec).to_string();
    switch (format) {
        case Format::Json:
            out << json{{"family", family_name(spec.family)}, {"parameter", parameter}, {"word", word}}
                       .dump()
                << '\n';
            break;
        case Format::Tsv:
            out << "family\tparameter\tword\n"
                << family_name(spec.family) << '\t' << parameter << '\t' << word << '\n';
            break;
        case Format::Text:
            out << word << '\n';
            break;
    }
    return kPositive;
}

int cmd_relate(const std::string& u_arg, const std::string& x_arg, std::size_t n,
               std::optional<std::size_t> k, Format format, std::istream& in, std::ostream& out) {
    const auto u_text = read_word_argument(u_arg, in);
    const auto x_text = read_word_argument(x_arg, in);
    std::size_t inferred = k.value_or(1);
    if (!k) {
        for (const char c : u_text + x_text) {
            if (c >= 'a' && c <= 'z') inferred = std::max<std::size_t>(inferred, c - 'a' + 1u);
        }
    }
    const auto u = parse_word(u_text, inferred);
    const auto x = parse_word(x_text, inferred);

    const auto witness = commute_check(u, x, n);
    const bool weak = simeq_n(concat(u, x), concat(x, u), n);

    switch (format) {
        case Format::Json: {
            json doc{{"commute", witness.has_value()}, {"n", n}, {"simeq", weak}};
            if (witness) {
                json alphas = json::array();
                json betas = json::array();
                for (std::size_t i = 0; i < witness->r; ++i) {
                    alphas.push_back(witness->alphas[i].to_string());
                    betas.push_back(witness->betas[i].to_string());
                }
                doc["r"] = witness->r;
                doc["s"] = witness->s;
                doc["alphas"] = alphas;
                doc["betas"] = betas;
            }
            out << doc.dump() << '\n';
            break;
        }
        case Format::Tsv:
            out << "i\talpha\tbeta\n";
            if (witness) {
                for (std::size_t i = 0; i < witness->r; ++i) {
                    out << i + 1 << '\t' << witness->alphas[i].to_string() << '\t'
                        << witness->betas[i].to_string() << '\n';
                }
            }
            break;
        case Format::Text:
            out << (witness ? "commute under ~_" : "do not commute under ~_") << n << '\n';
            out << "ux ~=_" << n << " xu: " << (weak ? "yes" : "no") << '\n';
            if (witness) {
                out << "r = " << witness->r << ", s = " << witness->s << '\n';
                for (std::size_t i = 0; i < witness->r; ++i) {
                    out << "  " << i + 1 << ": alpha = " << render_part(witness->alphas[i])
                        << ", beta = " << render_part(witness->betas[i]) << '\n';
                }
            }
            break;
    }
    return witness ? kPositive : kNegative;
}

int cmd_bench(const std::vector<std::size_t>& sizes, unsigned runs, Format format,
              std::ostream& out) {
    struct Sample {
        std::string input;
        std::size_t length;
        std::string algorithm;
        double seconds;
    };
    std::vector<Sample> samples;

    for (const auto size : sizes) {
        if (size < 4) throw DomainError("bench sizes must be >= 4");
        std::uint64_t p = size / 2;
        while (!numtheory::is_prime(p)) --p;
        const std::vector<std::pair<std::string, Word>> inputs{
            {"unary", Word(std::vector<Letter>(size, 0), 2)}, {"prop1", prop1_word(p)}};
        for (const auto& [label, word] : inputs) {
            for (const std::string algorithm : {"oracle", "fast", "linear"}) {
                double total = 0;
                for (unsigned r = 0; r < runs; ++r) {
                    const auto start = Clock::now();
                    const auto verdict = decide(algorithm, word);
                    total += seconds_since(start);
                    if (verdict.is_a_primitive != (label == "prop1")) {
                        throw InternalError("bench: unexpected verdict");
                    }
                }
                samples.push_back({label, word.size(), algorithm, total / runs});
            }
        }
    }

    if (format == Format::Json) {
        json array = json::array();
        for (const auto& s : samples) {
            array.push_back({{"input", s.input},
                             {"length", s.length},
                             {"algorithm", s.algorithm},
                             {"seconds", s.seconds}});
        }
        out << array.dump() << '\n';
    } else {
        out << "input\tlength\talgorithm\tseconds\n";
        for (const auto& s : samples) {
            out << s.input << '\t' << s.length << '\t' << s.algorithm << '\t' << std::scientific
                << std::setprecision(3) << s.seconds << '\n';
            out.unsetf(std::ios::floatfield);
        }
    }
    return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Recognize, analyze, construct and count Abelian primitive words", "abelwords"};
    app.require_subcommand(1);

    Format format = Format::Text;
    std::optional<std::size_t> k;
    std::string word;
    std::string algorithm = "linear";

    auto* check = app.add_subcommand("check", "Decide whether a word is A-primitive");
    check->add_option("word", word, "Word over a..z, or - for standard input")->required();
    check->add_option("--algorithm", algorithm, "oracle, fast or linear")
        ->check(CLI::IsMember({"oracle", "fast", "linear"}));
    check->add_option("--k", k, "Alphabet size (default: inferred)")->check(CLI::Range(1, 26));
    add_format_option(*check, format);

    auto* roots = app.add_subcommand("roots", "List Abelian roots and A-primitive roots");
    roots->add_option("word", word, "Word over a..z, or - for standard input")->required();
    roots->add_option("--k", k, "Alphabet size (default: inferred)")->check(CLI::Range(1, 26));
    add_format_option(*roots, format);

    std::string family;
    std::uint64_t parameter = 0;
    auto* construct_cmd = app.add_subcommand("construct", "Build a word from a named family");
    construct_cmd->add_option("family", family, "prop1, multiroot or antichain")->required();
    construct_cmd->add_option("parameter", parameter, "Family parameter")->required();
    add_format_option(*construct_cmd, format);

    std::string u_word;
    std::string x_word;
    std::size_t block = 0;
    auto* relate = app.add_subcommand("relate", "Test ux ~_n xu and extract the commutation witness");
    relate->add_option("u", u_word, "First word")->required();
    relate->add_option("x", x_word, "Second word")->required();
    relate->add_option("--n", block, "Block length")->required()->check(CLI::PositiveNumber);
    relate->add_option("--k", k, "Alphabet size (default: inferred)")->check(CLI::Range(1, 26));
    add_format_option(*relate, format);

    unsigned alphabet = 2;
    std::uint64_t length = 1;
    unsigned threads = 0;
    auto* count = app.add_subcommand("count", "Count primitive and A-primitive words of one length");
    count->add_option("--k", alphabet, "Alphabet size")->required()->check(CLI::Range(1, 256));
    count->add_option("--n", length, "Word length")->required()->check(CLI::PositiveNumber);
    count->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_format_option(*count, format);

    auto* table = app.add_subcommand("table", "Tabulate counts for lengths 1..max-n");
    table->add_option("--k", alphabet, "Alphabet size")->required()->check(CLI::Range(1, 256));
    table->add_option("--max-n", length, "Largest word length")->required()->check(CLI::PositiveNumber);
    table->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_format_option(*table, format);

    std::vector<std::size_t> sizes{std::size_t{1} << 20, std::size_t{1} << 21, std::size_t{1} << 22};
    unsigned runs = 3;
    auto* bench = app.add_subcommand("bench", "Time the three deciders on worst-case inputs");
    bench->add_option("--sizes", sizes, "Word lengths")->delimiter(',');
    bench->add_option("--runs", runs, "Runs per measurement")->check(CLI::PositiveNumber);
    add_format_option(*bench, format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPositive : kUsage;
    }

    try {
        counting::EnumerationOptions options;
        options.threads = threads;
        if (check->parsed()) return cmd_check(word, k, algorithm, format, in, out);
        if (roots->parsed()) return cmd_roots(word, k, format, in, out);
        if (construct_cmd->parsed()) return cmd_construct(family, parameter, format, out);
        if (relate->parsed()) return cmd_relate(u_word, x_word, block, k, format, in, out);
        if (count->parsed()) {
            print_rows(out, format, {counting::count_row(alphabet, length, options)});
            return kPositive;
        }
        if (table->parsed()) {
            print_rows(out, format, counting::figure1_table(alphabet, length, options).rows);
            return kPositive;
        }
        if (bench->parsed()) return cmd_bench(sizes, runs, format, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace abelwords::cli
