#include "bsd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsd/counting.hpp"
#include "bsd/enumerate.hpp"
#include "bsd/errors.hpp"
#include "bsd/integer_io.hpp"
#include "bsd/oracle.hpp"
#include "bsd/stern.hpp"
#include "bsd/words.hpp"

namespace bsd::cli {

namespace {

using Json = nlohmann::ordered_json;

// Row output is 2^i + 1 lines; refuse anything past this without --limit.
constexpr Bits kDefaultRowLimit = 24;

struct OutputRecord {
    std::string command;
    Json inputs = Json::object();
    std::variant<std::string, std::vector<std::string>> result;
    std::vector<std::string> text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

void write(const OutputRecord& record, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json doc;
        doc["command"] = record.command;
        doc["inputs"] = record.inputs;
        std::visit([&](const auto& r) { doc["result"] = r; }, record.result);
        out << doc.dump() << '\n';
    } else if (format == "csv") {
        const auto join = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                line += (c ? "," : "") + cells[c];
            }
            out << line << '\n';
        };
        join(record.csv_header);
        for (const auto& row : record.csv_rows) {
            join(row);
        }
    } else {
        for (const auto& line : record.text) {
            out << line << '\n';
        }
    }
}

std::string join_words(const std::vector<std::string>& items, char sep) {
    std::string line;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) line += sep;
        line += items[k];
    }
    return line;
}

// Scalar result: text is the value alone, csv is one row of inputs + value.
OutputRecord scalar(std::string command, Json inputs, const std::string& value,
                    std::vector<std::string> header, std::vector<std::string> row) {
    OutputRecord record{std::move(command), std::move(inputs), value, {value}, std::move(header), {}};
    record.csv_rows.push_back(std::move(row));
    return record;
}

// "@path" reads the argument from a file; single argv strings are capped at
// 128 KiB on Linux, well short of a million-bit number.
std::string expand_argument(const std::string& text) {
    if (text.empty() || text.front() != '@') {
        return text;
    }
    std::ifstream in(text.substr(1));
    if (!in) {
        throw std::invalid_argument("cannot read argument file '" + text.substr(1) + "'");
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = content.find_first_not_of(" \t\r\n");
    const auto last = content.find_last_not_of(" \t\r\n");
    return first == std::string::npos ? std::string{} : content.substr(first, last - first + 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary signed-digit representation counts, Stern's diatomic sequence and hyperbinary words"};
    app.name("bsdtool");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::optional<Bits> limit;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--limit", limit, "Override the oracle / enumeration / row size guard");

    std::string n_text;
    std::string word_text;
    std::optional<Bits> bits;
    std::string algo;
    std::string from;
    bool full = false;

    auto* count = app.add_subcommand("count", "Number of i-digit signed-digit words with value n");
    count->add_option("n", n_text)->required();
    count->add_option("--bits,-b", bits, "Word length i")->required();
    count->add_option("--algo", algo, "scan | fast | oracle")->check(CLI::IsMember({"scan", "fast", "oracle"}))->default_str("fast");

    auto* enumerate = app.add_subcommand("enumerate", "List every i-digit signed-digit word with value n");
    enumerate->add_option("n", n_text)->required();
    enumerate->add_option("--bits,-b", bits, "Word length i")->required();

    auto* stern_cmd = app.add_subcommand("stern", "Stern's diatomic sequence c(r)");
    stern_cmd->add_option("r", n_text)->required();

    auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_k");
    fib_cmd->add_option("k", n_text)->required();

    auto* hyper = app.add_subcommand("hyper", "Hyperbinary representation count of n");
    hyper->add_option("n", n_text)->required();
    hyper->add_option("--bits,-b", bits, "Restrict to words of exactly i digits");

    auto* convert = app.add_subcommand("convert", "Translate between signed-digit and hyperbinary words");
    convert->add_option("word", word_text)->required();
    convert->add_option("--from", from, "Source alphabet when the word is all 0/1")->check(CLI::IsMember({"bsd", "hyper"}));

    auto* ratio = app.add_subcommand("ratio", "Calkin-Wilf fraction c(r)/c(r+1)");
    ratio->add_option("r", n_text)->required();

    auto* row = app.add_subcommand("row", "Table of n, f(n, i) for n = 0..2^i");
    row->add_option("i", bits)->required();
    row->add_flag("--full", full, "Include negative n");
    row->add_option("--algo", algo, "stern | scan | fast | oracle")->check(CLI::IsMember({"stern", "scan", "fast", "oracle"}))->default_str("stern");

    auto* maxima = app.add_subcommand("maxima", "Largest count in row i and its maximizers (oracle)");
    maxima->add_option("i", bits)->required();

    try {
        std::vector<std::string> reversed = args;
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        n_text = expand_argument(n_text);
        OutputRecord record;
        if (count->parsed()) {
            const Integer n = parse_integer(n_text);
            const std::string which = algo.empty() ? "fast" : algo;
            Count result;
            if (which == "scan") {
                result = count_bsd(n, *bits);
            } else if (which == "oracle") {
                result = oracle::brute_count_bsd(n, *bits, limit.value_or(oracle::kDefaultLimit));
            } else {
                result = count_bsd_fast(n, *bits);
            }
            record = scalar("count", Json{{"n", n.get_str()}, {"bits", std::to_string(*bits)}, {"algo", which}},
                            result.str(), {"n", "bits", "count"}, {n.get_str(), std::to_string(*bits), result.str()});
        } else if (enumerate->parsed()) {
            const Integer n = parse_integer(n_text);
            const auto words = enumerate_bsd(n, *bits, limit.value_or(kDefaultEnumerationLimit));
            std::vector<std::string> lines;
            lines.reserve(words.size());
            for (const auto& w : words) {
                lines.push_back(w.str());
            }
            record.command = "enumerate";
            record.inputs = Json{{"n", n.get_str()}, {"bits", std::to_string(*bits)}};
            record.text = lines;
            record.csv_header = {"word"};
            for (const auto& l : lines) {
                record.csv_rows.push_back({l});
            }
            record.result = std::move(lines);
        } else if (stern_cmd->parsed()) {
            const Integer r = parse_natural(n_text);
            const std::string value = stern(r).str();
            record = scalar("stern", Json{{"r", r.get_str()}}, value, {"r", "stern"}, {r.get_str(), value});
        } else if (fib_cmd->parsed()) {
            const Bits k = parse_bits(n_text);
            const std::string value = fib(k).str();
            record = scalar("fib", Json{{"k", std::to_string(k)}}, value, {"k", "fib"}, {std::to_string(k), value});
        } else if (hyper->parsed()) {
            const Integer n = parse_natural(n_text);
            if (bits) {
                const std::string value = count_hyper_bits(n, *bits).str();
                record = scalar("hyper", Json{{"n", n.get_str()}, {"bits", std::to_string(*bits)}}, value,
                                {"n", "bits", "count"}, {n.get_str(), std::to_string(*bits), value});
            } else {
                const std::string value = count_hyper(n).str();
                record = scalar("hyper", Json{{"n", n.get_str()}}, value, {"n", "count"}, {n.get_str(), value});
            }
        } else if (convert->parsed()) {
            std::string source = from;
            if (source.empty()) {
                if (word_text.find_first_of("+-") != std::string::npos) {
                    source = "bsd";
                } else if (word_text.find('2') != std::string::npos) {
                    source = "hyper";
                } else {
                    throw std::invalid_argument("word '" + word_text +
                                                "' is valid in both alphabets; pass --from bsd|hyper");
                }
            }
            std::string translated;
            Integer source_value;
            Integer translated_value;
            if (source == "bsd") {
                // '1' is read as '+' so that 0/1 words work under --from bsd.
                std::string spelled = word_text;
                std::replace(spelled.begin(), spelled.end(), '1', '+');
                const auto word = BsdWord::parse(spelled);
                const auto h = bsd_to_hyper(word);
                translated = h.str();
                source_value = value_of(word);
                translated_value = value_of(h);
            } else {
                const auto word = HyperWord::parse(word_text);
                const auto b = hyper_to_bsd(word);
                translated = b.str();
                source_value = value_of(word);
                translated_value = value_of(b);
            }
            const std::string target = source == "bsd" ? "hyper" : "bsd";
            record.command = "convert";
            record.inputs = Json{{"word", word_text}, {"from", source}};
            record.result = std::vector<std::string>{translated, source_value.get_str(), translated_value.get_str()};
            record.text = {translated, source_value.get_str() + " " + translated_value.get_str()};
            record.csv_header = {"from", "word", "value", "to", "translated", "translated_value"};
            record.csv_rows = {{source, word_text, source_value.get_str(), target, translated, translated_value.get_str()}};
        } else if (ratio->parsed()) {
            const Integer r = parse_integer(n_text);
            const auto fraction = stern_ratio(r);
            record = scalar("ratio", Json{{"r", r.get_str()}}, fraction.str(), {"r", "numerator", "denominator"},
                            {r.get_str(), fraction.numerator().str(), fraction.denominator().str()});
        } else if (row->parsed()) {
            const std::string which = algo.empty() ? "stern" : algo;
            const Bits i = *bits;
            std::optional<oracle::HistogramRow> histogram;
            if (which == "oracle") {
                histogram = oracle::brute_histogram(i, limit.value_or(oracle::kDefaultLimit));
            } else {
                const Bits guard = limit.value_or(kDefaultRowLimit);
                if (i > guard) {
                    throw LimitExceeded("row", i, guard);
                }
            }
            const std::int64_t top = std::int64_t{1} << i;
            const std::int64_t first = full ? -top : 0;
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), 2, i);
            std::vector<std::string> counts;
            record.csv_header = {"n", "count"};
            for (std::int64_t n = first; n <= top; ++n) {
                const Integer value(static_cast<long>(n));
                Count c;
                if (histogram) {
                    c = histogram->at(value);
                } else if (which == "scan") {
                    c = count_bsd(value, i);
                } else if (which == "fast") {
                    c = count_bsd_fast(value, i);
                } else {
                    // f(n, i) = c(2^i - |n|), which also yields f(0, i) = c(2^i) = 1.
                    c = stern(power - abs(value));
                }
                const std::string n_str = std::to_string(n);
                record.text.push_back(n_str + " " + c.str());
                record.csv_rows.push_back({n_str, c.str()});
                counts.push_back(c.str());
            }
            record.command = "row";
            record.inputs = Json{{"bits", std::to_string(i)},
                                 {"from", std::to_string(first)},
                                 {"to", std::to_string(top)},
                                 {"algo", which}};
            record.result = std::move(counts);
        } else if (maxima->parsed()) {
            const Bits i = *bits;
            const auto m = oracle::brute_maxima(i, limit.value_or(oracle::kDefaultLimit));
            std::vector<std::string> argmax;
            for (auto n : m.argmax) {
                argmax.push_back(std::to_string(n));
            }
            // Observed Fibonacci index of the maximum, if it is one.
            std::string index = "none";
            for (unsigned long k = 0; fib(k) <= m.max; ++k) {
                if (fib(k) == m.max) {
                    index = std::to_string(k);
                }
            }
            std::vector<std::string> result{m.max.str()};
            result.insert(result.end(), argmax.begin(), argmax.end());
            record.command = "maxima";
            record.inputs = Json{{"bits", std::to_string(i)}};
            record.result = result;
            record.text = {"max " + m.max.str() + " fib_index " + index, "argmax " + join_words(argmax, ' ')};
            record.csv_header = {"bits", "max", "fib_index", "argmax"};
            record.csv_rows = {{std::to_string(i), m.max.str(), index, join_words(argmax, ' ')}};
        }
        write(record, format, out);
        return kOk;
    } catch (const LimitExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kLimitRefused;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace bsd::cli
