#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridwords/gridwords.hpp"

namespace gw = gridwords;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* tool_version = "1.0.0";
constexpr std::size_t max_letters = 10'000'000;

// Fixed 12-significant-digit rendering, parsed back so JSON output is
// byte-stable across platforms.
json fnum(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json::parse(buf);
}

json jsurd(const gw::surd& s) {
    return json{{"surd", gw::to_string(s)}, {"value", fnum(s.to_double())}};
}

json jquotient(const gw::bigint& q) {
    if (q >= std::numeric_limits<long long>::min() && q <= std::numeric_limits<long long>::max())
        return q.convert_to<long long>();
    return q.str();
}

struct source_opts {
    std::string word_text;
    std::string file_path;
    std::string slope_text;
    std::string line_text;
    std::string cf_text;
    std::string named;
    std::size_t length = 0;
    std::string tie = "ascending";
};

void add_generator_options(CLI::App* cmd, source_opts& o) {
    cmd->add_option("--slope", o.slope_text, "2D slope as a surd literal, e.g. phi or 7/3");
    cmd->add_option("--line", o.line_text, "3D direction dx,dy,dz with surd components");
    cmd->add_option("--cf", o.cf_text, "comma-separated partial quotients");
    cmd->add_option("--named", o.named, "one of fibonacci, sm, tribonacci")
        ->check(CLI::IsMember({"fibonacci", "sm", "tribonacci"}));
    cmd->add_option("--length", o.length, "number of letters to generate");
    cmd->add_option("--tie-order", o.tie, "tie emission order for --line")
        ->check(CLI::IsMember({"ascending", "descending"}));
}

void add_word_options(CLI::App* cmd, source_opts& o) {
    cmd->add_option("--word", o.word_text, "word as a digit string");
    cmd->add_option("--file", o.file_path, "file holding a digit string");
    add_generator_options(cmd, o);
}

std::vector<gw::bigint> parse_cf_list(const std::string& text) {
    std::vector<gw::bigint> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw gw::parse_error("empty continued-fraction term");
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(cur[i])) && !(i == 0 && cur[i] == '-'))
                throw gw::parse_error("bad continued-fraction term: " + cur);
        out.emplace_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    flush();
    return out;
}

std::size_t checked_length(const source_opts& o) {
    if (o.length == 0)
        throw gw::parse_error("--length is required with a generator source");
    if (o.length > max_letters)
        throw gw::length_out_of_range("--length exceeds the " + std::to_string(max_letters) +
                                      "-letter limit");
    return o.length;
}

gw::word generate_word(const source_opts& o, json* descriptor) {
    const int sources = int(!o.slope_text.empty()) + int(!o.line_text.empty()) +
                        int(!o.cf_text.empty()) + int(!o.named.empty());
    if (sources == 0)
        throw gw::parse_error("choose a generator source: --slope, --line, --cf, or --named");
    if (sources > 1) throw gw::parse_error("choose exactly one generator source");
    const std::size_t n = checked_length(o);
    if (!o.slope_text.empty()) {
        if (descriptor) *descriptor = {{"source", "slope"}, {"slope", o.slope_text}};
        return gw::generate_cutting(gw::cutting_line(gw::parse_surd(o.slope_text)), n);
    }
    if (!o.line_text.empty()) {
        if (descriptor) *descriptor = {{"source", "line"}, {"line", o.line_text}};
        const auto order =
            o.tie == "descending" ? gw::tie_order::descending : gw::tie_order::ascending;
        return gw::generate_intersection(gw::parse_line3(o.line_text), n, order);
    }
    if (!o.cf_text.empty()) {
        if (descriptor) *descriptor = {{"source", "cf"}, {"cf", o.cf_text}};
        gw::cf_expansion cf;
        cf.quotients = parse_cf_list(o.cf_text);
        return gw::generate_from_cf(cf, n);
    }
    if (descriptor) *descriptor = {{"source", "named"}, {"name", o.named}};
    if (o.named == "fibonacci") return gw::fibonacci_word(n);
    if (o.named == "sm") return gw::s_m_word(n);
    return gw::tribonacci_word(n);
}

std::string read_all_digits(std::istream& in) {
    std::string out;
    char ch;
    while (in.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        out.push_back(ch);
        if (out.size() > max_letters)
            throw gw::length_out_of_range("input exceeds the " + std::to_string(max_letters) +
                                          "-letter limit");
    }
    return out;
}

gw::word load_word(const source_opts& o, json* descriptor, int force_alphabet = 0) {
    const int sources = int(!o.word_text.empty()) + int(!o.file_path.empty()) +
                        int(!o.slope_text.empty()) + int(!o.line_text.empty()) +
                        int(!o.cf_text.empty()) + int(!o.named.empty());
    if (sources > 1) throw gw::parse_error("choose exactly one word source");
    if (!o.slope_text.empty() || !o.line_text.empty() || !o.cf_text.empty() || !o.named.empty())
        return generate_word(o, descriptor);

    std::string digits;
    if (!o.word_text.empty()) {
        digits = o.word_text;
        if (descriptor) *descriptor = {{"source", "word"}};
    } else if (!o.file_path.empty()) {
        std::ifstream in(o.file_path);
        if (!in) throw gw::parse_error("cannot open " + o.file_path);
        digits = read_all_digits(in);
        if (descriptor) *descriptor = {{"source", "file"}, {"path", o.file_path}};
    } else {
        digits = read_all_digits(std::cin);
        if (descriptor) *descriptor = {{"source", "stdin"}};
    }
    if (digits.size() > max_letters)
        throw gw::length_out_of_range("input exceeds the " + std::to_string(max_letters) +
                                      "-letter limit");
    return gw::word::from_digits(digits, force_alphabet);
}

json report_header(const json& descriptor) {
    json out;
    out["schema_version"] = 1;
    out["tool_version"] = tool_version;
    out["input"] = descriptor;
    return out;
}

json jblock_form(const gw::block_form_report& rep) {
    json out;
    switch (rep.kind) {
        case gw::block_form_report::kind_t::single_block: out["kind"] = "single-block"; break;
        case gw::block_form_report::kind_t::two_block: out["kind"] = "two-block"; break;
        case gw::block_form_report::kind_t::violation: out["kind"] = "violation"; break;
    }
    out["majority"] = rep.majority;
    if (rep.kind != gw::block_form_report::kind_t::violation) out["value"] = rep.value;
    json runs = json::object();
    for (const auto& [len, count] : rep.runs) runs[std::to_string(len)] = count;
    out["interior_runs"] = runs;
    return out;
}

json jcf(const gw::cf_expansion& cf) {
    json quotients = json::array();
    for (const auto& q : cf.quotients) quotients.push_back(jquotient(q));
    return json{{"quotients", quotients}, {"exact", cf.exact}};
}

json jverdict(const gw::verdict& v) {
    json out;
    out["verdict"] = v.consistent ? "consistent" : "inconsistent";
    out["depth_checked"] = v.depth_checked;
    if (v.consistent) {
        const gw::line3& dir = *v.direction;
        out["direction"] = json{
            {"dx", jsurd(dir.dx())}, {"dy", jsurd(dir.dy())}, {"dz", jsurd(dir.dz())}};
    } else {
        json violations = json::array();
        for (const auto& f : v.violations) {
            json item;
            if (f.removed_letter >= 0) item["removed_letter"] = f.removed_letter;
            item["rule"] = f.rule;
            item["run_lengths"] = f.run_lengths;
            item["iteration"] = f.iteration;
            violations.push_back(item);
        }
        out["violations"] = violations;
    }
    return out;
}

int cmd_generate(const source_opts& o, bool compact_out) {
    json descriptor;
    const gw::word w = generate_word(o, &descriptor);
    if (compact_out)
        std::cout << gw::to_string(gw::compact(w)) << "\n";
    else
        std::cout << w.to_digits() << "\n";
    return 0;
}

int cmd_analyze(const source_opts& o, std::size_t max_n, std::size_t depth, bool with_verdict) {
    json descriptor;
    const gw::word w = load_word(o, &descriptor);
    if (max_n == 0) throw gw::parse_error("--max-n must be positive");
    if (w.size() < 50 * max_n)
        throw gw::margin_too_small(50 * max_n, "need >= " + std::to_string(50 * max_n) +
                                                   " letters for --max-n " +
                                                   std::to_string(max_n));
    json out = report_header(descriptor);
    out["length"] = w.size();
    out["alphabet"] = w.alphabet();

    json complexity_row = json::array(), palindrome_row = json::array();
    for (std::size_t n = 1; n <= max_n; ++n) {
        complexity_row.push_back(gw::complexity(w, n));
        palindrome_row.push_back(gw::palindrome_count(w, n));
    }
    out["complexity"] = complexity_row;
    out["palindromes"] = palindrome_row;
    out["balance_deficit"] = gw::balance_deficit(w, max_n);

    if (w.alphabet() == 2) {
        out["block_form"] = jblock_form(gw::check_block_form(w));
        try {
            out["continued_fraction"] = jcf(gw::recover_cf(w, depth));
        } catch (const gw::not_block_form& e) {
            out["continued_fraction"] = json{{"error", e.what()}};
        }
    } else {
        json projections = json::array();
        for (std::uint8_t a = 0; a < 3; ++a) {
            const gw::word proj = gw::removal_projection(w, a).projected;
            json item;
            item["removed_letter"] = a;
            item["block_form"] = jblock_form(gw::check_block_form(proj));
            try {
                item["continued_fraction"] = jcf(gw::recover_cf(proj, depth));
            } catch (const gw::not_block_form& e) {
                item["continued_fraction"] = json{{"error", e.what()}};
            }
            projections.push_back(item);
        }
        out["projections"] = projections;
        if (with_verdict) out["classification"] = jverdict(gw::classify_linearity(w, depth));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classify(const source_opts& o, std::size_t depth) {
    json descriptor;
    const gw::word w = load_word(o, &descriptor, 3);
    const gw::verdict v = gw::classify_linearity(w, depth);
    json out = report_header(descriptor);
    out.update(jverdict(v));
    std::cout << out.dump(2) << "\n";
    return v.consistent ? 0 : 1;
}

int cmd_derive(const source_opts& o) {
    json descriptor;
    const gw::word w = load_word(o, &descriptor);
    const gw::derivation d = gw::derive(w);
    json out = report_header(descriptor);
    out["value"] = jquotient(d.value);
    out["swapped"] = d.swapped;
    out["trimmed_front"] = d.trimmed_front;
    out["trimmed_back"] = d.trimmed_back;
    out["derived"] = d.derived.to_digits();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_recover(const source_opts& o, std::size_t depth) {
    json descriptor;
    const gw::word w = load_word(o, &descriptor);
    json out = report_header(descriptor);
    out.update(jcf(gw::recover_cf(w, depth)));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_rauzy(const source_opts& o, std::size_t order) {
    json descriptor;
    const gw::word w = load_word(o, &descriptor);
    std::cout << gw::to_dot(gw::build_rauzy(w, order));
    return 0;
}

int cmd_angles(const std::string& line_text) {
    const gw::line3 line = gw::parse_line3(line_text);
    const gw::spherical_angles a = gw::angles(line);
    json out;
    out["schema_version"] = 1;
    out["tool_version"] = tool_version;
    out["line"] = json{
        {"dx", jsurd(line.dx())}, {"dy", jsurd(line.dy())}, {"dz", jsurd(line.dz())}};
    out["theta"] = fnum(a.theta);
    out["phi_polar"] = fnum(a.phi_polar);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-crossing sequences of lines: generation and analysis"};
    app.require_subcommand(1);

    source_opts gen_opts;
    bool compact_out = false;
    auto* gen = app.add_subcommand("generate", "emit a word to stdout");
    add_generator_options(gen, gen_opts);
    gen->add_flag("--compact", compact_out, "print in compact run form");

    source_opts analyze_opts;
    std::size_t analyze_max_n = 10, analyze_depth = 8;
    bool analyze_classify = false;
    auto* analyze = app.add_subcommand("analyze", "complexity, balance, palindromes, structure");
    add_word_options(analyze, analyze_opts);
    analyze->add_option("--max-n", analyze_max_n, "largest factor length to tabulate");
    analyze->add_option("--depth", analyze_depth, "continued-fraction recovery depth");
    analyze->add_flag("--classify", analyze_classify, "include a linearity verdict (ternary)");

    source_opts classify_opts;
    std::size_t classify_depth = 8;
    auto* classify = app.add_subcommand("classify", "test a ternary word for linearity");
    add_word_options(classify, classify_opts);
    classify->add_option("--depth", classify_depth, "derivation depth to check");

    source_opts derive_opts;
    auto* derive_cmd = app.add_subcommand("derive", "one derivation step of a binary word");
    add_word_options(derive_cmd, derive_opts);

    source_opts recover_opts;
    std::size_t recover_depth = 8;
    auto* recover = app.add_subcommand("recover", "continued fraction from a binary word");
    add_word_options(recover, recover_opts);
    recover->add_option("--depth", recover_depth, "maximum quotients to recover");

    source_opts rauzy_opts;
    std::size_t rauzy_order = 0;
    auto* rauzy = app.add_subcommand("rauzy", "Rauzy graph as DOT text");
    add_word_options(rauzy, rauzy_opts);
    rauzy->add_option("--order", rauzy_order, "factor length n")->required();

    std::string angles_line;
    auto* angles_cmd = app.add_subcommand("angles", "spherical angles of a 3D line");
    angles_cmd->add_option("--line", angles_line, "direction dx,dy,dz")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_opts, compact_out);
        if (analyze->parsed())
            return cmd_analyze(analyze_opts, analyze_max_n, analyze_depth, analyze_classify);
        if (classify->parsed()) return cmd_classify(classify_opts, classify_depth);
        if (derive_cmd->parsed()) return cmd_derive(derive_opts);
        if (recover->parsed()) return cmd_recover(recover_opts, recover_depth);
        if (rauzy->parsed()) return cmd_rauzy(rauzy_opts, rauzy_order);
        if (angles_cmd->parsed()) return cmd_angles(angles_line);
    } catch (const gw::margin_too_small& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const gw::incompatible_fields& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gw::division_by_zero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gw::non_positive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gw::trivial_slope_one& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gw::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
