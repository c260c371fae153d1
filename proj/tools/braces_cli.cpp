// Command-line front end: fixtures, enumeration, analysis, verification,
// bound search and solution retraction.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braces/constructors.hpp"
#include "braces/json_io.hpp"
#include "braces/series.hpp"
#include "braces/ybe.hpp"

using namespace braces;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buf;
    void flush() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << buf.str();
        }
    }
};

std::string subset_str(const SkewBrace& b, const SubSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += b.label(s[i]);
    }
    return out + "}";
}

std::string opt_class(const std::optional<int>& c, const char* none) {
    return c ? std::to_string(*c) : std::string(none);
}

Json full_analysis_json(const SkewBrace& b) {
    SeriesReport rep = series_report(b);
    Json j;
    j["report"] = series_report_to_json(rep);
    j["theorem_a"] = verdict_to_json("", theorem_a_check(b), rep.left_class);
    j["abelian_corollary"] = verdict_to_json("", abelian_corollary_check(b), rep.left_class);
    j["proposition"] = verdict_to_json("", proposition_check(b), rep.left_class);
    ContainmentReport pc = proof_containments_check(b);
    Json chain;
    chain["applicable"] = pc.applicable;
    chain["all_pass"] = pc.all_pass;
    chain["failures"] = pc.failures;
    j["proof_chain"] = chain;
    return j;
}

void render_analysis_text(Output& out, const SkewBrace& b) {
    SeriesReport rep = series_report(b);
    out.buf << "order: " << b.order() << "\n";
    out.buf << "left series:";
    for (const auto& s : rep.left_chain) out.buf << " " << subset_str(b, s);
    out.buf << "\nright series:";
    for (const auto& s : rep.right_chain) out.buf << " " << subset_str(b, s);
    out.buf << "\nleft class: " << opt_class(rep.left_class, "not left nilpotent");
    out.buf << "\nright class: " << opt_class(rep.right_class, "not right nilpotent");
    out.buf << "\nadditive class m: " << opt_class(rep.add_class_m, "not nilpotent");
    out.buf << "\nclass of (B^2,+) r: " << opt_class(rep.bsq_class_r, "not nilpotent");
    out.buf << "\ncentral class: " << opt_class(rep.central_class, "not centrally nilpotent");
    Verdict v = theorem_a_check(b);
    out.buf << "\ntheorem bound check: ";
    if (!v.applicable())
        out.buf << "not applicable (" << v.reason << ")";
    else if (v.passed())
        out.buf << "pass (m=" << v.m << ", r=" << v.r << ", bound=" << v.bound
                << ", right class=" << v.right_class << ")";
    else
        out.buf << "FAIL (" << v.reason << ")";
    out.buf << "\n";
}

std::vector<SkewBrace> load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("FileUnreadable: " + path);
    std::vector<SkewBrace> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(brace_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            throw std::runtime_error("MalformedEntry at line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("FileUnreadable: " + path);
    return Json::parse(f);
}

int cmd_example(Output& out, const std::string& name, const std::string& format) {
    SkewBrace b = [&] {
        if (name == "nonnilpotent-type") return paper_example_nonnilpotent_type();
        if (name == "c4c2-d8") return paper_example_c4c2();
        throw std::runtime_error(
            "UnknownExample: " + name + " (valid: nonnilpotent-type, c4c2-d8)");
    }();
    if (format == "json") {
        Json j;
        j["brace"] = brace_to_json(b);
        j["analysis"] = full_analysis_json(b);
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "example: " << name << "\n";
        render_analysis_text(out, b);
    }
    return kExitOk;
}

int cmd_analyze(Output& out, const std::string& path, const std::string& format) {
    SkewBrace b = brace_from_json(read_json_file(path));
    if (format == "json")
        out.buf << full_analysis_json(b).dump(2) << "\n";
    else
        render_analysis_text(out, b);
    return kExitOk;
}

int cmd_enumerate(Output& out, const std::string& spec, int cap, bool dedup,
                  const std::string& format) {
    if (cap > 12) throw std::runtime_error("order cap is limited to 12");
    std::optional<FiniteGroup> g = group_by_name(spec);
    if (!g) {
        std::ifstream f(spec);
        if (f) g = group_from_json(Json::parse(f));
    }
    if (!g) throw std::runtime_error("unknown group spec: " + spec);
    if (g->order() > 8)
        std::cerr << "warning: enumeration above order 8 may be slow\n";
    std::vector<SkewBrace> braces_found = enumerate_braces(*g, dedup, cap);
    std::string add_name = group_class_name(*g);
    if (format == "json") {
        for (const SkewBrace& b : braces_found)
            out.buf << catalog_entry_to_json(b, "holomorph", add_name,
                                             group_class_name(b.mul()))
                           .dump()
                    << "\n";
    } else {
        out.buf << braces_found.size() << " skew brace(s) on " << add_name
                << (dedup ? " (up to brace isomorphism)" : " (raw)") << "\n";
        for (size_t i = 0; i < braces_found.size(); ++i)
            out.buf << "  #" << i << ": (B,.) = " << group_class_name(braces_found[i].mul())
                    << "\n";
    }
    return kExitOk;
}

int cmd_verify(Output& out, const std::string& path, const std::string& format) {
    std::vector<SkewBrace> catalog = load_catalog(path);
    int pass = 0, fail = 0, na = 0;
    Json lines = Json::array();
    for (size_t i = 0; i < catalog.size(); ++i) {
        const SkewBrace& b = catalog[i];
        auto lc = chain_class(left_series(b));
        Verdict v = theorem_a_check(b);
        Json j = verdict_to_json("entry-" + std::to_string(i), v, lc);
        Verdict cor = abelian_corollary_check(b);
        Verdict prop = proposition_check(b);
        ContainmentReport pc = proof_containments_check(b);
        bool any_fail = (v.applicable() && !v.passed()) ||
                        (cor.applicable() && !cor.passed()) ||
                        (prop.applicable() && !prop.passed()) ||
                        (pc.applicable && !pc.all_pass);
        j["corollary_pass"] = !cor.applicable() || cor.passed();
        j["proposition_pass"] = !prop.applicable() || prop.passed();
        j["proof_chain_pass"] = !pc.applicable || pc.all_pass;
        if (any_fail)
            ++fail;
        else if (v.applicable())
            ++pass;
        else
            ++na;
        lines.push_back(j);
    }
    if (format == "json") {
        Json j;
        j["verdicts"] = lines;
        j["pass"] = pass;
        j["fail"] = fail;
        j["not_applicable"] = na;
        out.buf << j.dump(2) << "\n";
    } else {
        for (const auto& j : lines)
            out.buf << j.at("brace_id").get<std::string>() << ": "
                    << (j.at("pass").get<bool>()
                            ? "pass"
                            : (j.at("applicable").get<bool>() ? "FAIL" : "not applicable"))
                    << "\n";
        out.buf << "passed " << pass << ", failed " << fail << ", not applicable " << na
                << "\n";
    }
    return fail > 0 ? kExitVerifyFail : kExitOk;
}

int cmd_search(Output& out, const std::string& path, const std::string& format) {
    std::vector<SkewBrace> catalog = load_catalog(path);
    auto entries = bound_attainment_search(catalog);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& e : entries) {
            Json j;
            j["index"] = e.index;
            j["m"] = e.m;
            j["r"] = e.r;
            j["bound"] = e.bound;
            j["right_class"] = e.right_class;
            j["ratio"] = e.ratio;
            j["attains_bound"] = e.attains_bound;
            j["nontrivial_mr"] = e.nontrivial_mr;
            arr.push_back(j);
        }
        out.buf << arr.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            out.buf << "entry " << e.index << ": m=" << e.m << " r=" << e.r
                    << " right class=" << e.right_class << "/" << e.bound
                    << (e.attains_bound ? " (bound attained)" : "")
                    << (e.attains_bound && e.nontrivial_mr ? " [mr > 1]" : "") << "\n";
        if (entries.empty()) out.buf << "no applicable entries\n";
    }
    return kExitOk;
}

int cmd_retract(Output& out, const std::string& path, const std::string& format) {
    Solution s = solution_from_json(read_json_file(path));
    std::vector<int> sizes = retraction_tower_sizes(s);
    auto level = multipermutation_level(s);
    if (format == "json") {
        Json j;
        j["tower_sizes"] = sizes;
        if (level)
            j["multipermutation_level"] = *level;
        else
            j["multipermutation_level"] = nullptr;
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "retraction tower sizes:";
        for (int n : sizes) out.buf << " " << n;
        out.buf << "\nmultipermutation level: "
                << (level ? std::to_string(*level) : "not multipermutation") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite skew brace computation engine"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global --format/--out after the subcommand
    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::string example_name, analyze_path, group_spec, verify_path, search_path,
        retract_path;
    int cap = 8;
    bool no_dedup = false;

    auto* ex = app.add_subcommand("example", "emit a built-in example brace with analysis");
    ex->add_option("name", example_name, "nonnilpotent-type or c4c2-d8")->required();
    auto* an = app.add_subcommand("analyze", "analyze a brace JSON file");
    an->add_option("file", analyze_path)->required();
    auto* en = app.add_subcommand("enumerate", "enumerate skew braces on an additive group");
    en->add_option("group", group_spec, "group name (C6, D8, C4xC2, S3, Q8) or table file")
        ->required();
    en->add_option("--cap", cap, "order cap (max 12)");
    en->add_flag("--no-dedup", no_dedup, "keep brace-isomorphic duplicates");
    auto* ve = app.add_subcommand("verify", "run the nilpotency checkers over a catalog");
    ve->add_option("catalog", verify_path)->required();
    auto* se = app.add_subcommand("search", "rank catalog entries by bound attainment");
    se->add_option("catalog", search_path)->required();
    auto* re = app.add_subcommand("retract", "retraction analysis of a solution file");
    re->add_option("file", retract_path)->required();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.path = out_path;
    int code = kExitInputError;
    try {
        if (ex->parsed()) code = cmd_example(out, example_name, format);
        else if (an->parsed()) code = cmd_analyze(out, analyze_path, format);
        else if (en->parsed()) code = cmd_enumerate(out, group_spec, cap, !no_dedup, format);
        else if (ve->parsed()) code = cmd_verify(out, verify_path, format);
        else if (se->parsed()) code = cmd_search(out, search_path, format);
        else if (re->parsed()) code = cmd_retract(out, retract_path, format);
        out.flush();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return code;
}
