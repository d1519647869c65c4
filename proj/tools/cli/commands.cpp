#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "kms/enumerator.hpp"
#include "kms/error.hpp"
#include "kms/harness.hpp"

namespace kms::cli {
namespace {

struct Config {
    // graph source, exactly one
    std::vector<std::string> g6;
    std::string file;
    std::string family;
    int enum_n = 0;

    // family parameters
    int n = 0;
    int s = 0;
    int k_clique = 0;
    std::vector<int> parts;
    int isolated = 0;

    int k = 1;
    int d = 0;
    std::string property;
    std::string theorem;
    std::string lemma = "all";
    int max_n = 30;
    double tol = 1e-10;
    double eps = kCompareEps;
    std::string out;
    std::string format;
    int workers = 1;
    int samples = 200;
    std::uint64_t seed = 20260101;
    bool all = false;
    bool count_only = false;
};

class Usage : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_workers() {
    if (const char* env = std::getenv("KMS_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Family family_from_string(const std::string& name) {
    static const std::pair<const char*, Family> names[] = {
        {"pendant-pair", Family::pendant_pair}, {"pendant-clique", Family::pendant_clique},
        {"clique-odd", Family::clique_odd},     {"clique-even", Family::clique_even},
        {"split-star", Family::split_star},     {"general", Family::general},
    };
    for (const auto& [text, f] : names)
        if (name == text) return f;
    throw Usage("unknown --family '" + name +
                "' (pendant-pair, pendant-clique, clique-odd, clique-even, split-star, general)");
}

FamilySpec family_spec(const Config& c) {
    switch (family_from_string(c.family)) {
        case Family::pendant_pair: return FamilySpec::pendant_pair(c.n);
        case Family::pendant_clique: return FamilySpec::pendant_clique(c.n);
        case Family::clique_odd: return FamilySpec::clique_odd(c.n, c.s);
        case Family::clique_even: return FamilySpec::clique_even(c.n, c.s);
        case Family::split_star: return FamilySpec::split_star(c.n, c.k_clique);
        case Family::general: return FamilySpec::general(c.s, c.parts, c.isolated);
    }
    throw Usage("unknown family");
}

std::vector<Graph> load_graphs(const Config& c, std::istream& in) {
    const int sources = !c.g6.empty() + !c.file.empty() + !c.family.empty() + (c.enum_n > 0);
    if (sources != 1)
        throw Usage("give exactly one graph source: --g6, --file, --family or --enum-n");
    if (!c.g6.empty()) {
        std::vector<Graph> gs;
        for (const auto& s : c.g6) gs.push_back(parse_graph6(s));
        return gs;
    }
    if (c.file == "-") return read_graph6_stream(in);
    if (!c.file.empty()) return read_graph6_file(c.file);
    if (!c.family.empty()) return {build_family(family_spec(c))};
    return connected_graphs(c.enum_n);
}

RunOptions run_options(const Config& c) {
    RunOptions o;
    o.workers = c.workers;
    o.eps = c.eps;
    o.eigen.tol = c.tol;
    return o;
}

PropertyQuery query(const Config& c) {
    if (c.property.empty()) throw Usage("--property is required");
    return {property_from_string(c.property), c.k, c.d};
}

TheoremSpec theorem_spec(const Config& c) {
    if (c.theorem.empty()) throw Usage("--theorem is required");
    if (c.n <= 0) throw Usage("--n is required");
    TheoremSpec spec{theorem_from_string(c.theorem), c.n, c.k, c.d};
    validate(spec);
    return spec;
}

/// Graph source for harness commands: --file, else built-in enumeration up to
/// n = 8, else the sampled source.
GraphSource harness_source(const Config& c, int n, std::istream& in) {
    if (c.file == "-") {
        GraphSource source{read_graph6_stream(in), "graph6 from stdin", true};
        for (const Graph& g : source.graphs)
            if (g.order() != n)
                throw Error(ErrorCode::source_order_mismatch, "stdin holds a graph of order " + std::to_string(g.order()) +
                                                                  ", expected " + std::to_string(n));
        return source;
    }
    if (!c.file.empty()) return file_source(c.file, n);
    if (n <= kBuiltinEnumerationCap) return enumerated_source(n);
    return sampled_source(n, c.samples, c.seed);
}

std::string fmt(double x) { return format_number(x); }
const char* tf(bool b) { return b ? "true" : "false"; }

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorCode::io_error, "cannot write " + path);
            target_ = &file_;
        }
    }
    std::ostream& stream() { return *target_; }

private:
    std::ofstream file_;
    std::ostream* target_;
};

std::string table_format(const Config& c, std::size_t rows) {
    if (!c.format.empty()) return c.format;
    return rows == 1 ? "plain" : "csv";
}

// one row per graph: graph6 plus named columns
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& os, const std::string& format) const {
        if (format == "plain") {
            for (const auto& r : rows) {
                // the graph6 column is dropped for a single row
                const std::size_t from = rows.size() == 1 ? 1 : 0;
                for (std::size_t i = from; i < r.size(); ++i) os << (i > from ? " " : "") << r[i];
                os << '\n';
            }
        } else if (format == "csv") {
            for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
            os << '\n';
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
                os << '\n';
            }
        } else {
            os << "[\n";
            for (std::size_t j = 0; j < rows.size(); ++j) {
                os << "  {";
                for (std::size_t i = 0; i < header.size(); ++i)
                    os << (i ? ", " : "") << '"' << header[i] << "\": " << json_value(rows[j][i]);
                os << '}' << (j + 1 < rows.size() ? "," : "") << '\n';
            }
            os << "]\n";
        }
    }

    static std::string json_value(const std::string& v) {
        if (v == "true" || v == "false") return v;
        char* end = nullptr;
        std::strtod(v.c_str(), &end);
        if (!v.empty() && *end == '\0') return v;
        std::string q = "\"";
        for (char ch : v) {
            if (ch == '"' || ch == '\\') q += '\\';
            q += ch;
        }
        return q + '"';
    }
};

int cmd_spectrum(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    Table t{{"graph6", "lambda1"}, {}};
    EigenOptions eo;
    eo.tol = c.tol;
    for (const Graph& g : graphs) t.rows.push_back({write_graph6(g), fmt(distance_spectral_radius(g, eo).lambda1)});
    Sink sink(c.out, out);
    t.write(sink.stream(), table_format(c, t.rows.size()));
    return 0;
}

int cmd_wiener(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    Table t{{"graph6", "wiener"}, {}};
    for (const Graph& g : graphs) t.rows.push_back({write_graph6(g), std::to_string(wiener(g))});
    Sink sink(c.out, out);
    t.write(sink.stream(), table_format(c, t.rows.size()));
    return 0;
}

int cmd_deficiency(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    Table t{{"graph6", "k", "deficiency", "barriers"}, {}};
    for (const Graph& g : graphs) {
        const auto r = deficiency(g, c.k);
        t.rows.push_back({write_graph6(g), std::to_string(c.k), std::to_string(r.value), std::to_string(r.barriers.size())});
    }
    // a single plain row reads better as just the deficiency
    if (t.rows.size() == 1 && table_format(c, 1) == "plain") {
        Sink sink(c.out, out);
        sink.stream() << t.rows[0][2] << '\n';
        return 0;
    }
    Sink sink(c.out, out);
    t.write(sink.stream(), table_format(c, t.rows.size()));
    return 0;
}

int cmd_barriers(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    Sink sink(c.out, out);
    auto& os = sink.stream();
    const bool many = graphs.size() > 1;
    for (const Graph& g : graphs) {
        const auto r = deficiency(g, c.k);
        if (many) os << write_graph6(g) << ":\n";
        for (std::size_t i = 0; i < r.barriers.size(); ++i) {
            const auto& st = r.barrier_stats[i];
            os << (many ? "  " : "") << to_string(r.barriers[i]) << " size=" << st.size << " i=" << st.isolated
               << " odd=" << st.odd_nontrivial << '\n';
        }
    }
    return 0;
}

int cmd_check(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    const PropertyQuery q = query(c);
    Table t{{"graph6", "property", "k", "d", "holds", "witness"}, {}};
    for (const Graph& g : graphs) {
        const auto v = decide_property(g, q);
        t.rows.push_back({write_graph6(g), to_string(q.property), std::to_string(q.k), std::to_string(q.d), tf(v.holds),
                          v.witness ? to_string(*v.witness) : ""});
    }
    Sink sink(c.out, out);
    if (t.rows.size() == 1 && table_format(c, 1) == "plain") {
        sink.stream() << t.rows[0][4];
        if (!t.rows[0][5].empty()) sink.stream() << " witness=" << t.rows[0][5];
        sink.stream() << '\n';
        return 0;
    }
    t.write(sink.stream(), table_format(c, t.rows.size()));
    return 0;
}

int cmd_oracle(const Config& c, std::istream& in, std::ostream& out) {
    const auto graphs = load_graphs(c, in);
    const PropertyQuery q = query(c);
    Table t{{"graph6", "deficiency_verdict", "direct_verdict", "agree"}, {}};
    int disagreements = 0;
    for (const Graph& g : graphs) {
        const bool a = decide_property(g, q).holds;
        const bool b = direct_property_oracle(g, q);
        disagreements += a != b;
        t.rows.push_back({write_graph6(g), tf(a), tf(b), tf(a == b)});
    }
    Sink sink(c.out, out);
    t.write(sink.stream(), c.format.empty() ? "csv" : c.format);
    return disagreements ? 1 : 0;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    if (c.n <= 0) throw Usage("--n is required");
    const auto graphs = c.all ? all_graphs(c.n) : connected_graphs(c.n);
    Sink sink(c.out, out);
    if (c.count_only) {
        sink.stream() << graphs.size() << '\n';
        return 0;
    }
    for (const Graph& g : graphs) sink.stream() << write_graph6(g) << '\n';
    return 0;
}

int cmd_verify(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const TheoremSpec spec = theorem_spec(c);
    const auto report = verify_theorem(spec, harness_source(c, spec.n, in), run_options(c));
    Sink sink(c.out, out);
    const std::string format = c.format.empty() ? "csv" : c.format;
    if (format == "json")
        sink.stream() << to_json(report);
    else if (format == "csv")
        sink.stream() << to_csv(report);
    (format == "plain" ? sink.stream() : err)
        << to_string(spec.id) << " n=" << spec.n << " k=" << spec.k << " d=" << spec.d << " branch=" << report.branch
        << " rows=" << report.rows.size() << " violations=" << report.violations
        << " exceptions=" << report.exceptions << " exhaustive=" << tf(report.exhaustive)
        << (report.note.empty() ? "" : " note=\"" + report.note + "\"") << '\n';
    return report.passed() ? 0 : 1;
}

int cmd_sharpness(const Config& c, std::ostream& out) {
    const TheoremSpec spec = theorem_spec(c);
    const auto r = sharpness_check(spec, run_options(c));
    Sink sink(c.out, out);
    auto& os = sink.stream();
    os << "threshold " << fmt(r.threshold) << '\n'
       << "exceptional_lambda1 " << fmt(r.exceptional_lambda1) << (r.attains_threshold ? " (attains)" : " (MISSES)")
       << '\n';
    for (const auto& w : r.checks)
        os << w.label << ' ' << write_graph6(w.graph) << " witness=" << to_string(w.witness)
           << " property_fails=" << tf(w.property_fails) << " witness_violates=" << tf(w.witness_violates) << '\n';
    os << (r.ok() ? "sharp" : "NOT SHARP") << '\n';
    return r.ok() ? 0 : 1;
}

int cmd_minimize(const Config& c, std::istream& in, std::ostream& out) {
    if (c.n <= 0) throw Usage("--n is required");
    const auto m = minimizer_search(query(c), harness_source(c, c.n, in), run_options(c));
    Sink sink(c.out, out);
    sink.stream() << write_graph6(m.graph) << ' ' << fmt(m.lambda1) << " candidates=" << m.candidates
                  << " ties=" << m.ties << '\n';
    return 0;
}

int cmd_lemmas(const Config& c, std::ostream& out) {
    std::vector<LemmaId> ids;
    if (c.lemma == "all")
        ids = {LemmaId::L2_6, LemmaId::L2_7, LemmaId::L2_8};
    else
        ids = {lemma_from_string(c.lemma)};
    LemmaRanges ranges;
    ranges.max_n = c.max_n;
    Sink sink(c.out, out);
    const std::string format = c.format.empty() ? "plain" : c.format;
    int failures = 0;
    for (LemmaId id : ids) {
        const auto r = lemma_numeric_check(id, ranges, run_options(c));
        failures += r.failures;
        if (format == "csv")
            sink.stream() << to_csv(r);
        else if (format == "json")
            sink.stream() << to_json(r);
        else
            sink.stream() << to_string(id) << " instances=" << r.instances.size() << " failures=" << r.failures << '\n';
    }
    return failures ? 1 : 0;
}

int cmd_g6(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
    // Re-encodes every line and reports lines that do not survive the round trip.
    std::vector<std::string> lines;
    if (!c.g6.empty()) {
        lines = c.g6;
    } else if (!c.file.empty()) {
        std::ifstream f;
        std::istream* src = &in;
        if (c.file != "-") {
            f.open(c.file);
            if (!f) throw Error(ErrorCode::io_error, "cannot read " + c.file);
            src = &f;
        }
        for (std::string line; std::getline(*src, line);) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    } else {
        // families and enumerations are written straight out
        for (const Graph& g : load_graphs(c, in)) out << write_graph6(g) << '\n';
        return 0;
    }
    Sink sink(c.out, out);
    int mismatches = 0;
    for (const auto& line : lines) {
        std::string body = line;
        if (body.rfind(">>graph6<<", 0) == 0) body.erase(0, 10);
        const std::string again = write_graph6(parse_graph6(body));
        if (again != body) {
            ++mismatches;
            err << "round-trip mismatch: " << body << " -> " << again << '\n';
        }
        sink.stream() << again << '\n';
    }
    err << lines.size() << " lines, " << mismatches << " mismatches\n";
    return mismatches ? 1 : 0;
}

void add_source(CLI::App* sub, Config& c) {
    sub->add_option("--g6", c.g6, "Graph in graph6 encoding (repeatable)");
    sub->add_option("--file", c.file, "File of graph6 lines, '-' for stdin");
    sub->add_option("--family", c.family,
                    "Extremal family: pendant-pair K1v(K_{n-3}+2K1), pendant-clique K1v(K_{n-2}+K1), "
                    "clique-odd K_sv(K_{n-2s-1}+(s+1)K1), clique-even K_sv(K_{n-2s}+sK1), "
                    "split-star S_{n,k}, general K_sv(K_{n1}+...+iK1)");
    sub->add_option("--enum-n", c.enum_n, "All connected graphs of this order (n <= 8)")->check(CLI::Range(1, 8));
    sub->add_option("--n", c.n, "Family order");
    sub->add_option("--s", c.s, "Clique core size for clique-odd, clique-even and general");
    sub->add_option("--k-clique", c.k_clique, "Clique size k of S_{n,k}");
    sub->add_option("--parts", c.parts, "Clique part sizes for general")->delimiter(',');
    sub->add_option("--isolated", c.isolated, "Isolated vertex count for general");
}

void add_numeric(CLI::App* sub, Config& c) {
    sub->add_option("--tol", c.tol, "Eigensolver residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--eps", c.eps, "Threshold comparison tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "Worker threads (default $KMS_WORKERS)")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* sub, Config& c) {
    sub->add_option("--out", c.out, "Write output here instead of stdout");
    sub->add_option("--format", c.format, "csv, json or plain")->check(CLI::IsMember({"csv", "json", "plain"}));
}

void add_query(CLI::App* sub, Config& c) {
    sub->add_option("--property", c.property, "perfect-k-matching, gfc, gbc or kd-critical");
    sub->add_option("--k", c.k, "k of the k-matching")->check(CLI::PositiveNumber);
    sub->add_option("--d", c.d, "d of k-d-criticality");
}

void add_theorem(CLI::App* sub, Config& c) {
    sub->add_option("--theorem", c.theorem, "T1..T5")->required();
    sub->add_option("--n", c.n, "Order of the graphs")->required();
    sub->add_option("--k", c.k, "k")->check(CLI::PositiveNumber);
    sub->add_option("--d", c.d, "d (T2 only)");
    sub->add_option("--file", c.file, "Graph6 file replacing the built-in source, '-' for stdin");
    sub->add_option("--samples", c.samples, "Random graphs in sampled mode (n > 8)");
    sub->add_option("--seed", c.seed, "Seed for sampled mode");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config c;
    c.workers = default_workers();

    CLI::App app{"Distance spectral radius and perfect k-matching toolkit", "kms"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "Distance spectral radius lambda1(D(G))");
    add_source(spectrum, c);
    add_numeric(spectrum, c);
    add_output(spectrum, c);

    auto* wien = app.add_subcommand("wiener", "Wiener index W(G), half the sum of D(G)");
    add_source(wien, c);
    add_output(wien, c);

    auto* def = app.add_subcommand("deficiency",
                                   "k-Berge-Tutte deficiency def_k(G) = max_S odd(G-S) + k i(G-S) - k|S| (odd k part only for odd k)");
    add_source(def, c);
    add_output(def, c);
    def->add_option("--k", c.k, "k")->check(CLI::PositiveNumber);

    auto* bar = app.add_subcommand("barriers", "k-barriers: every S attaining def_k(G)");
    add_source(bar, c);
    add_output(bar, c);
    bar->add_option("--k", c.k, "k")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand(
        "check", "Decide perfect k-matching, GFC_k, GBC_k or k-d-criticality from the subset characterization");
    add_source(check, c);
    add_query(check, c);
    add_output(check, c);

    auto* oracle = app.add_subcommand(
        "oracle", "Compare the deficiency verdict against a constructive k-matching search; exit 1 on disagreement");
    add_source(oracle, c);
    add_query(oracle, c);
    add_output(oracle, c);

    auto* enumerate = app.add_subcommand("enumerate", "Non-isomorphic connected graphs of order n in canonical form");
    enumerate->add_option("--n", c.n, "Order")->required();
    enumerate->add_flag("--all", c.all, "Include disconnected graphs");
    enumerate->add_flag("--count", c.count_only, "Print only the count");
    enumerate->add_option("--out", c.out, "Write output here instead of stdout");

    auto* verify = app.add_subcommand(
        "verify", "Check a distance spectral threshold theorem on every graph of order n; exit 1 on violations");
    add_theorem(verify, c);
    add_numeric(verify, c);
    add_output(verify, c);

    auto* sharp = app.add_subcommand(
        "sharpness", "Confirm the exceptional graph attains the threshold and fails the property through its barrier");
    add_theorem(sharp, c);
    add_numeric(sharp, c);
    sharp->add_option("--out", c.out, "Write output here instead of stdout");

    auto* minimize = app.add_subcommand("minimize", "Least lambda1(D(G)) among connected graphs lacking the property");
    minimize->add_option("--n", c.n, "Order")->required();
    minimize->add_option("--file", c.file, "Graph6 file replacing the built-in source, '-' for stdin");
    minimize->add_option("--samples", c.samples, "Random graphs in sampled mode (n > 8)");
    minimize->add_option("--seed", c.seed, "Seed for sampled mode");
    add_query(minimize, c);
    add_numeric(minimize, c);
    minimize->add_option("--out", c.out, "Write output here instead of stdout");

    auto* lemmas = app.add_subcommand(
        "lemmas", "Numeric sweeps of the family comparison inequalities and their equality cases");
    lemmas->add_option("--lemma", c.lemma, "L2.6, L2.7, L2.8 or all");
    lemmas->add_option("--max-n", c.max_n, "Largest order swept")->check(CLI::Range(2, 30));
    add_numeric(lemmas, c);
    add_output(lemmas, c);

    auto* g6 = app.add_subcommand("g6", "graph6 codec round trip; exit 1 when a line does not re-encode identically");
    add_source(g6, c);
    g6->add_option("--out", c.out, "Write output here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        // subcommand help lands here too
        if (e.get_exit_code() == 0) {
            for (auto* sub : app.get_subcommands()) out << sub->help();
            return 0;
        }
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    try {
        if (*spectrum) return cmd_spectrum(c, in, out);
        if (*wien) return cmd_wiener(c, in, out);
        if (*def) return cmd_deficiency(c, in, out);
        if (*bar) return cmd_barriers(c, in, out);
        if (*check) return cmd_check(c, in, out);
        if (*oracle) return cmd_oracle(c, in, out);
        if (*enumerate) return cmd_enumerate(c, out);
        if (*verify) return cmd_verify(c, in, out, err);
        if (*sharp) return cmd_sharpness(c, out);
        if (*minimize) return cmd_minimize(c, in, out);
        if (*lemmas) return cmd_lemmas(c, out);
        if (*g6) return cmd_g6(c, in, out, err);
    } catch (const Usage& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace kms::cli
