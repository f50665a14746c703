#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphpoly/bipartite.hpp"
#include "graphpoly/domination.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/graph_io.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/neighborhood.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly::cli {

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") return read_all(stdin_stream);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open file: " + path);
    return read_all(file);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// graph6 input is one non-blank line; anything else non-blank is an error.
Graph parse_g6_document(const std::string& content) {
    std::string_view rest = content;
    std::string_view found;
    bool have = false;
    while (!rest.empty()) {
        std::size_t eol = rest.find('\n');
        std::string_view line = trim(rest.substr(0, eol));
        rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
        if (line.empty()) continue;
        if (have) throw ParseError("expected a single graph6 line", 0);
        found = line;
        have = true;
    }
    if (!have) throw ParseError("empty graph6 input", 0);
    return parse_graph6(found);
}

// Digits and '#' cannot start a graph6 line (its alphabet is 63..126), so a
// leading digit or comment marker means edge-list format.
Graph load_graph(const std::string& path, const std::string& format, std::istream& stdin_stream) {
    std::string content = read_input(path, stdin_stream);
    std::string fmt = format;
    if (fmt == "auto") {
        std::size_t i = content.find_first_not_of(" \t\r\n");
        if (i == std::string::npos) throw ParseError("empty input", 0);
        char c = content[i];
        fmt = (c == '#' || (c >= '0' && c <= '9')) ? "edges" : "g6";
    }
    if (fmt == "edges") return parse_edge_list(content);
    return parse_g6_document(content);
}

int to_vertex_count(unsigned long long value) {
    if (value > static_cast<unsigned long long>(kVertexCapacityCeiling))
        throw CapacityError("vertex count " + std::to_string(value) + " exceeds the graph6 ceiling of " +
                            std::to_string(kVertexCapacityCeiling));
    return static_cast<int>(value);
}

void print_census_text(std::ostream& out, const Graph& g, const BipartiteCensus& census) {
    out << "n = " << g.vertex_count() << ", m = " << g.edge_count() << "\n";
    for (const auto& [pq, count] : census.counts)
        out << "K(" << pq.first << "," << pq.second << "): " << count.str() << "\n";
    out << "a = " << census.a.str() << "\n";
    out << "b = " << census.b.str() << "\n";
}

nlohmann::ordered_json census_json_fields(const Graph& g, const BipartiteCensus& census) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [pq, count] : census.counts) {
        nlohmann::ordered_json entry;
        entry["p"] = pq.first;
        entry["q"] = pq.second;
        entry["count"] = count.str();
        entries.push_back(entry);
    }
    doc["counts"] = entries;
    doc["a"] = census.a.str();
    doc["b"] = census.b.str();
    return doc;
}

struct BatchTotals {
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    long long malformed = 0;
    long long over_capacity = 0;
};

int run_batch_verify(const std::string& file, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string content = read_input(file, in);
    BatchTotals totals;
    std::string_view rest = content;
    long long lineno = 0;
    while (!rest.empty()) {
        std::size_t eol = rest.find('\n');
        std::string_view line = trim(rest.substr(0, eol));
        rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
        ++lineno;
        if (line.empty()) continue;
        try {
            Graph g = parse_graph6(line);
            VerificationReport report = verify_all(g);
            ++totals.checked;
            if (report.all_pass()) {
                ++totals.passed;
            } else {
                ++totals.failed;
                out << "line " << lineno << ": FAIL";
                const char* sep = " (";
                for (const auto& r : report.records) {
                    if (!r.pass) {
                        out << sep << r.name;
                        sep = ", ";
                    }
                }
                out << ")\n";
            }
        } catch (const ParseError& e) {
            ++totals.malformed;
            err << "line " << lineno << ": " << e.what() << "\n";
        } catch (const CapacityError& e) {
            ++totals.over_capacity;
            err << "line " << lineno << ": " << e.what() << "\n";
        }
    }
    out << "checked " << totals.checked << " graphs: " << totals.passed << " passed, "
        << totals.failed << " failed";
    if (totals.malformed > 0) out << ", " << totals.malformed << " malformed";
    if (totals.over_capacity > 0) out << ", " << totals.over_capacity << " over capacity";
    out << "\n";
    if (totals.malformed > 0) return 2;
    if (totals.over_capacity > 0) return 3;
    return totals.failed > 0 ? 1 : 0;
}

int apply_capacity_env(std::ostream& err) {
    const char* env = std::getenv("DOMPOLY_MAX_N");
    if (env == nullptr) return 0;
    std::string_view text(env);
    int value = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), value);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
        err << "error: DOMPOLY_MAX_N must be an integer, got \"" << text << "\"\n";
        return 2;
    }
    try {
        set_vertex_capacity(value);
    } catch (const InputError& e) {
        err << "error: DOMPOLY_MAX_N: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    if (int rc = apply_capacity_env(err); rc != 0) return rc;

    CLI::App app{"domination and neighborhood polynomials, biclique censuses, identity checks",
                 "graphpoly"};
    app.require_subcommand(1);

    struct {
        std::string file;
        std::string format = "auto";
    } dompoly, nbpoly, census, verify, altsum, batch;
    std::string method = "direct";
    bool census_complement = false;
    bool census_json = false;
    bool verify_json = false;
    bool verify_skip_altsum = false;

    auto add_input = [](CLI::App* cmd, auto& opts, bool with_format = true) {
        cmd->add_option("file", opts.file, "input graph file, or - for stdin")->required();
        if (with_format)
            cmd->add_option("--format", opts.format, "input format (default: auto-detect)")
                ->check(CLI::IsMember({"auto", "g6", "edges"}));
    };

    CLI::App* cmd_dompoly = app.add_subcommand("dompoly", "print D(G,x) and the dominating-set count");
    add_input(cmd_dompoly, dompoly);

    CLI::App* cmd_nbpoly = app.add_subcommand("nbpoly", "print N(G,x)");
    add_input(cmd_nbpoly, nbpoly);
    cmd_nbpoly->add_option("--method", method, "direct, inclexcl, or bipartite")
        ->check(CLI::IsMember({"direct", "inclexcl", "bipartite"}));

    CLI::App* cmd_census = app.add_subcommand("census", "count complete bipartite subgraphs");
    add_input(cmd_census, census);
    cmd_census->add_flag("--complement", census_complement,
                         "also census the complement and predict d(G) from it");
    cmd_census->add_flag("--json", census_json, "emit JSON");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check every identity on one graph");
    add_input(cmd_verify, verify);
    cmd_verify->add_flag("--json", verify_json, "emit the report as JSON");
    cmd_verify->add_flag("--skip-altsum", verify_skip_altsum,
                         "skip the 2^m edge-subset alternating sum");

    CLI::App* cmd_altsum = app.add_subcommand(
        "altsum", "print the alternating edge-subset sum of N(G-F,x)");
    add_input(cmd_altsum, altsum);

    unsigned long long gen_path_n = 0, gen_cycle_n = 0, gen_empty_n = 0;
    std::vector<unsigned long long> gen_gnp, gen_kpq;
    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    CLI::Option* opt_gnp =
        cmd_gen->add_option("--gnp", gen_gnp, "n p_num p_den seed")->expected(4);
    CLI::Option* opt_kpq =
        cmd_gen->add_option("--complete-bipartite", gen_kpq, "p q")->expected(2);
    CLI::Option* opt_path = cmd_gen->add_option("--path", gen_path_n, "path on n vertices");
    CLI::Option* opt_cycle = cmd_gen->add_option("--cycle", gen_cycle_n, "cycle on n vertices");
    CLI::Option* opt_empty = cmd_gen->add_option("--empty", gen_empty_n, "edgeless graph on n vertices");

    CLI::App* cmd_batch = app.add_subcommand("batch-verify", "verify one graph6 line per input line");
    add_input(cmd_batch, batch, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_dompoly->parsed()) {
            Graph g = load_graph(dompoly.file, dompoly.format, in);
            IntPoly d = domination_polynomial(g);
            out << "D = " << d.str() << "\n";
            out << "d = " << d.eval(CheckedInt(1)).str() << "\n";
            return 0;
        }
        if (cmd_nbpoly->parsed()) {
            Graph g = load_graph(nbpoly.file, nbpoly.format, in);
            IntPoly np;
            if (method == "direct")
                np = neighborhood_polynomial_direct(g);
            else if (method == "inclexcl")
                np = neighborhood_polynomial_inclusion_exclusion(g);
            else
                np = neighborhood_polynomial_via_bipartite(g);
            out << "N = " << np.str() << "\n";
            return 0;
        }
        if (cmd_census->parsed()) {
            Graph g = load_graph(census.file, census.format, in);
            BipartiteCensus primary = count_complete_bipartite_subgraphs(g);
            if (!census_complement) {
                if (census_json) {
                    out << census_to_json(g, primary) << "\n";
                } else {
                    print_census_text(out, g, primary);
                }
                return 0;
            }
            Graph gc = g.complement();
            BipartiteCensus comp = count_complete_bipartite_subgraphs(gc);
            CheckedInt predicted = dominating_count_via_bipartite(g);
            if (census_json) {
                nlohmann::ordered_json doc;
                doc["schema"] = 1;
                doc["census"] = census_json_fields(g, primary);
                doc["complement_census"] = census_json_fields(gc, comp);
                doc["predicted_d"] = predicted.str();
                out << doc.dump() << "\n";
            } else {
                print_census_text(out, g, primary);
                out << "complement census:\n";
                print_census_text(out, gc, comp);
                out << "predicted d = " << predicted.str() << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            Graph g = load_graph(verify.file, verify.format, in);
            VerifyOptions options;
            options.skip_altsum = verify_skip_altsum;
            VerificationReport report = verify_all(g, options);
            if (verify_json)
                out << report_to_json(report) << "\n";
            else
                out << report_to_text(report);
            return report.all_pass() ? 0 : 1;
        }
        if (cmd_altsum->parsed()) {
            Graph g = load_graph(altsum.file, altsum.format, in);
            out << "S = " << alternating_edge_subset_sum(g).str() << "\n";
            return 0;
        }
        if (cmd_gen->parsed()) {
            int modes = (opt_gnp->count() > 0) + (opt_kpq->count() > 0) + (opt_path->count() > 0) +
                        (opt_cycle->count() > 0) + (opt_empty->count() > 0);
            if (modes != 1) {
                err << "error: gen requires exactly one of --gnp, --complete-bipartite, --path, "
                       "--cycle, --empty\n";
                return 2;
            }
            Graph g;
            if (opt_gnp->count() > 0) {
                g = random_gnp(to_vertex_count(gen_gnp[0]), gen_gnp[1], gen_gnp[2], gen_gnp[3]);
            } else if (opt_kpq->count() > 0) {
                g = complete_bipartite_graph(to_vertex_count(gen_kpq[0]), to_vertex_count(gen_kpq[1]));
            } else if (opt_path->count() > 0) {
                g = path_graph(to_vertex_count(gen_path_n));
            } else if (opt_cycle->count() > 0) {
                g = cycle_graph(to_vertex_count(gen_cycle_n));
            } else {
                g = empty_graph(to_vertex_count(gen_empty_n));
            }
            out << write_graph6(g) << "\n";
            return 0;
        }
        if (cmd_batch->parsed()) {
            return run_batch_verify(batch.file, in, out, err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (at " << e.position() << ")\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no subcommand handled\n";
    return 2;
}

}  // namespace graphpoly::cli
