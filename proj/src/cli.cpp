#include "turan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "turan/campaign.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

namespace turan {

namespace {

struct CommonFlags {
    int jobs = 1;
    std::string cache;
    std::string out;
    std::string format = "lines";
    std::string graph6;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--cache", flags.cache, "Result cache (JSON lines)");
    cmd->add_option("--out", flags.out, "Also write the machine output here");
    cmd->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "lines"}));
    cmd->add_option("--graph6", flags.graph6, "Read host graphs from a graph6 file");
}

/// A small result table; `bare` columns print without their key in line mode.
struct Table {
    std::vector<std::string> columns;
    std::vector<bool> bare;
    std::vector<std::vector<std::string>> rows;

    std::string render(const std::string& format) const {
        std::ostringstream s;
        if (format == "csv") {
            for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << columns[i];
            s << '\n';
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
                s << '\n';
            }
            return s.str();
        }
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) s << ' ';
                if (!(i < bare.size() && bare[i])) s << columns[i] << '=';
                s << row[i];
            }
            s << '\n';
        }
        return s.str();
    }
};

void emit(const Table& table, const CommonFlags& flags, std::ostream& out) {
    const std::string text = table.render(flags.format);
    out << text;
    if (!flags.out.empty()) {
        std::ofstream file(flags.out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot write " + flags.out);
        file << text;
    }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n ") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

/// Host graphs: the positional family when given, else the graph6 file.
std::vector<std::pair<std::string, Graph>> hosts(const std::string& positional, const CommonFlags& flags) {
    std::vector<std::pair<std::string, Graph>> out;
    if (!positional.empty()) out.emplace_back(positional, build(positional));
    if (!flags.graph6.empty())
        for (const Graph& g : read_graph6_file(flags.graph6)) out.emplace_back(write_graph6(g), g);
    if (out.empty()) throw CLI::ValidationError("host", "give a host graph or --graph6 FILE");
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Turán numbers: counting, exhaustive search and verification campaigns", "turan"};
    app.require_subcommand(1);
    CommonFlags flags;

    std::string h, g, f, spec, config_path;
    int n = 0, n_lo = 0, n_hi = 0, r = 0, l = 0;
    bool induced = false, witnesses = false, allow_degenerate = false;

    auto* count = app.add_subcommand("count", "Copies of H in G (or in every graph of --graph6)");
    count->add_option("H", h, "Pattern family")->required();
    count->add_option("G", g, "Host family");
    count->add_flag("--induced", induced, "Count induced copies");
    add_common(count, flags);

    auto* construct = app.add_subcommand("construct", "Build a family member and print it as graph6");
    construct->add_option("SPEC", spec)->required();
    add_common(construct, flags);

    auto* ex = app.add_subcommand("ex", "Exact ex(N, H, F) by exhaustive search");
    ex->add_option("N", n)->required();
    ex->add_option("H", h)->required();
    ex->add_option("F", f)->required();
    ex->add_flag("--witnesses", witnesses, "List the extremal graphs (graph6)");
    ex->add_flag("--allow-degenerate", allow_degenerate, "Permit H containing F");
    add_common(ex, flags);

    auto* goodness = app.add_subcommand("goodness", "Compare ex(n, H, F) with the Turán graph for NLO <= n <= NHI");
    goodness->add_option("H", h)->required();
    goodness->add_option("F", f)->required();
    goodness->add_option("NLO", n_lo)->required();
    goodness->add_option("NHI", n_hi)->required();
    goodness->add_flag("--allow-degenerate", allow_degenerate, "Permit H containing F");
    add_common(goodness, flags);

    auto* optimize = app.add_subcommand("optimize", "Best complete R-partite host on N vertices for H");
    optimize->add_option("H", h)->required();
    optimize->add_option("R", r)->required();
    optimize->add_option("N", n)->required();
    add_common(optimize, flags);

    auto* spectral = app.add_subcommand("spectral", "Check copies(P_L) <= walks <= n mu^(L-1)/2 on G");
    std::vector<std::string> spectral_args;
    spectral->add_option("args", spectral_args, "Host family (omit with --graph6) and path order")
        ->required()
        ->expected(1, 2);
    add_common(spectral, flags);

    auto* verify = app.add_subcommand("verify", "Run a campaign file");
    verify->add_option("CONFIG", config_path)->required();
    add_common(verify, flags);

    std::vector<std::string> argv_copy = args;
    std::vector<char*> argv;
    for (std::string& a : argv_copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "turan: " << e.what() << "\n" << "run 'turan --help' for usage\n";
        return 2;
    }

    try {
        SearchOptions options;
        options.jobs = flags.jobs;
        options.allow_degenerate = allow_degenerate;

        if (count->parsed()) {
            const Graph pattern = build(h);
            Table t{{"host", "copies"}, {}, {}};
            const auto host_list = hosts(g, flags);
            const bool single = host_list.size() == 1 && !g.empty();
            if (single) t = Table{{"copies"}, {}, {}};
            for (const auto& [name, host] : host_list) {
                const std::uint64_t c = induced ? count_induced(pattern, host) : count_subgraph(pattern, host).copies;
                if (single)
                    t.rows.push_back({std::to_string(c)});
                else
                    t.rows.push_back({csv_quote(name), std::to_string(c)});
            }
            emit(t, flags, out);
            return 0;
        }
        if (construct->parsed()) {
            const Graph built = build(spec);
            std::string edges;
            for (Edge e : built.edges())
                edges += (edges.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
            Table t{{"graph6", "n", "m", "aut", "edges"}, {true}, {}};
            t.rows.push_back({write_graph6(built), std::to_string(built.order()), std::to_string(built.size()),
                              std::to_string(canonical_form(built).aut_count),
                              flags.format == "csv" ? csv_quote(edges) : "[" + edges + "]"});
            emit(t, flags, out);
            return 0;
        }
        if (ex->parsed()) {
            const ExtremalRecord rec = ex_generalized(n, h, f, options);
            Table t{{"value", "turan", "unique"}, {}, {}};
            t.rows.push_back({std::to_string(rec.value), std::to_string(rec.turan_value), yes_no(rec.unique_extremal)});
            emit(t, flags, out);
            if (witnesses) {
                out << "witnesses=" << rec.witness_count << "\n";
                for (const std::string& w : rec.witnesses) out << w << "\n";
            }
            return 0;
        }
        if (goodness->parsed()) {
            const GoodnessVerdict verdict = check_turan_good(h, f, n_lo, n_hi, options);
            Table t{{"n", "value", "turan", "equal", "unique"}, {}, {}};
            for (const GoodnessRow& row : verdict.rows)
                t.rows.push_back({std::to_string(row.n), std::to_string(row.value), std::to_string(row.turan_value),
                                  yes_no(row.equal), yes_no(row.unique)});
            emit(t, flags, out);
            if (flags.format == "lines")
                out << "threshold=" << (verdict.threshold ? std::to_string(*verdict.threshold) : "none") << "\n";
            return 0;
        }
        if (optimize->parsed()) {
            if (n < 1) throw std::invalid_argument("N must be positive");
            const MultipartiteOptimum opt = optimize_multipartite(build(h), r, static_cast<std::uint64_t>(n));
            std::string vectors;
            for (const ClassVector& cv : opt.optimal) vectors += (vectors.empty() ? "" : " ") + cv.to_string();
            Table t{{"optimal", "value", "balanced"}, {true}, {}};
            t.rows.push_back({flags.format == "csv" ? csv_quote(vectors) : vectors, opt.value.str(),
                              yes_no(opt.balanced_is_optimal)});
            emit(t, flags, out);
            return 0;
        }
        if (spectral->parsed()) {
            if (spectral_args.size() == 2) g = spectral_args[0];
            try {
                l = std::stoi(spectral_args.back());
            } catch (const std::exception&) {
                throw CLI::ValidationError("L", "path order must be an integer");
            }
            Table t{{"host", "mu", "paths", "walks", "bound", "holds"}, {}, {}};
            bool all = true;
            for (const auto& [name, host] : hosts(g, flags)) {
                const PathBoundCheck check = check_path_bound(host, l);
                std::ostringstream mu, bound;
                mu << std::setprecision(12) << spectral_radius(host).mu;
                bound << std::setprecision(12) << check.bound;
                t.rows.push_back({csv_quote(name), mu.str(), check.path_copies.str(), check.walks.str(), bound.str(),
                                  yes_no(check.holds)});
                all = all && check.holds;
            }
            emit(t, flags, out);
            return all ? 0 : 1;
        }
        if (verify->parsed()) {
            CampaignConfig config = load_campaign_config(config_path);
            if (!flags.cache.empty()) config.cache_path = flags.cache;
            if (!flags.out.empty()) config.output_path = flags.out;
            if (verify->count("--jobs")) config.jobs = flags.jobs;
            const CampaignOutcome outcome = run_campaign(config, &err);
            if (flags.format == "csv") {
                out << rows_to_csv(outcome.rows);
            } else {
                for (const ResultRow& row : outcome.rows)
                    out << row.experiment << " n=" << row.n << " value=" << row.value << " reference=" << row.reference
                        << " status=" << status_name(row.status) << "\n";
                out << "rows=" << outcome.rows.size() << " computed=" << outcome.computed
                    << " restored=" << outcome.restored << " hard_failure=" << yes_no(outcome.hard_failure) << "\n";
            }
            return outcome.hard_failure ? 1 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "turan: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "turan: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "turan: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "turan: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "turan: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace turan
