#include "turan/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "turan/canonical.hpp"
#include "turan/chromatic.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/search.hpp"
#include "turan/spectral.hpp"

namespace turan {

namespace fs = std::filesystem;
using nlohmann::json;

std::string status_name(RowStatus status) {
    switch (status) {
        case RowStatus::Pass: return "pass";
        case RowStatus::Fail: return "fail";
        case RowStatus::ReportOnly: return "report-only";
    }
    return "?";
}

std::string kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Goodness: return "goodness";
        case ExperimentKind::Ex: return "ex";
        case ExperimentKind::Optimize: return "optimize";
        case ExperimentKind::Identity: return "identity";
        case ExperimentKind::Spectral: return "spectral";
        case ExperimentKind::K0: return "k0";
    }
    return "?";
}

namespace {

ExperimentKind kind_from_name(const std::string& name, const std::string& where) {
    for (ExperimentKind k : {ExperimentKind::Goodness, ExperimentKind::Ex, ExperimentKind::Optimize,
                             ExperimentKind::Identity, ExperimentKind::Spectral, ExperimentKind::K0})
        if (kind_name(k) == name) return k;
    throw std::invalid_argument(where + ": unknown experiment kind '" + name + "'");
}

RowStatus status_from_name(const std::string& name) {
    if (name == "pass") return RowStatus::Pass;
    if (name == "fail") return RowStatus::Fail;
    if (name == "report-only") return RowStatus::ReportOnly;
    throw std::invalid_argument("unknown status '" + name + "'");
}

bool exhaustive(ExperimentKind kind) {
    return kind == ExperimentKind::Goodness || kind == ExperimentKind::Ex || kind == ExperimentKind::Identity ||
           kind == ExperimentKind::Spectral;
}

std::string resolve(const std::string& path, const std::string& base_dir) {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).lexically_normal().string();
}

void check_family(const std::string& text, const std::string& where) {
    try {
        build(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

}  // namespace

CampaignConfig parse_campaign_config(const std::string& text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("campaign config is not valid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw std::invalid_argument("campaign config must be a JSON object");

    CampaignConfig config;
    try {
        config.cache_path = resolve(doc.value("cache", std::string()), base_dir);
        config.output_path = resolve(doc.value("output", std::string()), base_dir);
        config.jobs = doc.value("jobs", 1);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("campaign config header: ") + e.what());
    }
    if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

    const json experiments = doc.value("experiments", json::array());
    if (!experiments.is_array()) throw std::invalid_argument("experiments must be a list");

    std::set<std::string> ids;
    for (std::size_t i = 0; i < experiments.size(); ++i) {
        const std::string where = "experiments[" + std::to_string(i) + "]";
        const json& item = experiments[i];
        if (!item.is_object()) throw std::invalid_argument(where + ": expected an object");
        Experiment ex;
        try {
            ex.id = item.at("id").get<std::string>();
            ex.kind = kind_from_name(item.at("kind").get<std::string>(), where);
            ex.h = item.value("H", std::string());
            ex.f = item.value("F", std::string());
            ex.n_lo = item.value("n_lo", 0);
            ex.n_hi = item.value("n_hi", ex.n_lo);
            ex.options = item.value("options", json::object());
        } catch (const json::exception& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
        if (ex.id.empty() || !ids.insert(ex.id).second)
            throw std::invalid_argument(where + ": experiment ids must be nonempty and unique");
        if (!ex.options.is_object()) throw std::invalid_argument(where + ".options: expected an object");

        const bool needs_h = ex.kind == ExperimentKind::Goodness || ex.kind == ExperimentKind::Ex ||
                             ex.kind == ExperimentKind::Optimize || ex.kind == ExperimentKind::K0;
        const bool needs_f = ex.kind == ExperimentKind::Goodness || ex.kind == ExperimentKind::Ex;
        if (needs_h && ex.h.empty()) throw std::invalid_argument(where + ": H is required for " + kind_name(ex.kind));
        if (needs_f && ex.f.empty()) throw std::invalid_argument(where + ": F is required for " + kind_name(ex.kind));
        if (!ex.h.empty()) check_family(ex.h, where + ".H");
        if (!ex.f.empty()) check_family(ex.f, where + ".F");

        if (ex.kind != ExperimentKind::K0 && !(ex.kind == ExperimentKind::Spectral && !ex.h.empty())) {
            const int cap = exhaustive(ex.kind) ? kMaxExhaustiveOrder : static_cast<int>(kMaxCompositionTotal);
            if (ex.n_lo < 1 || ex.n_lo > ex.n_hi || ex.n_hi > cap)
                throw std::invalid_argument(where + ": need 1 <= n_lo <= n_hi <= " + std::to_string(cap));
        }
        config.experiments.push_back(std::move(ex));
    }
    return config;
}

CampaignConfig load_campaign_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open campaign config " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const fs::path p(path);
    const std::string base = p.has_parent_path() ? p.parent_path().string() : ".";
    CampaignConfig config = parse_campaign_config(buffer.str(), base);
    const std::string stem = p.stem().string();
    if (config.cache_path.empty()) {
        const char* dir = std::getenv(kCacheDirEnv);
        config.cache_path = ((dir && *dir) ? fs::path(dir) : fs::path(base)) / (stem + ".cache.jsonl");
    }
    if (config.output_path.empty()) config.output_path = (fs::path(base) / (stem + ".csv")).string();
    return config;
}

// ---------------------------------------------------------------------------
// Rows, cache and CSV

nlohmann::ordered_json row_to_json(const ResultRow& row) {
    nlohmann::ordered_json j;
    j["key"] = row.key;
    j["experiment"] = row.experiment;
    j["kind"] = row.kind;
    j["H"] = row.h;
    j["F"] = row.f;
    j["n"] = row.n;
    j["value"] = row.value;
    j["reference"] = row.reference;
    j["equal"] = row.equal;
    j["detail"] = row.detail;
    j["status"] = status_name(row.status);
    j["timestamp"] = row.timestamp;
    j["version"] = row.version;
    return j;
}

ResultRow row_from_json(const json& j) {
    ResultRow row;
    row.key = j.at("key").get<std::string>();
    row.experiment = j.at("experiment").get<std::string>();
    row.kind = j.at("kind").get<std::string>();
    row.h = j.at("H").get<std::string>();
    row.f = j.at("F").get<std::string>();
    row.n = j.at("n").get<int>();
    row.value = j.at("value").get<std::string>();
    row.reference = j.at("reference").get<std::string>();
    row.equal = j.at("equal").get<std::string>();
    row.detail = j.at("detail").get<std::string>();
    row.status = status_from_name(j.at("status").get<std::string>());
    row.timestamp = j.at("timestamp").get<std::string>();
    row.version = j.at("version").get<std::string>();
    return row;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "experiment,kind,H,F,n,value,reference,equal,status,detail,timestamp,version\n";
    for (const ResultRow& r : rows) {
        out << csv_field(r.experiment) << ',' << r.kind << ',' << csv_field(r.h) << ',' << csv_field(r.f) << ','
            << r.n << ',' << csv_field(r.value) << ',' << csv_field(r.reference) << ',' << r.equal << ','
            << status_name(r.status) << ',' << csv_field(r.detail) << ',' << r.timestamp << ',' << r.version
            << '\n';
    }
    return out.str();
}

std::vector<ResultRow> read_cache(const std::string& path) {
    std::vector<ResultRow> rows;
    std::ifstream in(path, std::ios::binary);
    if (!in) return rows;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (!text.empty() && text.back() != '\n')
        throw CacheCorruption("cache " + path + " ends with an incomplete record; refusing to use it");

    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    std::set<std::pair<std::string, int>> seen;
    while (std::getline(lines, line)) {
        ++number;
        if (line.empty()) continue;
        try {
            rows.push_back(row_from_json(json::parse(line)));
        } catch (const std::exception& e) {
            throw CacheCorruption("cache " + path + " line " + std::to_string(number) + " is corrupt: " + e.what());
        }
        if (!seen.emplace(rows.back().experiment, rows.back().n).second)
            throw CacheCorruption("cache " + path + " line " + std::to_string(number) + " repeats experiment '" +
                                  rows.back().experiment + "' at n=" + std::to_string(rows.back().n));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Experiment evaluation

namespace {

std::string hex(const std::vector<std::uint8_t>& bytes) {
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (std::uint8_t b : bytes) out << std::setw(2) << static_cast<int>(b);
    return out.str();
}

std::string canonical_hex(const std::string& family) {
    return family.empty() ? "-" : hex(canonical_form(build(family)).bytes);
}

std::string row_key(const Experiment& ex, int n) {
    return kind_name(ex.kind) + "|" + canonical_hex(ex.h) + "|" + canonical_hex(ex.f) + "|" + std::to_string(n) +
           "|" + ex.options.dump();
}

std::string to_text(const BigInt& v) { return v.str(); }
std::string to_text(bool b) { return b ? "true" : "false"; }

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RowStatus hard(bool ok) { return ok ? RowStatus::Pass : RowStatus::Fail; }

SearchOptions search_options(const Experiment& ex, int jobs) {
    SearchOptions opts;
    opts.jobs = jobs;
    opts.allow_degenerate = ex.options.value("allow_degenerate", false);
    return opts;
}

/// Turán graph T_{chi(F)-1}(n), optionally with one edge added inside its
/// largest class.
Graph reference_construction(const Experiment& ex, const Graph& f, int n) {
    const std::string name = ex.options.value("construction", std::string("turan"));
    const int parts = std::min(chromatic_number(f) - 1, n);
    Graph host = turan_graph(parts, n);
    if (name == "turan") return host;
    if (name == "turan_plus_edge") {
        if (n < parts + 1) throw std::invalid_argument("turan_plus_edge needs a class with two vertices");
        return host.with_edge(0, 1);
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

void evaluate_extremal(const Experiment& ex, int n, int jobs, ResultRow& row) {
    const Graph h = build(ex.h);
    const Graph f = build(ex.f);
    const ExtremalRecord rec = ex_generalized(n, h, f, search_options(ex, jobs));
    const Graph host = ex.kind == ExperimentKind::Goodness ? turan_graph(std::min(rec.turan_parts, n), n)
                                                           : reference_construction(ex, f, n);
    const bool host_free = !contains_subgraph(f, host);
    const std::uint64_t reference = h.order() <= n ? count_subgraph(h, host).copies : 0;

    row.value = std::to_string(rec.value);
    row.reference = std::to_string(reference);
    row.equal = to_text(rec.value == reference);
    std::ostringstream detail;
    detail << "unique=" << to_text(rec.unique_extremal) << " witnesses=" << rec.witness_count
           << " searched=" << rec.graphs_searched << " construction_f_free=" << to_text(host_free);
    if (!rec.witnesses.empty()) detail << " first_witness=" << rec.witnesses.front();
    row.detail = detail.str();

    // A construction that is F-free bounds ex(n,H,F) from below at every n;
    // equality is only claimed for n large enough, so it is asserted only on request.
    bool ok = host_free && rec.value >= reference;
    if (ex.options.value("expect_equal", false)) ok = ok && rec.value == reference;
    row.status = hard(ok);
}

void evaluate_optimize(const Experiment& ex, int n, ResultRow& row) {
    if (!ex.options.contains("parts")) throw std::invalid_argument(ex.id + ": optimize needs options.parts");
    const int parts = ex.options.at("parts").get<int>();
    const MultipartiteOptimum opt = optimize_multipartite(build(ex.h), parts, static_cast<std::uint64_t>(n));
    row.value = to_text(opt.value);
    row.reference = to_text(opt.balanced_value);
    row.equal = to_text(opt.balanced_is_optimal);
    std::string vectors;
    for (const ClassVector& cv : opt.optimal) vectors += (vectors.empty() ? "" : " ") + cv.to_string();
    row.detail = "optimal=" + vectors;
    row.status = ex.options.contains("expect_balanced")
                     ? hard(ex.options.at("expect_balanced").get<bool>() == opt.balanced_is_optimal)
                     : RowStatus::ReportOnly;
}

/// All class vectors (any number of parts) summing to n.
void partitions(int remaining, int cap, std::vector<std::uint64_t>& prefix,
                std::vector<std::vector<std::uint64_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int s = std::min(cap, remaining); s >= 1; --s) {
        prefix.push_back(static_cast<std::uint64_t>(s));
        partitions(remaining - s, s, prefix, out);
        prefix.pop_back();
    }
}

void evaluate_identity(const Experiment& ex, int n, int jobs, ResultRow& row) {
    const std::string identity = ex.options.value("identity", std::string());
    std::atomic<std::uint64_t> checked{0};
    std::atomic<std::uint64_t> violations{0};
    std::atomic<std::uint64_t> tight{0};
    std::uint64_t hosts = 0;
    std::uint64_t host_violations = 0;

    if (identity == "pair_count") {
        if (n < 3) throw std::invalid_argument(ex.id + ": pair_count needs n >= 3");
        enumerate_graphs(
            n, {},
            [&](const Graph& g, int) {
                const std::int64_t slack = pair_count_slack(g);
                ++checked;
                if (slack < 0) ++violations;
                if (slack == 0) ++tight;
            },
            jobs);
        std::vector<std::vector<std::uint64_t>> all;
        std::vector<std::uint64_t> prefix;
        partitions(n, n, prefix, all);
        for (const auto& sizes : all) {
            ++hosts;
            if (pair_count_slack(complete_multipartite(ClassVector(sizes))) != 0) ++host_violations;
        }
        row.detail = "zero_slack_graphs=" + std::to_string(tight.load()) +
                     " multipartite_hosts=" + std::to_string(hosts) +
                     " multipartite_nonzero=" + std::to_string(host_violations);
    } else if (identity == "path_cycle") {
        const int k = ex.options.value("k", 2);
        if (k < 2 || 2 * k > kMaxVertices) throw std::invalid_argument(ex.id + ": path_cycle needs 2 <= k <= 8");
        const Graph cycle = cycle_graph(2 * k);
        const Graph path = path_graph(2 * k);
        enumerate_graphs(
            n, {},
            [&](const Graph& g, int) {
                const std::uint64_t cycles = count_subgraph(cycle, g).copies;
                const std::uint64_t paths = count_subgraph(path, g).copies;
                ++checked;
                if (2 * static_cast<std::uint64_t>(k) * cycles > paths) ++violations;
                if (2 * static_cast<std::uint64_t>(k) * cycles == paths) ++tight;
            },
            jobs);
        for (int b = 1; 2 * b <= n; ++b) {
            ++hosts;
            const Graph kab = complete_multipartite(ClassVector({static_cast<std::uint64_t>(n - b),
                                                                 static_cast<std::uint64_t>(b)}));
            if (2 * static_cast<std::uint64_t>(k) * count_subgraph(cycle, kab).copies !=
                count_subgraph(path, kab).copies)
                ++host_violations;
        }
        row.detail = "equality_graphs=" + std::to_string(tight.load()) +
                     " bipartite_hosts=" + std::to_string(hosts) +
                     " bipartite_unequal=" + std::to_string(host_violations);
    } else {
        throw std::invalid_argument(ex.id + ": options.identity must be pair_count or path_cycle");
    }
    row.value = std::to_string(checked.load());
    row.reference = std::to_string(violations.load() + host_violations);
    row.equal = to_text(violations.load() + host_violations == 0);
    row.status = hard(violations.load() + host_violations == 0);
}

std::vector<int> path_lengths(const Experiment& ex) {
    const json l = ex.options.value("l", json::array({3, 4, 5}));
    std::vector<int> out;
    if (l.is_number_integer())
        out.push_back(l.get<int>());
    else
        out = l.get<std::vector<int>>();
    for (int v : out)
        if (v < 3 || v > kMaxVertices) throw std::invalid_argument(ex.id + ": path lengths must be in 3..16");
    return out;
}

void evaluate_spectral(const Experiment& ex, int n, int jobs, ResultRow& row) {
    const std::vector<int> lengths = path_lengths(ex);
    std::atomic<std::uint64_t> checked{0};
    std::atomic<std::uint64_t> violations{0};
    auto check = [&](const Graph& g) {
        for (int l : lengths) {
            ++checked;
            if (!check_path_bound(g, l).holds) ++violations;
        }
    };
    if (!ex.h.empty())
        check(build(ex.h));
    else
        enumerate_graphs(n, {}, [&](const Graph& g, int) { check(g); }, jobs);
    row.value = std::to_string(checked.load());
    row.reference = std::to_string(violations.load());
    row.equal = to_text(violations.load() == 0);
    std::string ls;
    for (int l : lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
    row.detail = "l=" + ls;
    row.status = hard(violations.load() == 0);
}

void evaluate_k0(const Experiment& ex, ResultRow& row) {
    const int k_max = ex.options.value("k_max", 0);
    const auto probes = ex.options.value("probes", std::vector<std::uint64_t>{});
    if (probes.empty()) throw std::invalid_argument(ex.id + ": k0 needs options.probes");
    const K0Evidence evidence = find_k0(build(ex.h), k_max, probes);
    row.value = evidence.k0 ? std::to_string(*evidence.k0) : "none";
    row.reference = ex.options.contains("expect") ? std::to_string(ex.options.at("expect").get<int>()) : "";
    std::string failures;
    for (const auto& [k, n] : evidence.failures)
        failures += (failures.empty() ? "" : " ") + ("k=" + std::to_string(k) + "@n=" + std::to_string(n));
    row.detail = "evidence_only failures=" + (failures.empty() ? std::string("none") : failures);
    if (ex.options.contains("expect")) {
        row.equal = to_text(row.value == row.reference);
        row.status = hard(row.value == row.reference);
    } else {
        row.status = RowStatus::ReportOnly;
    }
}

ResultRow evaluate(const Experiment& ex, int n, int jobs) {
    ResultRow row;
    row.experiment = ex.id;
    row.kind = kind_name(ex.kind);
    row.h = ex.h;
    row.f = ex.f;
    row.n = n;
    switch (ex.kind) {
        case ExperimentKind::Goodness:
        case ExperimentKind::Ex: evaluate_extremal(ex, n, jobs, row); break;
        case ExperimentKind::Optimize: evaluate_optimize(ex, n, row); break;
        case ExperimentKind::Identity: evaluate_identity(ex, n, jobs, row); break;
        case ExperimentKind::Spectral: evaluate_spectral(ex, n, jobs, row); break;
        case ExperimentKind::K0: evaluate_k0(ex, row); break;
    }
    return row;
}

std::vector<int> orders(const Experiment& ex) {
    if (ex.kind == ExperimentKind::K0) return {0};
    if (ex.kind == ExperimentKind::Spectral && !ex.h.empty()) return {build(ex.h).order()};
    std::vector<int> out;
    for (int n = ex.n_lo; n <= ex.n_hi; ++n) out.push_back(n);
    return out;
}

}  // namespace

CampaignOutcome run_campaign(const CampaignConfig& config, std::ostream* progress) {
    std::map<std::string, ResultRow> cached;
    std::map<std::pair<std::string, int>, std::string> keys_by_slot;
    if (!config.cache_path.empty()) {
        for (ResultRow& row : read_cache(config.cache_path)) {
            keys_by_slot[{row.experiment, row.n}] = row.key;
            cached.emplace(row.key, std::move(row));
        }
    }

    std::ofstream log;
    auto append = [&](const ResultRow& row) {
        if (config.cache_path.empty()) return;
        if (!log.is_open()) {
            const fs::path parent = fs::path(config.cache_path).parent_path();
            if (!parent.empty()) fs::create_directories(parent);
            log.open(config.cache_path, std::ios::app | std::ios::binary);
            if (!log) throw std::runtime_error("cannot append to cache " + config.cache_path);
        }
        log << row_to_json(row).dump() << '\n';
        log.flush();
    };

    CampaignOutcome outcome;
    for (const Experiment& ex : config.experiments) {
        for (int n : orders(ex)) {
            const std::string key = row_key(ex, n);
            if (auto it = cached.find(key); it != cached.end()) {
                outcome.rows.push_back(it->second);
                ++outcome.restored;
                if (progress) *progress << "[" << ex.id << "] n=" << n << " restored from cache\n";
                continue;
            }
            if (auto slot = keys_by_slot.find({ex.id, n}); slot != keys_by_slot.end())
                throw CacheCorruption("cache already holds experiment '" + ex.id + "' at n=" + std::to_string(n) +
                                      " with different inputs; use a new id or a new cache");

            ResultRow row = evaluate(ex, n, config.jobs);
            row.key = key;
            row.timestamp = utc_now();
            row.version = kVersion;
            append(row);
            keys_by_slot[{ex.id, n}] = key;
            cached.emplace(key, row);
            outcome.rows.push_back(std::move(row));
            ++outcome.computed;
            if (progress) *progress << "[" << ex.id << "] n=" << n << " " << status_name(outcome.rows.back().status) << "\n";
        }
    }
    for (const ResultRow& row : outcome.rows)
        if (row.status == RowStatus::Fail) outcome.hard_failure = true;

    if (!config.output_path.empty()) {
        const fs::path parent = fs::path(config.output_path).parent_path();
        if (!parent.empty()) fs::create_directories(parent);
        std::ofstream csv(config.output_path, std::ios::binary | std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot write " + config.output_path);
        csv << rows_to_csv(outcome.rows);
    }
    return outcome;
}

}  // namespace turan
