#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "turan/campaign.hpp"
#include "turan/errors.hpp"

using namespace turan;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("turan-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

// The CSV without its timestamp column (second to last).
std::string without_timestamps(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        const auto last = line.rfind(',');
        const auto before = line.rfind(',', last - 1);
        out += line.substr(0, before) + line.substr(last) + "\n";
    }
    return out;
}

const char* kConfig = R"({
  "jobs": 2,
  "experiments": [
    {"id": "zykov", "kind": "goodness", "H": "K3", "F": "K4", "n_lo": 4, "n_hi": 7},
    {"id": "fan", "kind": "ex", "H": "K2", "F": "F2", "n_lo": 5, "n_hi": 7,
     "options": {"construction": "turan_plus_edge"}},
    {"id": "star", "kind": "optimize", "H": "S3", "n_lo": 8, "n_hi": 8, "options": {"parts": 2}},
    {"id": "pairs", "kind": "identity", "n_lo": 3, "n_hi": 6, "options": {"identity": "pair_count"}},
    {"id": "cycles", "kind": "identity", "n_lo": 4, "n_hi": 6, "options": {"identity": "path_cycle", "k": 2}},
    {"id": "walks", "kind": "spectral", "n_lo": 3, "n_hi": 5, "options": {"l": [3, 4]}},
    {"id": "c4k0", "kind": "k0", "H": "C4", "options": {"k_max": 6, "probes": [12], "expect": 3}}
  ]
})";

}  // namespace

TEST_CASE("config parsing") {
    const CampaignConfig c = parse_campaign_config(kConfig, "/base");
    CHECK(c.jobs == 2);
    REQUIRE(c.experiments.size() == 7);
    CHECK(c.experiments[0].kind == ExperimentKind::Goodness);
    CHECK(c.experiments[1].options.at("construction") == "turan_plus_edge");
    CHECK(c.experiments[6].kind == ExperimentKind::K0);

    const CampaignConfig paths = parse_campaign_config(R"({"cache": "c.jsonl", "output": "/abs/o.csv"})", "/base");
    CHECK(paths.cache_path == "/base/c.jsonl");
    CHECK(paths.output_path == "/abs/o.csv");
    CHECK(paths.experiments.empty());
}

TEST_CASE("config errors name their location") {
    CHECK_THROWS_AS(parse_campaign_config("{\"experiments\": [", "."), ParseError);
    auto message = [](const std::string& text) -> std::string {
        try {
            parse_campaign_config(text, ".");
        } catch (const std::exception& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "ex", "H": "K2", "F": "Q3", "n_lo": 3, "n_hi": 4}]})")
              .find("experiments[0].F") != std::string::npos);
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "nope"}]})").find("experiments[0]") != std::string::npos);
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "goodness", "H": "K3", "F": "K4", "n_lo": 5, "n_hi": 11}]})")
              .find("n_hi") != std::string::npos);
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "goodness", "H": "K3", "F": "K4", "n_lo": 6, "n_hi": 5}]})")
              .find("n_lo") != std::string::npos);
    CHECK_FALSE(message(R"({"experiments": [{"id": "a", "kind": "optimize", "H": "K3", "n_lo": 30, "n_hi": 40,
                           "options": {"parts": 3}}]})").size() > 0);
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "ex", "H": "K2", "n_lo": 3, "n_hi": 4}]})")
              .find("F is required") != std::string::npos);
    CHECK(message(R"({"experiments": [{"id": "a", "kind": "k0", "H": "K2"}, {"id": "a", "kind": "k0", "H": "K2"}]})")
              .find("unique") != std::string::npos);
    CHECK(message(R"([1, 2])").size() > 0);
    CHECK(message(R"({"jobs": 0})").size() > 0);
}

TEST_CASE("a full campaign, resumed and rerun") {
    TempDir dir;
    write(dir.path / "camp.json", kConfig);
    CampaignConfig config = load_campaign_config((dir.path / "camp.json").string());
    CHECK(config.output_path == (dir.path / "camp.csv").string());

    const CampaignOutcome first = run_campaign(config);
    CHECK_FALSE(first.hard_failure);
    CHECK(first.computed == first.rows.size());
    CHECK(first.restored == 0);
    // 4 + 3 + 1 + 4 + 3 + 3 + 1 rows
    CHECK(first.rows.size() == 19);

    for (const ResultRow& row : first.rows) {
        if (row.experiment == "zykov") {
            CHECK(row.status == RowStatus::Pass);
            CHECK(row.equal == "true");
        }
        if (row.experiment == "fan") {
            const std::uint64_t n = static_cast<std::uint64_t>(row.n);
            CHECK(row.reference == std::to_string(n * n / 4 + 1));
            CHECK(row.status == RowStatus::Pass);
            CHECK(row.detail.find("construction_f_free=true") != std::string::npos);
        }
        if (row.experiment == "star") {
            CHECK(row.value == "40");
            CHECK(row.detail == "optimal=(6,2)");
            CHECK(row.status == RowStatus::ReportOnly);
        }
        if (row.experiment == "c4k0") {
            CHECK(row.value == "3");
            CHECK(row.status == RowStatus::Pass);
        }
        CHECK(row.version == kVersion);
        CHECK(row.timestamp.size() == 20);
    }

    const std::string csv = slurp(config.output_path);
    const std::string cache = slurp(config.cache_path);
    const auto cache_time = fs::last_write_time(config.cache_path);

    // A completed campaign only reads its cache and reproduces the CSV.
    const CampaignOutcome second = run_campaign(config);
    CHECK(second.computed == 0);
    CHECK(second.restored == 19);
    CHECK(slurp(config.cache_path) == cache);
    CHECK(fs::last_write_time(config.cache_path) == cache_time);
    CHECK(slurp(config.output_path) == csv);

    // Interrupted run: keep only the first 7 records, then resume.
    std::istringstream lines(cache);
    std::string partial, line;
    for (int i = 0; i < 7 && std::getline(lines, line); ++i) partial += line + "\n";
    write(config.cache_path, partial);
    const CampaignOutcome resumed = run_campaign(config);
    CHECK(resumed.restored == 7);
    CHECK(resumed.computed == 12);
    CHECK(without_timestamps(slurp(config.output_path)) == without_timestamps(csv));

    // Worker count does not change the rows.
    config.jobs = 1;
    config.cache_path = (dir.path / "serial.jsonl").string();
    config.output_path = (dir.path / "serial.csv").string();
    run_campaign(config);
    CHECK(without_timestamps(slurp(config.output_path)) == without_timestamps(csv));
}

TEST_CASE("corrupt caches are refused and left alone") {
    TempDir dir;
    CampaignConfig config = parse_campaign_config(
        R"({"experiments": [{"id": "e", "kind": "goodness", "H": "K2", "F": "K3", "n_lo": 3, "n_hi": 4}]})",
        dir.path.string());
    config.cache_path = (dir.path / "c.jsonl").string();
    config.output_path = (dir.path / "o.csv").string();
    run_campaign(config);
    const std::string good = slurp(config.cache_path);

    for (const std::string bad : {good + "{\"key\": ", good.substr(0, good.size() - 5), good + "not json\n",
                                  good + "{\"key\": \"x\"}\n", good + good}) {
        write(config.cache_path, bad);
        CHECK_THROWS_AS(run_campaign(config), CacheCorruption);
        CHECK(slurp(config.cache_path) == bad);
    }
}

TEST_CASE("an id reused with different inputs is refused") {
    TempDir dir;
    const std::string base = R"({"experiments": [{"id": "e", "kind": "goodness", "H": "K2", "F": "%F", "n_lo": 4, "n_hi": 4}]})";
    auto with = [&](const std::string& f) {
        std::string text = base;
        text.replace(text.find("%F"), 2, f);
        CampaignConfig c = parse_campaign_config(text, dir.path.string());
        c.cache_path = (dir.path / "c.jsonl").string();
        return c;
    };
    run_campaign(with("K3"));
    CHECK_THROWS_AS(run_campaign(with("K4")), CacheCorruption);
    CHECK(run_campaign(with("K3")).restored == 1);
}

TEST_CASE("hard failures and report-only rows") {
    TempDir dir;
    CampaignConfig config = parse_campaign_config(R"({"experiments": [
        {"id": "strict", "kind": "goodness", "H": "P4", "F": "C5", "n_lo": 5, "n_hi": 6, "options": {"expect_equal": true}},
        {"id": "loose", "kind": "goodness", "H": "P4", "F": "C5", "n_lo": 5, "n_hi": 6},
        {"id": "opt", "kind": "optimize", "H": "S3", "n_lo": 8, "n_hi": 8, "options": {"parts": 2, "expect_balanced": true}}
    ]})", dir.path.string());
    config.cache_path = (dir.path / "c.jsonl").string();
    config.output_path = (dir.path / "o.csv").string();
    const CampaignOutcome out = run_campaign(config);
    CHECK(out.hard_failure);
    REQUIRE(out.rows.size() == 5);
    CHECK(out.rows[0].status == RowStatus::Fail);   // 18 > 12 at n = 5
    CHECK(out.rows[1].status == RowStatus::Pass);
    CHECK(out.rows[2].status == RowStatus::Pass);   // only value >= Turán count is asserted
    CHECK(out.rows[2].equal == "false");
    CHECK(out.rows[4].status == RowStatus::Fail);
}

TEST_CASE("an empty campaign succeeds") {
    TempDir dir;
    CampaignConfig config = parse_campaign_config(R"({"experiments": []})", dir.path.string());
    config.cache_path = (dir.path / "c.jsonl").string();
    config.output_path = (dir.path / "o.csv").string();
    const CampaignOutcome out = run_campaign(config);
    CHECK_FALSE(out.hard_failure);
    CHECK(out.rows.empty());
    CHECK_FALSE(fs::exists(config.cache_path));
    CHECK(slurp(config.output_path) == "experiment,kind,H,F,n,value,reference,equal,status,detail,timestamp,version\n");
}

TEST_CASE("default cache directory comes from the environment") {
    TempDir dir;
    write(dir.path / "x.json", R"({"experiments": []})");
    ::setenv(kCacheDirEnv, (dir.path / "cache").c_str(), 1);
    CHECK(load_campaign_config((dir.path / "x.json").string()).cache_path == (dir.path / "cache" / "x.cache.jsonl").string());
    ::unsetenv(kCacheDirEnv);
    CHECK(load_campaign_config((dir.path / "x.json").string()).cache_path == (dir.path / "x.cache.jsonl").string());
}

TEST_CASE("rows round-trip through JSON and CSV quoting") {
    ResultRow row;
    row.key = "k";
    row.experiment = "a,b";
    row.kind = "ex";
    row.h = "M(2,2)";
    row.f = "K3";
    row.n = 4;
    row.value = "4";
    row.reference = "4";
    row.equal = "true";
    row.detail = "say \"hi\"";
    row.status = RowStatus::ReportOnly;
    row.timestamp = "2026-01-01T00:00:00Z";
    row.version = kVersion;
    const ResultRow back = row_from_json(nlohmann::json::parse(row_to_json(row).dump()));
    CHECK(back.experiment == row.experiment);
    CHECK(back.detail == row.detail);
    CHECK(back.status == RowStatus::ReportOnly);
    const std::string csv = rows_to_csv({row});
    CHECK(csv.find("\"a,b\",ex,\"M(2,2)\",K3,4,4,4,true,report-only,\"say \"\"hi\"\"\"") != std::string::npos);
}
