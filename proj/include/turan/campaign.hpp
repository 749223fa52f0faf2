#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace turan {

inline constexpr const char* kVersion = "turan-0.1.0";
inline constexpr const char* kCacheDirEnv = "TURAN_CACHE_DIR";

enum class ExperimentKind { Goodness, Ex, Optimize, Identity, Spectral, K0 };

struct Experiment {
    std::string id;
    ExperimentKind kind = ExperimentKind::Goodness;
    std::string h;  // family DSL
    std::string f;  // family DSL, empty when the kind takes no F
    int n_lo = 0;
    int n_hi = 0;
    nlohmann::json options = nlohmann::json::object();
};

struct CampaignConfig {
    std::vector<Experiment> experiments;
    std::string cache_path;
    std::string output_path;
    int jobs = 1;
};

enum class RowStatus { Pass, Fail, ReportOnly };

/// One persisted outcome, keyed by the canonical forms of H and F, n, the
/// experiment kind and its options.
struct ResultRow {
    std::string key;
    std::string experiment;
    std::string kind;
    std::string h;
    std::string f;
    int n = 0;
    std::string value;
    std::string reference;
    std::string equal;   // "true", "false" or empty
    std::string detail;
    RowStatus status = RowStatus::ReportOnly;
    std::string timestamp;
    std::string version;
};

class CacheCorruption : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a campaign file (JSON). Relative cache/output paths resolve against
/// `base_dir`. Throws ParseError (with byte offset) on malformed JSON and
/// std::invalid_argument naming the offending field on schema errors.
CampaignConfig parse_campaign_config(const std::string& text, const std::string& base_dir = ".");

/// Reads a campaign file; the default cache lives in $TURAN_CACHE_DIR (or
/// next to the file) and the default output next to the file.
CampaignConfig load_campaign_config(const std::string& path);

struct CampaignOutcome {
    std::vector<ResultRow> rows;
    std::size_t restored = 0;
    std::size_t computed = 0;
    bool hard_failure = false;
};

/// Runs every experiment, restoring rows from the append-only cache when
/// present and appending each freshly computed row as soon as it exists, so
/// an interrupted run resumes where it stopped. Writes the CSV table to
/// `output_path` (when set). Throws CacheCorruption without touching a cache
/// that does not parse.
CampaignOutcome run_campaign(const CampaignConfig& config, std::ostream* progress = nullptr);

std::string status_name(RowStatus status);
std::string kind_name(ExperimentKind kind);

nlohmann::ordered_json row_to_json(const ResultRow& row);
ResultRow row_from_json(const nlohmann::json& j);

/// CSV with header experiment,kind,H,F,n,value,reference,equal,status,detail,timestamp,version.
std::string rows_to_csv(const std::vector<ResultRow>& rows);

/// Reads a cache file into rows; throws CacheCorruption on any malformed line.
std::vector<ResultRow> read_cache(const std::string& path);

}  // namespace turan
