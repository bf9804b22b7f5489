#pragma once

// Files exchanged between runs: dataset and report CSVs, JSON-lines archives
// of per-group inferences, trained EIM models and sample archives. Doubles
// are written in the shortest form that parses back to the same value (at
// most 17 significant digits), so every reader reproduces the writer's bits.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsm/core.hpp"
#include "hsm/eim.hpp"
#include "hsm/experiments.hpp"
#include "hsm/hsm_is.hpp"
#include "hsm/samplers.hpp"

namespace hsm::io {

/// Malformed file, wrong format tag or unsupported version.
class FormatError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr int kArchiveVersion = 1;

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);
/// Inverse of format_double. Throws FormatError on trailing junk.
double parse_double(const std::string& s);

/// FNV-1a over the bit patterns of (id, x, y) for every point.
std::uint64_t data_checksum(const DataSet& group);
/// FNV-1a over the bit patterns of the values, continuing from `h`.
std::uint64_t checksum_doubles(std::span<const double> values, std::uint64_t h = 1469598103934665603ULL);
std::string hex64(std::uint64_t v);
/// Inverse of hex64; exactly 16 hex digits.
std::uint64_t parse_hex64(const std::string& s);

/// Writes text atomically enough for our purposes: temp file, then rename.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// Datasets --------------------------------------------------------------------

/// Header `group_id,x,y`, rows in group order.
std::string dataset_csv(const GroupedData& data);
/// Groups appear in order of first occurrence.
GroupedData parse_dataset_csv(const std::string& text);
GroupedData read_dataset_csv(const std::filesystem::path& path);

nlohmann::json to_json(const exp::SyntheticSpec& s);
exp::SyntheticSpec synthetic_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const exp::GroupedSpec& s);
exp::GroupedSpec grouped_spec_from_json(const nlohmann::json& j);

// Priors ----------------------------------------------------------------------

nlohmann::json to_json(const PriorSpec& p);
PriorSpec prior_from_json(const nlohmann::json& j);

// Per-group inference archives (JSON lines) --------------------------------

/// One record. `checksum` ties the archive to the group data it came from.
std::string inference_record(const DatasetInference& inf, std::uint64_t checksum);

struct InferenceRecord {
  DatasetInference inference;
  std::uint64_t checksum = 0;
  std::string line;  ///< the record as read, without the newline
};

InferenceRecord parse_inference_record(const std::string& line);
/// Blank lines are skipped; duplicate group ids are an error.
std::vector<InferenceRecord> parse_inference_archive(const std::string& text);
std::vector<InferenceRecord> read_inference_archive(const std::filesystem::path& path);

// EIM models ------------------------------------------------------------------

nlohmann::json to_json(const eim::EimModel& m);
eim::EimModel eim_model_from_json(const nlohmann::json& j);

// Reports ---------------------------------------------------------------------

/// Header `model,E_theta,Std_theta,E_sigma_y,Std_sigma_y,ln_evidence,post_prob`.
std::string report_csv(const exp::SelectionReport& r);
nlohmann::json to_json(const exp::SelectionReport& r);

/// Long form: header `x,y,density`, x-major.
std::string grid_density_csv(const exp::PredictionGrid& g);
/// Header `x,mean,lower,upper`.
std::string grid_band_csv(const exp::PredictionGrid& g);
nlohmann::json to_json(const exp::PredictionGrid& g);
exp::PredictionGrid prediction_grid_from_json(const nlohmann::json& j);

/// Header `<names...>,log_weight`.
std::string samples_csv(const std::vector<std::string>& names, const WeightedSamples& ws);

/// Keys are sorted, so equal values always dump to equal bytes.
std::string dump(const nlohmann::json& j, bool pretty = true);

}  // namespace hsm::io
