#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfscreen/types.hpp"

namespace mfscreen {

enum class Orientation { SamplesAsRows, FeaturesAsRows };
enum class NaPolicy { Error, DropRow };

/// How to read a delimited text file into a DataMatrix.
///
/// samples_as_rows: one sample per row; the response lives in the column
/// named `response_column` (or at index `response_index` when the file has
/// no header).
///
/// features_as_rows: one feature per row (expression-matrix layout); when a
/// row's first field is not numeric it is taken as the feature name; the
/// response comes from `label_path`, one value per sample line, aligned with
/// the data columns.
struct IngestSpec {
  std::string path;
  Orientation orientation = Orientation::SamplesAsRows;
  std::optional<std::string> response_column;
  std::optional<std::size_t> response_index;
  std::optional<std::string> label_path;
  char delimiter = ',';
  bool has_header = true;
  NaPolicy na_policy = NaPolicy::Error;
};

struct FilterSpec {
  double min_expressed_fraction = 0.20;
  // a value counts as expressed when strictly positive
};

/// Parses per spec; the result satisfies DataMatrix::validate(). Dropped-row
/// notices land in *warnings when given. Throws IngestError with the
/// offending line/column on parse failures.
DataMatrix ingest(const IngestSpec& spec, std::vector<std::string>* warnings = nullptr);

/// Keeps feature j iff the fraction of samples with value > 0 is at least
/// min_expressed_fraction (ties kept). Second element maps new -> old column
/// indices, strictly increasing. Throws IngestError when nothing survives.
std::pair<DataMatrix, std::vector<std::size_t>> apply_filter(const DataMatrix& data,
                                                             const FilterSpec& f);

// Low-level delimited-text helpers (RFC-4180-style quoting), shared by the
// ingestion and report paths.
std::vector<std::vector<std::string>> read_delimited(const std::string& path, char delimiter);
std::string csv_quote(const std::string& field, char delimiter = ',');

}  // namespace mfscreen
