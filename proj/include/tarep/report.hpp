#pragma once

#include "tarep/repair.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tarep {

/// File names written for one run, parallel to `RepairRun::records`.
struct RunArtifacts {
  std::vector<std::string> models;
  std::vector<std::optional<std::string>> witnesses;
};

/// Text summary: a header with one line per run, then one row per repair
/// (kind, ordinal, anchors, values, admissible=yes/no/unknown, files) with
/// its modifications indented below. File names are relative to the output
/// directory so reports do not depend on where they were written.
std::string format_report(const Network& net, const Property& prop, const std::vector<RepairRun>& runs,
                          const std::vector<RunArtifacts>& artifacts = {});

/// Writes repaired models, witnesses of inadmissible repairs and
/// `report.txt` into `dir`; returns the report path.
std::filesystem::path write_report(const Network& net, const Property& prop, const std::vector<RepairRun>& runs,
                                   const std::filesystem::path& dir);

}  // namespace tarep
