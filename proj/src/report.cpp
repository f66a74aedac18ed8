#include "tarep/report.hpp"

#include "tarep/model_io.hpp"

#include <cstdio>
#include <sstream>

namespace tarep {

namespace {

std::string ordinal(std::size_t n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", n);
  return buf;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string format_report(const Network& net, const Property& prop, const std::vector<RepairRun>& runs,
                          const std::vector<RunArtifacts>& artifacts) {
  std::ostringstream os;
  os << "# repair report\n";
  os << "# property: " << to_string(net, prop) << "\n";
  for (const auto& run : runs) {
    os << "# kind=" << to_string(run.kind) << " trace_length=";
    if (run.trace)
      os << run.trace->length();
    else
      os << "-";
    os << " repairs=" << run.records.size() << " admissible=" << run.admissible_count()
       << " timeouts=" << run.timeouts << " variables=" << run.variable_count
       << " constraints=" << run.constraint_count << " termination=" << to_string(run.termination) << "\n";
  }

  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& run = runs[r];
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& rec = run.records[i];
      os << to_string(run.kind) << " " << ordinal(i + 1) << " anchors=" << join(rec.candidate.anchors(net), ",")
         << " values=" << join(rec.candidate.assignment, ",") << " admissible="
         << (rec.admissible ? (*rec.admissible ? "yes" : "no") : "unknown")
         << " contract=" << (rec.contract_ok ? "ok" : "FAILED");
      if (r < artifacts.size()) {
        if (i < artifacts[r].models.size()) os << " model=" << artifacts[r].models[i];
        if (i < artifacts[r].witnesses.size() && artifacts[r].witnesses[i]) os << " witness=" << *artifacts[r].witnesses[i];
      }
      os << "\n";
      for (const auto& m : rec.candidate.modifications(net)) os << "    " << m << "\n";
      if (rec.admissible == false) os << "    distinguishing word: " << join(rec.witness, " ") << " (accepted by " << rec.accepted_by << ")\n";
    }
  }
  return os.str();
}

std::filesystem::path write_report(const Network& net, const Property& prop, const std::vector<RepairRun>& runs,
                                   const std::filesystem::path& dir) {
  std::vector<RunArtifacts> artifacts;
  for (const auto& run : runs) {
    RunArtifacts a;
    const auto kind = std::string(to_string(run.kind));
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const auto& rec = run.records[i];
      auto path = write_repaired_model(apply(net, rec.candidate), prop, kind, i + 1, dir);
      a.models.push_back(path.filename().string());
      if (rec.admissible == false) {
        auto name = "witness_" + kind + "_" + ordinal(i + 1) + ".json";
        write_file(dir / name, serialize_witness(rec.witness, rec.accepted_by));
        a.witnesses.push_back(name);
      } else {
        a.witnesses.push_back(std::nullopt);
      }
    }
    artifacts.push_back(std::move(a));
  }
  auto path = dir / "report.txt";
  write_file(path, format_report(net, prop, runs, artifacts));
  return path;
}

}  // namespace tarep
