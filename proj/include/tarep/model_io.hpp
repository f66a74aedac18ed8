#pragma once

#include "tarep/model.hpp"
#include "tarep/trace.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tarep {

/// Syntax or validation failure; line/column are 1-based (0 when unknown).
class ModelError : public std::runtime_error {
 public:
  ModelError(const std::string& message, std::size_t line = 0, std::size_t column = 0,
             std::vector<Diagnostic> diagnostics = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::size_t line_, column_;
  std::vector<Diagnostic> diagnostics_;
};

struct ModelFile {
  Network network;
  Property property;
  std::vector<Diagnostic> warnings;
};

ModelFile parse_model(std::string_view text);
ModelFile load_model(const std::filesystem::path& path);
std::string serialize_model(const Network& net, const Property& prop);

/// `clock OP bound` with OP one of < <= == = >= > and a natural or p/q bound.
ClockConstraint parse_atom(const Network& net, std::string_view text);
/// Property grammar: atoms, @Automaton.Location, true, false, !, &&, ||, ( ).
Property parse_property(const Network& net, std::string_view text);

std::string serialize_trace(const Network& net, const SymbolicTimedTrace& trace);
SymbolicTimedTrace parse_trace(const Network& net, std::string_view text);
SymbolicTimedTrace load_trace(const Network& net, const std::filesystem::path& path);

/// Label-only trace document for a distinguishing word.
std::string serialize_witness(const std::vector<std::string>& labels, std::string_view accepted_by);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Writes `repair_<kind>_<NNN>.json` into `dir` and returns its path.
std::filesystem::path write_repaired_model(const Network& net, const Property& prop, std::string_view kind,
                                           std::size_t ordinal, const std::filesystem::path& dir);

}  // namespace tarep
