#ifndef ASYMTSP_TSPLIB_HPP
#define ASYMTSP_TSPLIB_HPP

#include "asymtsp/instance.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace asymtsp {

/// EXPLICIT / FULL_MATRIX documents only. Diagonal entries are forced to 0.
/// Throws ParseError carrying the offending line.
Instance parse_tsplib(std::string_view text);
Instance read_tsplib(const std::filesystem::path& path);

/// Canonical FULL_MATRIX document: NAME, TYPE, DIMENSION, EDGE_WEIGHT_TYPE,
/// EDGE_WEIGHT_FORMAT, one row per line, EOF.
std::string write_tsplib(const Instance& instance);

/// TOUR_SECTION of a TSPLIB .tour file, converted to 0-based ids.
Tour parse_tsplib_tour(std::string_view text);
std::string write_tsplib_tour(const Tour& tour, const std::string& name);

struct OptimumEntry {
  Cost cost = 0;
  /// "raw" for the TSPLIB instance itself, "closure" for its metric closure
  std::string basis;
  std::string note;
};

class OptimaRegistry {
 public:
  OptimaRegistry() = default;
  /// Lines: name cost basis [note...]; '#' starts a comment.
  static OptimaRegistry parse(std::string_view text);
  static OptimaRegistry load(const std::filesystem::path& path);
  /// data/optima.txt of the source tree.
  static OptimaRegistry load_default();

  void add(const std::string& name, OptimumEntry entry);
  const OptimumEntry* find(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, OptimumEntry> entries_;
};

struct ReferenceOptimum {
  Cost cost = 0;
  /// "exact", "registry" or "registry-raw"
  std::string source;
};

/// Held-Karp when the instance is small enough, otherwise a registry lookup.
std::optional<ReferenceOptimum> reference_optimum(const Instance& instance, const OptimaRegistry* registry,
                                                  int exact_limit);

/// Directory holding the TSPLIB .atsp files: ASYMTSP_TSPLIB_DIR, else
/// data/tsplib in the source tree.
std::filesystem::path tsplib_directory();

/// The 19 ATSP instances of the TSPLIB collection.
const std::vector<std::string>& tsplib_atsp_names();

}  // namespace asymtsp

#endif
