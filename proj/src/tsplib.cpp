#include "asymtsp/tsplib.hpp"

#include "asymtsp/exact.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ASYMTSP_DATA_DIR
#define ASYMTSP_DATA_DIR "data"
#endif

namespace asymtsp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, int line) {
  Int value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  return value;
}

// Splits the document into (line number, line) pairs.
std::vector<std::pair<int, std::string_view>> lines_of(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.emplace_back(number++, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Instance parse_tsplib(std::string_view text) {
  std::string name;
  int dimension = -1;
  bool in_section = false;
  std::vector<Cost> values;
  int last_line = 0;
  for (const auto& [number, raw] : lines_of(text)) {
    last_line = number;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (!in_section) {
      const auto colon = line.find(':');
      const std::string key = upper(trim(line.substr(0, colon)));
      const std::string_view value = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(colon + 1));
      if (key == "EOF") break;
      if (key == "EDGE_WEIGHT_SECTION") {
        if (dimension < 0) throw ParseError("EDGE_WEIGHT_SECTION before DIMENSION", number);
        in_section = true;
        values.reserve(static_cast<std::size_t>(dimension) * dimension);
        continue;
      }
      if (colon == std::string_view::npos) throw ParseError("unexpected line '" + std::string(line) + "'", number);
      if (key == "NAME") {
        name = value;
      } else if (key == "TYPE") {
        if (upper(value) != "ATSP") throw ParseError("unsupported TYPE " + std::string(value), number);
      } else if (key == "DIMENSION") {
        dimension = parse_int<int>(value, number);
        if (dimension < 1) throw ParseError("DIMENSION must be positive", number);
      } else if (key == "EDGE_WEIGHT_TYPE") {
        if (upper(value) != "EXPLICIT") throw ParseError("unsupported EDGE_WEIGHT_TYPE " + std::string(value), number);
      } else if (key == "EDGE_WEIGHT_FORMAT") {
        if (upper(value) != "FULL_MATRIX")
          throw ParseError("unsupported EDGE_WEIGHT_FORMAT " + std::string(value), number);
      } else if (key == "COMMENT") {
      } else {
        throw ParseError("unknown key " + key, number);
      }
      continue;
    }
    if (upper(line) == "EOF") break;
    for (auto token : tokens_of(line)) {
      if (values.size() == static_cast<std::size_t>(dimension) * dimension)
        throw ParseError("more matrix entries than DIMENSION^2", number);
      const Cost c = parse_int<Cost>(token, number);
      if (c < 0 && values.size() % (dimension + 1) != 0) throw ParseError("negative cost", number);
      values.push_back(c);
    }
  }
  if (!in_section) throw ParseError("missing EDGE_WEIGHT_SECTION", last_line);
  if (values.size() != static_cast<std::size_t>(dimension) * dimension)
    throw ParseError("expected " + std::to_string(dimension * dimension) + " matrix entries, found " +
                         std::to_string(values.size()),
                     last_line);
  CostMatrix costs(dimension, dimension);
  for (int i = 0; i < dimension; ++i)
    for (int j = 0; j < dimension; ++j) costs(i, j) = i == j ? 0 : values[static_cast<std::size_t>(i) * dimension + j];
  return Instance(std::move(costs), name);
}

Instance read_tsplib(const std::filesystem::path& path) { return parse_tsplib(read_file(path)); }

std::string write_tsplib(const Instance& instance) {
  std::string out;
  const int n = instance.size();
  out += "NAME: " + (instance.name().empty() ? std::string("unnamed") : instance.name()) + "\n";
  out += "TYPE: ATSP\n";
  out += "DIMENSION: " + std::to_string(n) + "\n";
  out += "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out += "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out += "EDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += std::to_string(instance(i, j));
    }
    out += '\n';
  }
  out += "EOF\n";
  return out;
}

Tour parse_tsplib_tour(std::string_view text) {
  Tour tour;
  bool in_section = false;
  for (const auto& [number, raw] : lines_of(text)) {
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (!in_section) {
      if (upper(line) == "TOUR_SECTION") in_section = true;
      continue;
    }
    for (auto token : tokens_of(line)) {
      const long long id = parse_int<long long>(token, number);
      if (id == -1) return tour;
      if (id < 1) throw ParseError("tour ids are 1-based", number);
      tour.order.push_back(static_cast<Vertex>(id - 1));
    }
  }
  if (!in_section) throw ParseError("missing TOUR_SECTION", 0);
  return tour;
}

std::string write_tsplib_tour(const Tour& tour, const std::string& name) {
  std::string out = "NAME: " + name + "\nTYPE: TOUR\nDIMENSION: " + std::to_string(tour.order.size()) +
                    "\nTOUR_SECTION\n";
  for (Vertex v : tour.order) out += std::to_string(v + 1) + "\n";
  out += "-1\nEOF\n";
  return out;
}

OptimaRegistry OptimaRegistry::parse(std::string_view text) {
  OptimaRegistry registry;
  for (const auto& [number, raw] : lines_of(text)) {
    auto line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 3) throw ParseError("registry line needs name, cost and basis", number);
    OptimumEntry entry;
    entry.cost = parse_int<Cost>(tokens[1], number);
    if (entry.cost <= 0) throw ParseError("registry cost must be positive", number);
    entry.basis = tokens[2];
    if (entry.basis != "raw" && entry.basis != "closure") throw ParseError("basis must be raw or closure", number);
    for (std::size_t i = 3; i < tokens.size(); ++i) entry.note += (i > 3 ? " " : "") + std::string(tokens[i]);
    const std::string name(tokens[0]);
    if (registry.find(name)) throw ParseError("duplicate registry entry " + name, number);
    registry.add(name, std::move(entry));
  }
  return registry;
}

OptimaRegistry OptimaRegistry::load(const std::filesystem::path& path) { return parse(read_file(path)); }

OptimaRegistry OptimaRegistry::load_default() {
  return load(std::filesystem::path(ASYMTSP_DATA_DIR) / "optima.txt");
}

void OptimaRegistry::add(const std::string& name, OptimumEntry entry) { entries_[name] = std::move(entry); }

const OptimumEntry* OptimaRegistry::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<ReferenceOptimum> reference_optimum(const Instance& instance, const OptimaRegistry* registry,
                                                  int exact_limit) {
  if (instance.size() <= exact_limit) return ReferenceOptimum{tour_cost(instance, held_karp(instance, exact_limit)), "exact"};
  if (registry) {
    if (const auto* entry = registry->find(instance.name()))
      return ReferenceOptimum{entry->cost, entry->basis == "raw" ? "registry-raw" : "registry"};
  }
  return std::nullopt;
}

std::filesystem::path tsplib_directory() {
  if (const char* env = std::getenv("ASYMTSP_TSPLIB_DIR"); env && *env) return env;
  return std::filesystem::path(ASYMTSP_DATA_DIR) / "tsplib";
}

const std::vector<std::string>& tsplib_atsp_names() {
  static const std::vector<std::string> names = {
      "br17",  "ft53",   "ft70",    "ftv33",  "ftv35",  "ftv38",  "ftv44",
      "ftv47", "ftv55",  "ftv64",   "ftv70",  "ftv170", "kro124p", "p43",
      "rbg323", "rbg358", "rbg403", "rbg443", "ry48p"};
  return names;
}

}  // namespace asymtsp
