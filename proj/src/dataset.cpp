#include "citex/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "citex/errors.hpp"
#include "json.hpp"

namespace citex {

namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class JsonReader {
 public:
  explicit JsonReader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& detail) const {
    throw ParseError(source_, 0, field, detail);
  }

  const json& array_section(const json& doc, const char* name, bool required) const {
    static const json empty = json::array();
    if (!doc.contains(name)) {
      if (required) fail(name, "missing section");
      return empty;
    }
    const json& section = doc.at(name);
    if (!section.is_array()) fail(name, "expected an array");
    return section;
  }

  std::string string_field(const json& record, const std::string& path, const char* key) const {
    if (!record.is_object()) fail(path, "expected an object");
    const auto it = record.find(key);
    if (it == record.end()) fail(path + "." + key, "missing field");
    if (!it->is_string()) fail(path + "." + key, "expected a string");
    const auto value = it->get<std::string>();
    if (value.empty()) fail(path + "." + key, "empty id");
    return value;
  }

  std::optional<double> number_field(const json& record, const std::string& path, const char* key,
                                     bool required) const {
    const auto it = record.find(key);
    if (it == record.end() || (!required && it->is_null())) {
      if (required) fail(path + "." + key, "missing field");
      return std::nullopt;
    }
    if (!it->is_number()) fail(path + "." + key, "expected a number");
    return it->get<double>();
  }

 private:
  std::string source_;
};

std::string record_path(const char* section, std::size_t i) {
  return std::string(section) + "[" + std::to_string(i) + "]";
}

// --- CSV -------------------------------------------------------------------

struct CsvRow {
  std::size_t line;
  std::vector<std::string> fields;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line, const std::string& source, std::size_t number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(source, number, "", "unterminated quoted field");
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

class CsvTable {
 public:
  CsvTable(const std::filesystem::path& path, std::vector<std::string> required,
           std::vector<std::string> optional)
      : source_(path.filename().string()) {
    std::ifstream in(path);
    if (!in) throw ParseError(source_, 0, "", "cannot open " + path.string());
    std::string line;
    std::size_t number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty() || trim(line).front() == '#') continue;
      auto fields = split_csv_line(line, source_, number);
      if (!have_header) {
        header_ = std::move(fields);
        have_header = true;
        continue;
      }
      if (fields.size() != header_.size()) {
        throw ParseError(source_, number, "", "expected " + std::to_string(header_.size()) + " fields, got " +
                                                  std::to_string(fields.size()));
      }
      rows_.push_back({number, std::move(fields)});
    }
    if (!have_header) throw ParseError(source_, 0, "", "missing header row");
    for (const auto& name : required) {
      if (!column(name)) throw ParseError(source_, 1, name, "missing column");
    }
    for (const auto& name : header_) {
      if (std::find(required.begin(), required.end(), name) == required.end() &&
          std::find(optional.begin(), optional.end(), name) == optional.end()) {
        throw ParseError(source_, 1, name, "unexpected column");
      }
    }
  }

  const std::vector<CsvRow>& rows() const { return rows_; }

  std::optional<std::size_t> column(const std::string& name) const {
    const auto it = std::find(header_.begin(), header_.end(), name);
    if (it == header_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header_.begin());
  }

  std::string id(const CsvRow& row, const std::string& name) const {
    const auto& value = row.fields[*column(name)];
    if (value.empty()) throw ParseError(source_, row.line, name, "empty id");
    return value;
  }

  std::optional<double> number(const CsvRow& row, const std::string& name) const {
    const auto col = column(name);
    if (!col || row.fields[*col].empty()) return std::nullopt;
    const auto& text = row.fields[*col];
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw ParseError(source_, row.line, name, "not a number: '" + text + "'");
    }
    return value;
  }

  std::string origin(const CsvRow& row) const { return source_ + ":" + std::to_string(row.line); }

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<CsvRow> rows_;
};

}  // namespace

RawDataset read_dataset_json(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "", "invalid JSON");
  }
  const JsonReader reader(source);
  if (!doc.is_object()) reader.fail("", "top level must be an object");
  if (doc.contains("schema_version")) {
    const auto& version = doc.at("schema_version");
    if (!version.is_number_integer() || version.get<int>() != dataset_schema_version) {
      reader.fail("schema_version", "unsupported schema version");
    }
  }

  RawDataset raw;
  const auto& authors = reader.array_section(doc, "authors", true);
  for (std::size_t i = 0; i < authors.size(); ++i) {
    const auto path = record_path("authors", i);
    raw.authors.push_back({reader.string_field(authors[i], path, "id"), path});
  }

  const auto& venues = reader.array_section(doc, "venues", false);
  for (std::size_t i = 0; i < venues.size(); ++i) {
    raw.venues.push_back(reader.string_field(venues[i], record_path("venues", i), "id"));
  }

  const auto& papers = reader.array_section(doc, "papers", true);
  for (std::size_t i = 0; i < papers.size(); ++i) {
    const auto path = record_path("papers", i);
    RawPaper paper{reader.string_field(papers[i], path, "id"), std::nullopt, path};
    if (papers[i].contains("venue") && !papers[i].at("venue").is_null()) {
      paper.venue = reader.string_field(papers[i], path, "venue");
    }
    raw.papers.push_back(std::move(paper));
  }

  const auto& authorship = reader.array_section(doc, "authorship", true);
  for (std::size_t i = 0; i < authorship.size(); ++i) {
    const auto path = record_path("authorship", i);
    raw.authorship.push_back({reader.string_field(authorship[i], path, "author"),
                              reader.string_field(authorship[i], path, "paper"),
                              reader.number_field(authorship[i], path, "weight", false), path});
  }

  const auto& citations = reader.array_section(doc, "citations", false);
  for (std::size_t i = 0; i < citations.size(); ++i) {
    const auto path = record_path("citations", i);
    raw.citations.push_back({reader.string_field(citations[i], path, "from"),
                             reader.string_field(citations[i], path, "to"), path});
  }

  const auto& reputation = reader.array_section(doc, "reputation", false);
  for (std::size_t i = 0; i < reputation.size(); ++i) {
    const auto path = record_path("reputation", i);
    raw.reputation.push_back({reader.string_field(reputation[i], path, "from"),
                              reader.string_field(reputation[i], path, "to"),
                              *reader.number_field(reputation[i], path, "rating", true), path});
  }
  return raw;
}

RawDataset read_dataset_csv(const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  RawDataset raw;

  const CsvTable authorship(directory / "authorship.csv", {"author", "paper"}, {"weight"});
  for (const auto& row : authorship.rows()) {
    raw.authorship.push_back({authorship.id(row, "author"), authorship.id(row, "paper"),
                              authorship.number(row, "weight"), authorship.origin(row)});
  }

  if (fs::exists(directory / "authors.csv")) {
    const CsvTable authors(directory / "authors.csv", {"id"}, {});
    for (const auto& row : authors.rows()) raw.authors.push_back({authors.id(row, "id"), authors.origin(row)});
  } else {
    std::unordered_set<std::string> seen;
    for (const auto& edge : raw.authorship) {
      if (seen.insert(edge.author).second) raw.authors.push_back({edge.author, edge.origin});
    }
  }

  if (fs::exists(directory / "papers.csv")) {
    const CsvTable papers(directory / "papers.csv", {"id"}, {"venue"});
    const auto venue_col = papers.column("venue");
    for (const auto& row : papers.rows()) {
      RawPaper paper{papers.id(row, "id"), std::nullopt, papers.origin(row)};
      if (venue_col && !row.fields[*venue_col].empty()) paper.venue = row.fields[*venue_col];
      raw.papers.push_back(std::move(paper));
    }
  } else {
    std::unordered_set<std::string> seen;
    for (const auto& edge : raw.authorship) {
      if (seen.insert(edge.paper).second) raw.papers.push_back({edge.paper, std::nullopt, edge.origin});
    }
  }

  if (fs::exists(directory / "citations.csv")) {
    const CsvTable citations(directory / "citations.csv", {"from", "to"}, {});
    for (const auto& row : citations.rows()) {
      raw.citations.push_back({citations.id(row, "from"), citations.id(row, "to"), citations.origin(row)});
    }
  }

  if (fs::exists(directory / "reputation.csv")) {
    const CsvTable reputation(directory / "reputation.csv", {"from", "to", "rating"}, {});
    for (const auto& row : reputation.rows()) {
      const auto rating = reputation.number(row, "rating");
      if (!rating) throw ParseError("reputation.csv", row.line, "rating", "missing rating");
      raw.reputation.push_back(
          {reputation.id(row, "from"), reputation.id(row, "to"), *rating, reputation.origin(row)});
    }
  }
  return raw;
}

Corpus parse_dataset(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  if (std::filesystem::is_directory(path)) return build_corpus(read_dataset_csv(path), warnings);
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "", "cannot open file");
  return parse_dataset(in, path.filename().string(), warnings);
}

Corpus parse_dataset(std::istream& in, const std::string& source, std::vector<std::string>* warnings) {
  return build_corpus(read_dataset_json(in, source), warnings);
}

std::string write_dataset_json(const Corpus& corpus) {
  const RawDataset raw = to_raw_dataset(corpus);
  json doc = json::object();
  doc["schema_version"] = dataset_schema_version;
  doc["authors"] = json::array();
  for (const auto& a : raw.authors) doc["authors"].push_back({{"id", a.id}});
  if (!raw.venues.empty()) {
    doc["venues"] = json::array();
    for (const auto& v : raw.venues) doc["venues"].push_back({{"id", v}});
  }
  doc["papers"] = json::array();
  for (const auto& p : raw.papers) {
    json paper = {{"id", p.id}};
    if (p.venue) paper["venue"] = *p.venue;
    doc["papers"].push_back(std::move(paper));
  }
  doc["authorship"] = json::array();
  for (const auto& e : raw.authorship) {
    doc["authorship"].push_back({{"author", e.author}, {"paper", e.paper}, {"weight", *e.weight}});
  }
  doc["citations"] = json::array();
  for (const auto& e : raw.citations) doc["citations"].push_back({{"from", e.from}, {"to", e.to}});
  if (!raw.reputation.empty()) {
    doc["reputation"] = json::array();
    for (const auto& e : raw.reputation) {
      doc["reputation"].push_back({{"from", e.from}, {"to", e.to}, {"rating", e.rating}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace citex
