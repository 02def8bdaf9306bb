#include "meshkit/fixtures.hpp"

#include "meshkit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace meshkit {

// Generated at configure time from fixtures/*.pat.
namespace embedded_fixtures {
struct File {
  const char* name;
  const char* text;
};
extern const File kFiles[];
extern const std::size_t kFileCount;
}  // namespace embedded_fixtures

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string set_name_from_stem(std::string stem) {
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return stem;
}

}  // namespace

std::vector<NamedPattern> parse_fixture_text(std::string_view text, std::string_view source) {
  std::vector<NamedPattern> out;
  std::string pending_label;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      pending_label.clear();
      continue;
    }
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      pending_label = std::string(trim(body.substr(0, body.find(':'))));
      continue;
    }
    try {
      Pattern pat = parse_pattern(line);
      std::string label = pending_label.empty() ? std::string(source) + "[" + std::to_string(out.size()) + "]"
                                                : pending_label;
      out.push_back({std::move(label), std::move(pat)});
    } catch (const std::exception& e) {
      throw FixtureError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what());
    }
    pending_label.clear();
  }
  return out;
}

void FixtureLibrary::add(std::string name, std::string_view text, std::string_view source) {
  sets_[std::move(name)] = parse_fixture_text(text, source);
}

FixtureLibrary FixtureLibrary::embedded() {
  FixtureLibrary lib;
  for (std::size_t i = 0; i < embedded_fixtures::kFileCount; ++i) {
    const auto& f = embedded_fixtures::kFiles[i];
    lib.add(set_name_from_stem(f.name), f.text, std::string(f.name) + ".pat");
  }
  return lib;
}

FixtureLibrary FixtureLibrary::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw FixtureError("fixture directory not found: " + dir.string());
  }
  FixtureLibrary lib;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".pat") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    lib.add(set_name_from_stem(entry.path().stem().string()), buf.str(), entry.path().filename().string());
  }
  return lib;
}

bool FixtureLibrary::has(std::string_view name) const { return sets_.find(name) != sets_.end(); }

const std::vector<NamedPattern>& FixtureLibrary::set(std::string_view name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw FixtureError("unknown fixture set '" + std::string(name) + "'");
  return it->second;
}

std::vector<Pattern> FixtureLibrary::patterns(std::string_view name) const {
  std::vector<Pattern> out;
  for (const auto& np : set(name)) out.push_back(np.pattern);
  return out;
}

const Pattern& FixtureLibrary::get(std::string_view name, std::string_view label) const {
  for (const auto& np : set(name)) {
    if (np.label == label) return np.pattern;
  }
  throw FixtureError("fixture set '" + std::string(name) + "' has no pattern '" + std::string(label) + "'");
}

std::vector<std::string> FixtureLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : sets_) out.push_back(name);
  return out;
}

const FixtureLibrary& default_fixtures() {
  static const FixtureLibrary lib = [] {
    if (const char* dir = std::getenv("MESHKIT_FIXTURES"); dir && *dir) {
      return FixtureLibrary::from_directory(dir);
    }
    return FixtureLibrary::embedded();
  }();
  return lib;
}

std::vector<Pattern> fixture(std::string_view name) { return default_fixtures().patterns(name); }

const std::vector<Pattern>& simple_basis() {
  static const std::vector<Pattern> basis = symmetry_closure(fixture("SIMPLE_GENERATORS"));
  return basis;
}

}  // namespace meshkit
