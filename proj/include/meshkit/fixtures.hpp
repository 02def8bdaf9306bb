#pragma once

// Named pattern sets stored as DSL text, one pattern per line. A comment line
// ("# label: note") directly above a pattern names it.
//
// The fixture files are compiled into the library; setting MESHKIT_FIXTURES
// to a directory of *.pat files replaces them at run time.

#include "meshkit/pattern.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meshkit {

struct NamedPattern {
  std::string label;
  Pattern pattern;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one fixture file. Errors name the source and the line number.
std::vector<NamedPattern> parse_fixture_text(std::string_view text, std::string_view source);

class FixtureLibrary {
 public:
  /// The fixture files built into the library.
  static FixtureLibrary embedded();
  /// Every *.pat file in `dir`; the set name is the upper-cased file stem.
  static FixtureLibrary from_directory(const std::filesystem::path& dir);

  bool has(std::string_view name) const;
  /// Throws FixtureError for an unknown set name.
  const std::vector<NamedPattern>& set(std::string_view name) const;
  std::vector<Pattern> patterns(std::string_view name) const;
  /// A single labelled pattern. Throws FixtureError if absent.
  const Pattern& get(std::string_view name, std::string_view label) const;
  std::vector<std::string> names() const;

 private:
  void add(std::string name, std::string_view text, std::string_view source);
  std::map<std::string, std::vector<NamedPattern>, std::less<>> sets_;
};

/// The process-wide library: MESHKIT_FIXTURES if set, otherwise embedded.
/// Loaded once on first use.
const FixtureLibrary& default_fixtures();

/// Shorthand for default_fixtures().patterns(name). Names: KNUTH, WEST2, W1,
/// W2, I_SET, J3, J3_MESH, J_SMALL, J2_SET, J1_SET, W3_BASIS,
/// W3_SIMPLIFICATION, BUBBLE_ID, BUBBLE_ID_CLASSICAL, BUBBLE_1243,
/// SIMPLE_GENERATORS, EXAMPLES.
std::vector<Pattern> fixture(std::string_view name);

/// The simple-permutation generators closed under the eight symmetries.
const std::vector<Pattern>& simple_basis();

}  // namespace meshkit
