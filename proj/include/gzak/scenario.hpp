#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gzak/action.hpp"
#include "gzak/error.hpp"
#include "gzak/group.hpp"

namespace gzak {

/// Unreadable file, malformed JSON, or a field that is missing or of the wrong type.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TranslationBlock {
  FiniteAbelianGroup group;
  std::vector<Element> subgroup_generators;
  std::vector<Eigen::VectorXcd> generators;
  std::vector<Eigen::VectorXcd> test_functions;
};

/// A scenario file: either a group action with generators on the space, or a
/// translation block (subgroup of a finite abelian group, generators on G).
struct Scenario {
  int schema_version = 1;
  std::string name;
  std::optional<QuasiInvariantAction> action;
  std::vector<Eigen::VectorXcd> generators;
  std::vector<Eigen::VectorXcd> test_functions;
  std::optional<TranslationBlock> translation;
};

inline constexpr int kSchemaVersion = 1;

/// Throws ParseError for I/O and structural problems, InputError for values
/// that are well-formed but invalid (weights, permutations, lengths).
Scenario parse_scenario(const std::filesystem::path& path);
Scenario parse_scenario_text(const std::string& text);

}  // namespace gzak
