#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "topo/continuity.hpp"
#include "topo/finite_space.hpp"
#include "topo/ideal.hpp"
#include "topo/verify.hpp"

namespace topo {

inline constexpr int kFormatVersion = 1;

/// Point labels for one space, in canonical index order. The algebra works
/// on indices only; labels exist to read documents and write reports.
class Labels {
 public:
  Labels() = default;
  explicit Labels(std::vector<std::string> names);

  unsigned size() const noexcept { return unsigned(names_.size()); }
  const std::string& name(Point p) const { return names_.at(p); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Raises UnknownLabel.
  Point index_of(const std::string& label) const;

 private:
  std::vector<std::string> names_;
};

/// "x0", "x1", ..; used for witnesses, which have no source document.
Labels default_labels(unsigned n, char prefix);

struct ParsedSpace {
  FiniteSpace space;
  Labels labels;
};

// Parsers take whole document texts. Malformed text raises SyntaxError with
// line and column; unknown fields, missing fields, wrong types and a wrong
// format_version are each rejected with their own code; label problems raise
// UnknownLabel / DuplicateLabel; semantic violations surface unchanged from
// the validating constructors.

ParsedSpace parse_space(const std::string& text);
Ideal parse_ideal(const std::string& text, const Labels& labels);
SpaceMap parse_map(const std::string& text, const ParsedSpace& domain,
                   const ParsedSpace& codomain);

nlohmann::json space_to_json(const FiniteSpace& s, const Labels& labels);
nlohmann::json ideal_to_json(const Ideal& i, const Labels& labels);
nlohmann::json map_to_json(const std::vector<Point>& f, const Labels& domain,
                           const Labels& codomain);
nlohmann::json set_to_json(const PointSet& a, const Labels& labels);
nlohmann::json witness_to_json(const Witness& w);

std::string serialize_space(const FiniteSpace& s, const Labels& labels);
std::string serialize_ideal(const Ideal& i, const Labels& labels);
std::string serialize_map(const SpaceMap& f, const Labels& domain,
                          const Labels& codomain);

/// Canonical rendering for every report document: two-space indent,
/// alphabetical keys, trailing newline. Byte-identical for equal payloads.
std::string dump_document(const nlohmann::json& j);

}  // namespace topo
