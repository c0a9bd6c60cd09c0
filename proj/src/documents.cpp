#include "topo/documents.hpp"

#include <algorithm>

namespace topo {

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(Errc::DuplicateLabel,
                    "label \"" + names_[i] + "\" appears more than once");
}

Point Labels::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return Point(i);
  throw Error(Errc::UnknownLabel, "unknown point label \"" + label + "\"");
}

Labels default_labels(unsigned n, char prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    names.push_back(std::string(1, prefix) + std::to_string(i));
  return Labels(std::move(names));
}

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop =
        e.byte == 0 ? 0 : std::min(text.size(), std::size_t(e.byte) - 1);
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(Errc::SyntaxError, "malformed JSON at line " +
                                       std::to_string(line) + ", column " +
                                       std::to_string(column));
  }
}

void require_object(const json& j, const char* doc) {
  if (!j.is_object())
    throw Error(Errc::TypeMismatch,
                std::string(doc) + " document must be a JSON object");
}

void reject_unknown_fields(const json& j,
                           std::initializer_list<std::string_view> allowed,
                           const char* doc) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(Errc::UnknownField, std::string(doc) +
                                          " document has unknown field \"" +
                                          key + "\"");
  }
}

const json& require_field(const json& j, const char* name, const char* doc) {
  const auto it = j.find(name);
  if (it == j.end())
    throw Error(Errc::MissingField, std::string(doc) +
                                        " document is missing field \"" +
                                        name + "\"");
  return *it;
}

void check_version(const json& j, const char* doc) {
  const json& v = require_field(j, "format_version", doc);
  if (!v.is_number_integer())
    throw Error(Errc::TypeMismatch, "format_version must be an integer");
  if (v.get<int>() != kFormatVersion)
    throw Error(Errc::FormatVersionMismatch,
                "format_version " + v.dump() + " is not supported; expected " +
                    std::to_string(kFormatVersion));
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array())
    throw Error(Errc::TypeMismatch, std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_string())
      throw Error(Errc::TypeMismatch,
                  std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Mask mask_of_labels(const json& arr, const Labels& labels, const char* what) {
  Mask m = 0;
  for (const std::string& label : string_array(arr, what))
    m |= mask_bit(labels.index_of(label));
  return m;
}

json labels_of_mask(Mask m, const Labels& labels) {
  json arr = json::array();
  for (unsigned p = 0; p < labels.size(); ++p)
    if (m & mask_bit(p)) arr.push_back(labels.name(p));
  return arr;
}

}  // namespace

ParsedSpace parse_space(const std::string& text) {
  const json j = parse_text(text);
  require_object(j, "space");
  reject_unknown_fields(j, {"format_version", "points", "opens"}, "space");
  check_version(j, "space");

  Labels labels(string_array(require_field(j, "points", "space"), "points"));

  const json& opens = require_field(j, "opens", "space");
  if (!opens.is_array())
    throw Error(Errc::TypeMismatch, "opens must be an array of label arrays");
  std::vector<Mask> masks;
  masks.reserve(opens.size());
  for (const json& open : opens)
    masks.push_back(mask_of_labels(open, labels, "each open set"));

  return ParsedSpace{make_space_from_masks(labels.size(), masks),
                     std::move(labels)};
}

Ideal parse_ideal(const std::string& text, const Labels& labels) {
  const json j = parse_text(text);
  require_object(j, "ideal");
  reject_unknown_fields(j, {"format_version", "generator", "members"},
                        "ideal");
  check_version(j, "ideal");

  const bool has_generator = j.contains("generator");
  const bool has_members = j.contains("members");
  if (has_generator && has_members)
    throw Error(Errc::UnknownField,
                "ideal document must carry either \"generator\" or "
                "\"members\", not both");
  if (!has_generator && !has_members)
    throw Error(Errc::MissingField,
                "ideal document is missing field \"generator\" (or "
                "\"members\")");

  const unsigned n = labels.size();
  if (has_generator)
    return Ideal(n, mask_of_labels(j["generator"], labels, "generator"));

  const json& members = j["members"];
  if (!members.is_array())
    throw Error(Errc::TypeMismatch,
                "members must be an array of label arrays");
  std::vector<PointSet> sets;
  sets.reserve(members.size());
  for (const json& m : members)
    sets.push_back(PointSet(n, mask_of_labels(m, labels, "each member")));
  return make_ideal(n, sets);
}

SpaceMap parse_map(const std::string& text, const ParsedSpace& domain,
                   const ParsedSpace& codomain) {
  const json j = parse_text(text);
  require_object(j, "map");
  reject_unknown_fields(j, {"format_version", "assignment"}, "map");
  check_version(j, "map");

  const json& assignment = require_field(j, "assignment", "map");
  if (!assignment.is_object())
    throw Error(Errc::TypeMismatch,
                "assignment must be an object of label-to-label entries");
  for (const auto& [key, value] : assignment.items()) {
    domain.labels.index_of(key);  // rejects stray keys
    if (!value.is_string())
      throw Error(Errc::TypeMismatch, "assignment values must be strings");
  }

  std::vector<Point> f(domain.labels.size());
  for (unsigned p = 0; p < domain.labels.size(); ++p) {
    const std::string& name = domain.labels.name(p);
    const auto it = assignment.find(name);
    if (it == assignment.end())
      throw Error(Errc::MissingField,
                  "assignment is missing domain point \"" + name + "\"");
    f[p] = codomain.labels.index_of(it->get<std::string>());
  }
  return SpaceMap(domain.space, codomain.space, f);
}

json space_to_json(const FiniteSpace& s, const Labels& labels) {
  json j;
  j["format_version"] = kFormatVersion;
  j["points"] = labels.names();
  json opens = json::array();
  for (Mask m : s.open_masks()) opens.push_back(labels_of_mask(m, labels));
  j["opens"] = std::move(opens);
  return j;
}

json ideal_to_json(const Ideal& i, const Labels& labels) {
  json j;
  j["format_version"] = kFormatVersion;
  j["generator"] = labels_of_mask(i.generator_mask(), labels);
  return j;
}

json map_to_json(const std::vector<Point>& f, const Labels& domain,
                 const Labels& codomain) {
  json assignment = json::object();
  for (unsigned p = 0; p < f.size(); ++p)
    assignment[domain.name(p)] = codomain.name(f[p]);
  json j;
  j["format_version"] = kFormatVersion;
  j["assignment"] = std::move(assignment);
  return j;
}

json set_to_json(const PointSet& a, const Labels& labels) {
  return labels_of_mask(a.bits(), labels);
}

json witness_to_json(const Witness& w) {
  json j;
  j["canonical_index"] = w.canonical_index;
  j["violated_clause"] = w.violated_clause;

  Labels xl, yl;
  if (w.domain) {
    xl = default_labels(w.domain->carrier_size(), 'x');
    j["domain"] = space_to_json(*w.domain, xl);
  }
  if (w.codomain) {
    yl = default_labels(w.codomain->carrier_size(), 'y');
    j["codomain"] = space_to_json(*w.codomain, yl);
  }
  if (w.map) j["map"] = map_to_json(*w.map, xl, yl);
  if (w.ideal_domain) j["ideal_domain"] = ideal_to_json(*w.ideal_domain, xl);
  if (w.ideal_codomain)
    j["ideal_codomain"] = ideal_to_json(*w.ideal_codomain, yl);
  if (w.subset) {
    j["subset"] = set_to_json(*w.subset, w.subset_on_codomain ? yl : xl);
    j["subset_on"] = w.subset_on_codomain ? "codomain" : "domain";
  }
  return j;
}

std::string serialize_space(const FiniteSpace& s, const Labels& labels) {
  return dump_document(space_to_json(s, labels));
}

std::string serialize_ideal(const Ideal& i, const Labels& labels) {
  return dump_document(ideal_to_json(i, labels));
}

std::string serialize_map(const SpaceMap& f, const Labels& domain,
                          const Labels& codomain) {
  std::vector<Point> table(f.assignment().begin(), f.assignment().end());
  return dump_document(map_to_json(table, domain, codomain));
}

std::string dump_document(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace topo
