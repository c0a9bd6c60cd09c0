#include "topo/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topo/documents.hpp"
#include "topo/enumeration.hpp"
#include "topo/operators.hpp"
#include "topo/verify.hpp"

namespace topo::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::IoError, "cannot open \"" + path + "\" for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "failed reading \"" + path + "\"");
  return std::move(ss).str();
}

PointSet set_of_csv(const std::string& csv, const Labels& labels) {
  Mask m = 0;
  if (!csv.empty()) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = csv.find(',', start);
      m |= mask_bit(labels.index_of(csv.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return PointSet(labels.size(), m);
}

json bounds_to_json(const UniverseBounds& b) {
  json j;
  j["include_ideals"] = b.include_ideals;
  j["max_codomain_points"] = b.max_codomain_points;
  j["max_domain_points"] = b.max_domain_points;
  j["sample_budget"] = b.sample_budget;
  return j;
}

void print_elapsed(std::ostream& err, std::chrono::duration<double> elapsed) {
  err << "elapsed: " << std::fixed << std::setprecision(3) << elapsed.count()
      << "s\n";
}

// --- operator ---------------------------------------------------------------

const std::vector<std::string> kSetOperators = {
    "cl",   "int",     "min-nbhd", "cl-theta", "int-theta", "int-tau-theta",
    "star", "cl-star", "gamma",    "psi-gamma", "cl-sigma"};
const std::vector<std::string> kSpaceOperators = {"tau-theta", "tau-star",
                                                  "sigma"};

bool operator_needs_ideal(const std::string& name) {
  return name == "star" || name == "cl-star" || name == "gamma" ||
         name == "psi-gamma" || name == "cl-sigma" || name == "tau-star" ||
         name == "sigma";
}

struct OperatorArgs {
  std::string name;
  std::string space_path;
  std::string ideal_path;
  std::string set_csv;
  std::string point_label;
  bool set_given = false;
  bool point_given = false;
};

int run_operator(const OperatorArgs& a, std::ostream& out) {
  const ParsedSpace ps = parse_space(read_file(a.space_path));
  const FiniteSpace& s = ps.space;
  const unsigned n = s.carrier_size();

  if (!a.ideal_path.empty() && !operator_needs_ideal(a.name))
    throw Error(Errc::UsageError,
                "operator " + a.name + " does not take --ideal");
  if (a.point_given && a.name != "min-nbhd")
    throw Error(Errc::UsageError,
                "operator " + a.name + " does not take --point");
  if (a.set_given &&
      (a.name == "min-nbhd" ||
       std::find(kSpaceOperators.begin(), kSpaceOperators.end(), a.name) !=
           kSpaceOperators.end()))
    throw Error(Errc::UsageError,
                "operator " + a.name + " does not take --set");

  const Ideal ideal = a.ideal_path.empty()
                          ? Ideal::trivial(n)
                          : parse_ideal(read_file(a.ideal_path), ps.labels);

  json report;
  report["operator"] = a.name;

  if (a.name == "min-nbhd") {
    if (!a.point_given)
      throw Error(Errc::UsageError, "operator min-nbhd requires --point");
    const Point p = ps.labels.index_of(a.point_label);
    report["point"] = a.point_label;
    report["result"] = set_to_json(minimal_nbhd(s, p), ps.labels);
  } else if (a.name == "tau-theta" || a.name == "tau-star" ||
             a.name == "sigma") {
    const FiniteSpace derived = a.name == "tau-theta" ? tau_theta(s)
                                : a.name == "tau-star" ? tau_star(s, ideal)
                                                       : sigma(s, ideal);
    report["space"] = space_to_json(derived, ps.labels);
  } else {
    const PointSet input = set_of_csv(a.set_csv, ps.labels);
    report["input"] = set_to_json(input, ps.labels);
    PointSet result = PointSet::empty(n);
    if (a.name == "cl") {
      result = closure(s, input);
    } else if (a.name == "int") {
      result = interior(s, input);
    } else if (a.name == "cl-theta") {
      result = theta_closure(s, input);
    } else if (a.name == "int-theta") {
      result = theta_interior(s, input);
    } else if (a.name == "int-tau-theta") {
      result = tau_theta_interior(s, input);
    } else if (a.name == "star") {
      result = local_function(s, ideal, input);
    } else if (a.name == "cl-star") {
      result = star_closure(s, ideal, input);
    } else if (a.name == "gamma") {
      result = gamma(s, ideal, input);
    } else if (a.name == "psi-gamma") {
      result = psi_gamma(s, ideal, input);
    } else {  // cl-sigma
      const ClSequence seq = cl_sequence(s, ideal, input);
      json stages = json::array();
      for (const PointSet& st : seq.stages)
        stages.push_back(set_to_json(st, ps.labels));
      report["stages"] = std::move(stages);
      report["stabilized_at"] = seq.stabilized_at;
      result = seq.fixpoint();
    }
    report["result"] = set_to_json(result, ps.labels);
  }

  out << dump_document(report);
  return 0;
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string x_path, y_path, map_path, ideal_x_path, ideal_y_path;
};

int run_classify(const ClassifyArgs& a, std::ostream& out) {
  if (a.ideal_x_path.empty() != a.ideal_y_path.empty())
    throw Error(Errc::UsageError,
                "--ideal-x and --ideal-y must be given together");

  const ParsedSpace x = parse_space(read_file(a.x_path));
  const ParsedSpace y = parse_space(read_file(a.y_path));
  const SpaceMap f = parse_map(read_file(a.map_path), x, y);

  ContinuityReport r;
  if (a.ideal_x_path.empty()) {
    r = classify(f);
  } else {
    const Ideal ix = parse_ideal(read_file(a.ideal_x_path), x.labels);
    const Ideal iy = parse_ideal(read_file(a.ideal_y_path), y.labels);
    r = classify(f, ix, iy);
  }

  json report;
  report["continuous"] = r.continuous;
  report["weakly_continuous"] = r.weakly_continuous;
  report["theta_continuous"] = r.theta_continuous;
  report["faintly_continuous"] = r.faintly_continuous;
  report["tau_theta_continuous"] = r.tau_theta_continuous;
  if (r.ideal_results) {
    json ideal;
    ideal["compatible"] = r.ideal_results->ideal_compatible;
    ideal["tau_star_to_sigma_continuous"] =
        r.ideal_results->tau_star_to_sigma_continuous;
    ideal["sigma_to_sigma_continuous"] =
        r.ideal_results->sigma_to_sigma_continuous;
    report["ideal"] = std::move(ideal);
  }
  out << dump_document(report);
  return 0;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  std::string kind;
  unsigned n = 3;
  unsigned nx = 2, ny = 2;
  bool list = false;
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  json report;
  report["kind"] = a.kind;
  if (a.kind == "topologies") {
    const auto spaces = enumerate_topologies(a.n);
    report["n"] = a.n;
    report["count"] = spaces.size();
    if (a.list) {
      const Labels labels = default_labels(a.n, 'x');
      json items = json::array();
      for (const FiniteSpace& s : spaces) {
        json opens = json::array();
        for (Mask m : s.open_masks()) {
          json open = json::array();
          for (unsigned p = 0; p < a.n; ++p)
            if (m & mask_bit(p)) open.push_back(labels.name(p));
          opens.push_back(std::move(open));
        }
        items.push_back(std::move(opens));
      }
      report["items"] = std::move(items);
    }
  } else if (a.kind == "ideals") {
    const auto ideals = enumerate_ideals(a.n);
    report["n"] = a.n;
    report["count"] = ideals.size();
    if (a.list) {
      const Labels labels = default_labels(a.n, 'x');
      json items = json::array();
      for (const Ideal& i : ideals)
        items.push_back(set_to_json(i.generator(), labels));
      report["items"] = std::move(items);
    }
  } else {  // maps
    const MapRange maps = enumerate_maps(a.nx, a.ny);
    report["nx"] = a.nx;
    report["ny"] = a.ny;
    report["count"] = maps.size();
    if (a.list) {
      const Labels xl = default_labels(a.nx, 'x');
      const Labels yl = default_labels(a.ny, 'y');
      json items = json::array();
      for (std::uint64_t mi = 0; mi < maps.size(); ++mi) {
        const std::vector<Point> f = maps.at(mi);
        json assignment = json::object();
        for (unsigned p = 0; p < a.nx; ++p)
          assignment[xl.name(p)] = yl.name(f[p]);
        items.push_back(std::move(assignment));
      }
      report["items"] = std::move(items);
    }
  }
  out << dump_document(report);
  return 0;
}

// --- verify / mine / matrix ---------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  unsigned max_n = 3;
  unsigned jobs = 1;
  std::uint64_t sample = 0;
  bool no_ideals = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto id = theorem_from_name(a.theorem);
  if (!id)
    throw Error(Errc::UsageError, "unknown theorem \"" + a.theorem + "\"");
  UniverseBounds bounds;
  bounds.max_domain_points = a.max_n;
  bounds.max_codomain_points = a.max_n;
  bounds.include_ideals = !a.no_ideals;
  bounds.sample_budget = a.sample;

  const VerificationReport r =
      check_theorem(*id, bounds, std::max(1u, a.jobs));

  json report;
  report["theorem"] = theorem_name(r.theorem);
  report["universe"] = bounds_to_json(r.universe);
  report["instances_checked"] = r.instances_checked;
  report["violated"] = r.violated();
  if (r.witness) report["witness"] = witness_to_json(*r.witness);
  out << dump_document(report);
  print_elapsed(err, r.elapsed);
  return r.violated() ? 1 : 0;
}

struct MineArgs {
  std::string claim;
  unsigned max_x = 3, max_y = 3;
  unsigned jobs = 1;
  std::uint64_t sample = 0;
};

int run_mine(const MineArgs& a, std::ostream& out, std::ostream& err) {
  const Claim claim = parse_claim(a.claim);
  UniverseBounds bounds;
  bounds.max_domain_points = a.max_x;
  bounds.max_codomain_points = a.max_y;
  bounds.sample_budget = a.sample;

  const MineResult r =
      mine_counterexample(claim, bounds, std::max(1u, a.jobs));

  json report;
  report["claim"] = r.claim.text;
  report["bounds"] = bounds_to_json(r.bounds);
  report["instances_checked"] = r.instances_checked;
  report["found"] = r.witness.has_value();
  if (r.witness) report["witness"] = witness_to_json(*r.witness);
  out << dump_document(report);
  print_elapsed(err, r.elapsed);
  return r.witness ? 1 : 0;
}

struct MatrixArgs {
  unsigned max_n = 3;
  unsigned jobs = 1;
  std::uint64_t sample = 0;
};

int run_matrix(const MatrixArgs& a, std::ostream& out, std::ostream& err) {
  UniverseBounds bounds;
  bounds.max_domain_points = a.max_n;
  bounds.max_codomain_points = a.max_n;
  bounds.sample_budget = a.sample;

  const ImplicationMatrix m = implication_matrix(bounds, std::max(1u, a.jobs));

  json rows = json::array();
  for (std::size_t p = 0; p < kAllNotions.size(); ++p) {
    json row;
    row["premise"] = notion_name(kAllNotions[p]);
    json cells = json::array();
    for (std::size_t q = 0; q < kAllNotions.size(); ++q) {
      const MatrixEntry& e = m.entries[p][q];
      json cell;
      cell["conclusion"] = notion_name(kAllNotions[q]);
      cell["holds"] = e.holds;
      if (!e.note.empty()) cell["note"] = e.note;
      if (e.witness) cell["witness"] = witness_to_json(*e.witness);
      cells.push_back(std::move(cell));
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }

  json report;
  report["bounds"] = bounds_to_json(m.bounds);
  report["maps_checked"] = m.maps_checked;
  report["rows"] = std::move(rows);
  out << dump_document(report);
  print_elapsed(err, m.elapsed);
  return 0;
}

int emit_error(std::ostream& err, Errc code, const std::string& message) {
  json j;
  j["error"]["code"] = errc_name(code);
  j["error"]["message"] = message;
  err << dump_document(j);
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite-model toolkit for topologies with ideals"};
  app.require_subcommand(1);

  OperatorArgs op_args;
  auto* op = app.add_subcommand(
      "operator", "Apply a set operator or derive a topology");
  {
    std::vector<std::string> names = kSetOperators;
    names.insert(names.end(), kSpaceOperators.begin(), kSpaceOperators.end());
    op->add_option("name", op_args.name, "Operator name")
        ->required()
        ->check(CLI::IsMember(names));
  }
  op->add_option("--space", op_args.space_path, "Space document path")
      ->required();
  op->add_option("--ideal", op_args.ideal_path,
                 "Ideal document path (defaults to the trivial ideal)");
  auto* set_opt = op->add_option(
      "--set", op_args.set_csv, "Subset as comma-separated point labels");
  auto* point_opt =
      op->add_option("--point", op_args.point_label, "Point label");

  ClassifyArgs cls_args;
  auto* cls = app.add_subcommand(
      "classify", "Evaluate every continuity notion for one map");
  cls->add_option("--x", cls_args.x_path, "Domain space document")->required();
  cls->add_option("--y", cls_args.y_path, "Codomain space document")
      ->required();
  cls->add_option("--map", cls_args.map_path, "Map document")->required();
  cls->add_option("--ideal-x", cls_args.ideal_x_path, "Domain ideal document");
  cls->add_option("--ideal-y", cls_args.ideal_y_path,
                  "Codomain ideal document");

  EnumerateArgs enum_args;
  auto* en = app.add_subcommand("enumerate",
                                "Enumerate topologies, ideals, or maps");
  en->add_option("kind", enum_args.kind, "What to enumerate")
      ->required()
      ->check(CLI::IsMember({"topologies", "ideals", "maps"}));
  en->add_option("--n", enum_args.n, "Carrier size (topologies, ideals)");
  en->add_option("--nx", enum_args.nx, "Domain carrier size (maps)");
  en->add_option("--ny", enum_args.ny, "Codomain carrier size (maps)");
  en->add_flag("--list", enum_args.list, "List the items, not just the count");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand(
      "verify", "Check one statement over every instance within bounds");
  {
    std::vector<std::string> names;
    for (TheoremId id : kAllTheorems) names.push_back(theorem_name(id));
    ver->add_option("--theorem", ver_args.theorem, "Statement identifier")
        ->required()
        ->check(CLI::IsMember(names));
  }
  ver->add_option("--max-n", ver_args.max_n,
                  "Carrier-size bound for both sides");
  ver->add_option("--jobs", ver_args.jobs, "Worker threads");
  ver->add_option("--sample", ver_args.sample,
                  "Sample budget; 0 checks everything");
  ver->add_flag("--no-ideals", ver_args.no_ideals,
                "Restrict ideal quantifiers to the trivial ideal");

  MineArgs mine_args;
  auto* mine = app.add_subcommand(
      "mine", "Search for a counterexample to a claim");
  mine->add_option("--claim", mine_args.claim,
                   "\"P=>Q\" over continuity notions, or \"<ID>-no-compat\"")
      ->required();
  mine->add_option("--max-x", mine_args.max_x, "Domain carrier-size bound");
  mine->add_option("--max-y", mine_args.max_y, "Codomain carrier-size bound");
  mine->add_option("--jobs", mine_args.jobs, "Worker threads");
  mine->add_option("--sample", mine_args.sample,
                   "Sample budget; 0 checks everything");

  MatrixArgs mat_args;
  auto* mat = app.add_subcommand(
      "matrix", "Implication matrix over the continuity notions");
  mat->add_option("--max-n", mat_args.max_n,
                  "Carrier-size bound for both sides");
  mat->add_option("--jobs", mat_args.jobs, "Worker threads");
  mat->add_option("--sample", mat_args.sample,
                  "Sample budget; 0 checks everything");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("topocheck");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    return emit_error(err, Errc::UsageError, e.what());
  }

  op_args.set_given = set_opt->count() > 0;
  op_args.point_given = point_opt->count() > 0;

  try {
    if (op->parsed()) return run_operator(op_args, out);
    if (cls->parsed()) return run_classify(cls_args, out);
    if (en->parsed()) return run_enumerate(enum_args, out);
    if (ver->parsed()) return run_verify(ver_args, out, err);
    if (mine->parsed()) return run_mine(mine_args, out, err);
    return run_matrix(mat_args, out, err);
  } catch (const Error& e) {
    const std::string what = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    return emit_error(err, e.code(),
                      what.size() > prefix.size() ? what.substr(prefix.size())
                                                  : what);
  } catch (const std::exception& e) {
    return emit_error(err, Errc::InternalInvariantViolation, e.what());
  }
}

}  // namespace topo::cli
