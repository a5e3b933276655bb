// Command-line front end: exact spherical/special tables, positivity
// checks, dual-space dynamics and topology, coset measures, permutation
// group certificates, coloring/membership queries, and brute-force ball
// computations. Output is deterministic; JSON results are wrapped in an
// envelope carrying a schema version.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treeharm/automorphism.hpp"
#include "treeharm/coset_measure.hpp"
#include "treeharm/dual_dynamics.hpp"
#include "treeharm/fell.hpp"
#include "treeharm/group_kind.hpp"
#include "treeharm/perm.hpp"
#include "treeharm/radu.hpp"
#include "treeharm/rational.hpp"
#include "treeharm/special.hpp"
#include "treeharm/spherical.hpp"
#include "treeharm/tree.hpp"

namespace {

using nlohmann::json;
using namespace treeharm;

json envelope(const std::string& command, json data) {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["data"] = std::move(data);
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

EnumerationOptions enum_options_from_env() {
  EnumerationOptions opt;
  if (const char* cap = std::getenv("TREEHARM_ENUM_CAP")) {
    try {
      size_t pos = 0;
      opt.cap = std::stoull(cap, &pos);
      if (pos != std::string(cap).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DomainError("TREEHARM_ENUM_CAP must be a non-negative integer");
    }
  }
  return opt;
}

GroupKind parse_kind(const std::string& kind, int d, int dprime) {
  if (kind == "vt" || kind == "vertex-transitive") {
    if (dprime > 0 && dprime != d)
      throw DomainError("the vertex-transitive kind has a single degree");
    return VertexTransitive{d};
  }
  if (kind == "two-orbit") {
    if (dprime <= 0) throw DomainError("--dprime is required for the two-orbit kind");
    return TwoOrbits{d, dprime};
  }
  throw DomainError("unknown kind '" + kind + "' (expected vt or two-orbit)");
}

json kind_json(const GroupKind& kind) {
  json j;
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) {
    j["kind"] = "vertex_transitive";
    j["d"] = vt->d;
  } else {
    const auto& two = std::get<TwoOrbits>(kind);
    j["kind"] = "two_orbit";
    j["d"] = two.d;
    j["dprime"] = two.dprime;
  }
  return j;
}

json rational_json(const Rational& r) { return to_string(r); }

std::string csv_measure_row(CosetFamilyTag tag, long long n, const MeasureValue& m) {
  std::ostringstream os;
  os << family_name(tag) << "," << n << "," << numerator_of(m.value).str() << ","
     << denominator_of(m.value).str() << "," << to_string(m.normalization);
  return os.str();
}

json root_value_json(const RootValue& rv) {
  json j;
  j["value"] = rv.value;
  j["exact"] = rv.exact;
  if (rv.exact) j["exact_value"] = rational_json(rv.exact_value);
  return j;
}

json induce_json(const InduceResult& res) {
  json j;
  if (const auto* pair = std::get_if<InducePair>(&res)) {
    j["type"] = "pair";
    j["alpha_plus"] = root_value_json(pair->alpha_plus);
    j["alpha_minus"] = root_value_json(pair->alpha_minus);
  } else {
    j["type"] = "exceptional_image";
    j["alpha"] = rational_json(std::get<ExceptionalImage>(res).alpha);
  }
  return j;
}

Ball ball_from_options(int d, int dprime, const std::string& center, int root_type, int radius) {
  TreeParams params{d, dprime > 0 ? dprime : d};
  CenterKind kind;
  if (center == "vertex")
    kind = CenterKind::Vertex;
  else if (center == "edge")
    kind = CenterKind::Edge;
  else
    throw DomainError("center must be vertex or edge");
  return build_ball(params, kind, root_type, radius);
}

BallAutomorphism automorphism_from_file(const Ball& ball, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open automorphism file '" + path + "'");
  json j;
  in >> j;
  return automorphism_from_json(ball, j);
}

SubtreePlacement parse_placement(const Ball& ball, const std::string& text) {
  auto first = text.find(':');
  auto last = text.rfind(':');
  if (first == std::string::npos || first == last)
    throw DomainError("placement must look like kind:address:radius");
  std::string kind = text.substr(0, first);
  std::string addr = text.substr(first + 1, last - first - 1);
  int radius = 0;
  try {
    radius = std::stoi(text.substr(last + 1));
  } catch (const std::exception&) {
    throw DomainError("bad placement radius in '" + text + "'");
  }
  int v = ball.at(parse_addr(addr, ball.root_type));
  if (kind == "vertex") return vertex_placement(v, radius);
  if (kind == "edge") return edge_placement(ball, v, radius);
  throw DomainError("placement kind must be vertex or edge");
}

json placement_json(const Ball& ball, const SubtreePlacement& p) {
  json j;
  j["kind"] = p.kind == CenterKind::Vertex ? "vertex" : "edge";
  j["center"] = format_addr(ball.verts[p.kind == CenterKind::Vertex ? p.center_a : p.center_b].addr);
  j["radius"] = p.radius;
  return j;
}

json partition_report_json(const CosetPartitionReport& rep) {
  json j;
  j["center"] = rep.center_kind == CenterKind::Vertex ? "vertex" : "edge";
  j["total_objects"] = rep.total_objects.str();
  j["measure_sum"] = rep.measure_sum.str();
  j["partition_ok"] = rep.partition_ok;
  j["sizes_ok"] = rep.sizes_ok;
  j["ok"] = rep.ok();
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json e;
    e["family"] = family_name(c.tag);
    e["n"] = c.n;
    e["expected"] = c.expected.str();
    e["realized"] = c.realized.str();
    e["matches"] = c.matches;
    classes.push_back(e);
  }
  j["classes"] = classes;
  return j;
}

struct SphericalArgs {
  std::string kind = "vt";
  int d = 3, dprime = 0;
  std::string alpha = "0";
  int n = 10;
  std::string format = "csv";
};

void run_spherical(const SphericalArgs& a) {
  GroupKind kind = parse_kind(a.kind, a.d, a.dprime);
  auto phi = spherical_sequence(kind, parse_rational(a.alpha), a.n);
  if (a.format == "csv") {
    std::cout << "n,phi_num,phi_den\n";
    for (size_t i = 0; i < phi.size(); ++i)
      std::cout << i << "," << numerator_of(phi[i]).str() << ","
                << denominator_of(phi[i]).str() << "\n";
    return;
  }
  if (a.format != "json") throw DomainError("format must be csv or json");
  json data = kind_json(kind);
  data["alpha"] = a.alpha;
  json values = json::array();
  for (size_t i = 0; i < phi.size(); ++i) {
    json row;
    row["n"] = i;
    row["num"] = numerator_of(phi[i]).str();
    row["den"] = denominator_of(phi[i]).str();
    values.push_back(row);
  }
  data["values"] = values;
  emit(envelope("spherical", data));
}

struct SpecialArgs {
  std::string kind = "vt-plus";
  int d = 3, dprime = 0;
  int n = 10;
};

void run_special(const SpecialArgs& a) {
  SpecialKind kind;
  if (a.kind == "vt-plus")
    kind = SpecialKind::VTPlus;
  else if (a.kind == "vt-minus")
    kind = SpecialKind::VTMinus;
  else if (a.kind == "two-orbit")
    kind = SpecialKind::TwoOrbitSigma;
  else
    throw DomainError("kind must be vt-plus, vt-minus or two-orbit");
  TreeParams params{a.d, a.dprime > 0 ? a.dprime : a.d};
  SpecialTable table = special_sequence(kind, params, a.n);
  auto table_json = [](const std::map<long long, Rational>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = to_string(v);
    return j;
  };
  json data;
  data["kind"] = to_string(kind);
  data["d"] = params.d0;
  data["dprime"] = params.d1;
  data["n"] = a.n;
  data["tau_n"] = table_json(table.tau_n);
  if (kind != SpecialKind::TwoOrbitSigma) data["tau_n_h"] = table_json(table.tau_n_h);
  if (kind == SpecialKind::TwoOrbitSigma) {
    data["tau_m_kv"] = table_json(table.tau_m_kv);
    data["tau_negm_kv"] = table_json(table.tau_negm_kv);
  }
  auto relations = verify_table_relations(table);
  data["relations_ok"] = relations.ok;
  if (!relations.ok) data["first_violation"] = relations.relation;
  data["l2_partial"] = rational_json(l2_partial(kind, params, a.n));
  data["l2_closed_form"] = rational_json(l2_closed_form(kind, params));
  emit(envelope("special", data));
}

struct PsdArgs {
  std::string kind = "vt";
  int d = 3, dprime = 0;
  std::string alpha = "0";
  int radius = 2;
  double tol = 1e-9;
};

void run_psd(const PsdArgs& a) {
  GroupKind kind = parse_kind(a.kind, a.d, a.dprime);
  Ball ball = build_ball(tree_params_of(kind), CenterKind::Vertex, 0, a.radius);
  Rational alpha = parse_rational(a.alpha);
  auto gram = radial_gram(ball, kind, alpha);
  auto res = psd_check(gram, a.tol);
  json data = kind_json(kind);
  data["alpha"] = a.alpha;
  data["classified"] = is_classified(kind, alpha);
  data["radius"] = a.radius;
  data["matrix_size"] = gram.rows();
  data["psd"] = res.psd;
  data["min_eigenvalue"] = res.min_eigenvalue;
  emit(envelope("psd", data));
}

struct DynamicsArgs {
  int d = 3, dprime = 0;
  std::string alpha, gamma;
  bool base_change_op = false;
  bool special_table = false;
};

void run_dynamics(const DynamicsArgs& a) {
  json data;
  data["d"] = a.d;
  if (a.special_table) {
    json rows = json::array();
    for (const auto& row : special_dynamics(a.d)) {
      json r;
      r["op"] = row.op;
      r["source"] = row.source;
      r["images"] = row.images;
      rows.push_back(r);
    }
    data["special"] = rows;
    emit(envelope("dynamics", data));
    return;
  }
  if (a.base_change_op) {
    if (a.dprime <= 0) throw DomainError("--dprime is required for a base change");
    if (a.alpha.empty()) throw DomainError("--alpha is required for a base change");
    auto res = base_change(a.d, a.dprime, parse_rational(a.alpha));
    data["dprime"] = a.dprime;
    data["alpha_v"] = a.alpha;
    data["alpha_vprime"] = rational_json(res.alpha_vprime);
    data["exceptional_endpoint"] = res.exceptional_endpoint;
    emit(envelope("dynamics", data));
    return;
  }
  if (!a.alpha.empty()) {
    Rational alpha = parse_rational(a.alpha);
    auto res = restrict_to_plus(a.d, alpha);
    data["alpha"] = a.alpha;
    if (const auto* single = std::get_if<RestrictSingle>(&res)) {
      data["restriction"] = {{"type", "single"}, {"gamma", rational_json(single->gamma)}};
      data["round_trip"] = induce_json(induce_from_plus(a.d, single->gamma));
    } else {
      data["restriction"] = {{"type", "exceptional_pair"}};
      data["round_trip"] =
          induce_json(induce_from_plus(a.d, Rational(-1) / (a.d - 1)));
    }
    emit(envelope("dynamics", data));
    return;
  }
  if (!a.gamma.empty()) {
    data["gamma"] = a.gamma;
    data["induction"] = induce_json(induce_from_plus(a.d, parse_rational(a.gamma)));
    emit(envelope("dynamics", data));
    return;
  }
  throw DomainError("choose one of --alpha, --gamma, --base-change, --special-table");
}

struct FellArgs {
  std::string kind = "vt";
  int d = 3, dprime = 0;
  std::string target;
  int cuspidals = -1;
};

void run_fell(const FellArgs& a) {
  GroupKind kind = parse_kind(a.kind, a.d, a.dprime);
  json data = kind_json(kind);
  auto points_json = [](const std::vector<DualPoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(dual_point_to_json(p));
    return arr;
  };
  if (!a.target.empty()) data["limit_set"] = points_json(limit_set(kind, parse_rational(a.target)));
  json pairs = json::array();
  for (const auto& [x, y] : non_hausdorff_pairs(kind))
    pairs.push_back({dual_point_to_json(x), dual_point_to_json(y)});
  data["non_hausdorff_pairs"] = pairs;
  data["cortex"] = points_json(cortex(kind));
  if (a.cuspidals >= 0) data["model"] = dual_model_to_json(dual_model(kind, a.cuspidals));
  emit(envelope("fell", data));
}

struct CosetArgs {
  std::string kind = "vt";
  int d = 3, dprime = 0;
  std::string family;
  long long n = 0;
  int parity = 0;
  int table = -1;
  bool verify = false;
  std::string center = "edge";
  int radius = 2;
  std::string format = "csv";
};

CosetFamilyTag parse_family(const std::string& name) {
  if (name == "vertex") return CosetFamilyTag::VertexCoset;
  if (name == "edge") return CosetFamilyTag::EdgeCoset;
  if (name == "edge-inversion") return CosetFamilyTag::EdgeCosetInversion;
  if (name == "edge-kv") return CosetFamilyTag::EdgeCosetKv;
  if (name == "edge-kv-neg") return CosetFamilyTag::EdgeCosetKvNeg;
  throw DomainError("unknown coset family '" + name + "'");
}

void run_coset(const CosetArgs& a) {
  GroupKind kind = parse_kind(a.kind, a.d, a.dprime);
  if (a.verify) {
    int root_type = 0;
    Ball ball = ball_from_options(a.d, a.dprime, a.center, root_type, a.radius);
    emit(envelope("coset", partition_report_json(verify_coset_partition(ball, kind))));
    return;
  }
  const std::string header = "family,n,measure_numerator,measure_denominator,normalization";
  if (a.table >= 0) {
    std::cout << header << "\n";
    for (long long n = 0; n <= a.table; ++n)
      std::cout << csv_measure_row(CosetFamilyTag::VertexCoset, n,
                                   vertex_coset_measure(kind, a.parity, n))
                << "\n";
    for (long long n = -a.table; n <= a.table; ++n)
      std::cout << csv_measure_row(
                       CosetFamilyTag::EdgeCoset, n,
                       edge_coset_measure({CosetFamilyTag::EdgeCoset, n, kind}))
                << "\n";
    if (std::holds_alternative<VertexTransitive>(kind)) {
      for (long long n = -a.table; n <= a.table; ++n)
        std::cout << csv_measure_row(
                         CosetFamilyTag::EdgeCosetInversion, n,
                         edge_coset_measure({CosetFamilyTag::EdgeCosetInversion, n, kind}))
                  << "\n";
    } else {
      for (long long m = 1; m <= a.table; ++m)
        std::cout << csv_measure_row(CosetFamilyTag::EdgeCosetKv, m,
                                     edge_coset_measure({CosetFamilyTag::EdgeCosetKv, m, kind}))
                  << "\n";
      for (long long m = 1; m <= a.table; ++m)
        std::cout << csv_measure_row(
                         CosetFamilyTag::EdgeCosetKvNeg, m,
                         edge_coset_measure({CosetFamilyTag::EdgeCosetKvNeg, m, kind}))
                  << "\n";
    }
    return;
  }
  if (a.family.empty())
    throw DomainError("choose one of --family, --table, --verify");
  CosetFamilyTag tag = parse_family(a.family);
  MeasureValue m = tag == CosetFamilyTag::VertexCoset
                       ? vertex_coset_measure(kind, a.parity, a.n)
                       : edge_coset_measure({tag, a.n, kind});
  if (a.format == "csv") {
    std::cout << header << "\n" << csv_measure_row(tag, a.n, m) << "\n";
    return;
  }
  if (a.format != "json") throw DomainError("format must be csv or json");
  json data = kind_json(kind);
  data["family"] = family_name(tag);
  data["n"] = a.n;
  data["measure_numerator"] = numerator_of(m.value).str();
  data["measure_denominator"] = denominator_of(m.value).str();
  data["normalization"] = to_string(m.normalization);
  emit(envelope("coset", data));
}

struct PermArgs {
  int degree = 0;
  std::vector<std::string> gens;
  std::string group;
  std::uint64_t cap = 100000;
};

void run_perm(const PermArgs& a) {
  std::vector<Permutation> gens;
  int degree = a.degree;
  if (!a.group.empty()) {
    if (degree < 2) throw DomainError("--degree is required with --group");
    auto rotation = [&] {
      Permutation p = Permutation::identity(degree);
      for (int i = 0; i < degree; ++i) p.img[i] = (i + 1) % degree;
      return p;
    };
    if (a.group == "sym") {
      gens.push_back(parse_cycles("(1 2)", degree));
      gens.push_back(rotation());
    } else if (a.group == "alt") {
      for (int k = 3; k <= degree; ++k)
        gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", degree));
      if (degree < 3) gens.push_back(Permutation::identity(degree));
    } else if (a.group == "cyclic") {
      gens.push_back(rotation());
    } else if (a.group == "dihedral") {
      gens.push_back(rotation());
      Permutation r = Permutation::identity(degree);
      for (int i = 0; i < degree; ++i) r.img[i] = degree - 1 - i;
      gens.push_back(r);
    } else if (a.group == "trivial") {
      gens.push_back(Permutation::identity(degree));
    } else {
      throw DomainError("unknown group '" + a.group + "'");
    }
  } else {
    if (degree < 1) throw DomainError("--degree is required");
    for (const auto& text : a.gens) gens.push_back(parse_cycles(text, degree));
  }
  PermGroup group = close_generators(gens, a.cap);
  json data;
  data["degree"] = group.degree;
  data["order"] = group.order();
  json gen_list = json::array();
  for (const auto& g : group.generators) gen_list.push_back(format_cycles(g));
  data["generators"] = gen_list;
  bool two_trans = group.degree >= 2 && is_two_transitive(group);
  data["two_transitive"] = two_trans;
  data["pair_orbits"] = orbit_count_on_pairs(group);
  data["conjugacy_classes"] = conjugacy_class_count(group);
  if (two_trans) data["standard_rep"] = standard_rep_exists_2trans(group);
  if (group.degree <= 8) data["contains_alternating"] = contains_alternating(group);
  emit(envelope("perm", data));
}

struct RaduArgs {
  int d = 3, dprime = 0;
  int radius = 2;
  std::string center = "vertex";
  int root_type = 0;
  bool theta = false;
  bool coloring = false;
  std::string automorphism_file;
  std::string vertex;
  bool vertex_given = false;
  bool membership = false;
  int family = 0;
  std::vector<int> x, y0, y1;
  int eps0 = 0, eps1 = 0;
};

void run_radu(const RaduArgs& a) {
  if (a.theta) {
    json data;
    data["theta"] = theta_prefix();
    emit(envelope("radu", data));
    return;
  }
  Ball ball = ball_from_options(a.d, a.dprime, a.center, a.root_type, a.radius);
  LegalColoring lc = canonical_legal_coloring(ball);
  validate_legal_coloring(ball, lc);
  if (a.coloring) {
    json colors = json::object();
    for (int v = 0; v < ball.size(); ++v) colors[format_addr(ball.verts[v].addr)] = lc.color[v];
    json data;
    data["colors"] = colors;
    emit(envelope("radu", data));
    return;
  }
  if (a.vertex_given) {
    if (a.automorphism_file.empty()) throw DomainError("--automorphism is required");
    BallAutomorphism g = automorphism_from_file(ball, a.automorphism_file);
    int v = ball.at(parse_addr(a.vertex, ball.root_type));
    Permutation sigma = local_action(ball, lc, g, v);
    json data;
    data["vertex"] = a.vertex;
    data["cycles"] = format_cycles(sigma);
    data["one_line"] = permutation_to_json(sigma);
    data["sign"] = sigma.sign();
    emit(envelope("radu", data));
    return;
  }
  if (a.membership) {
    if (a.automorphism_file.empty()) throw DomainError("--automorphism is required");
    BallAutomorphism g = automorphism_from_file(ball, a.automorphism_file);
    RaduVariant variant;
    variant.family = a.family;
    variant.X = a.x;
    variant.Y0 = a.y0;
    variant.Y1 = a.y1;
    if (a.eps0 != 0) variant.eps0 = a.eps0;
    if (a.eps1 != 0) variant.eps1 = a.eps1;
    auto rep = variant_membership_report(ball, lc, g, variant);
    json data;
    data["family"] = variant.family;
    data["family_name"] = family_name(variant);
    data["result"] = to_string(rep.result);
    if (!rep.first_violation.empty()) data["first_violation"] = rep.first_violation;
    data["checked"] = rep.checked;
    data["uncheckable"] = rep.uncheckable;
    emit(envelope("radu", data));
    return;
  }
  throw DomainError("choose one of --theta, --coloring, --vertex, --membership");
}

struct BruteArgs {
  int d = 3, dprime = 0;
  int radius = 2;
  std::string center = "vertex";
  int root_type = 0;
  std::string op = "order";
  std::string kind = "vt";
  int k = 1;
  std::string edge = "0";
  std::string u = "vertex::1";
  std::string v = "vertex:0:1";
};

void run_brute(const BruteArgs& a) {
  Ball ball = ball_from_options(a.d, a.dprime, a.center, a.root_type, a.radius);
  EnumerationOptions opt = enum_options_from_env();
  json data;
  data["d"] = a.d;
  data["dprime"] = a.dprime > 0 ? a.dprime : a.d;
  data["center"] = a.center;
  data["radius"] = a.radius;
  if (a.op == "order") {
    data["order"] = enumerate_automorphisms(ball, opt).size();
    emit(envelope("brute", data));
    return;
  }
  if (a.op == "partition") {
    GroupKind kind = parse_kind(a.kind, a.d, a.dprime);
    data["partition"] = partition_report_json(verify_coset_partition(ball, kind));
    emit(envelope("brute", data));
    return;
  }
  if (a.op == "ipk") {
    int child = ball.at(parse_addr(a.edge, ball.root_type));
    auto rep = check_ipk(ball, a.k, child, opt);
    data["k"] = a.k;
    data["holds"] = rep.holds;
    data["fix_n"] = rep.fix_n;
    data["left"] = rep.left;
    data["right"] = rep.right;
    data["products"] = rep.products;
    emit(envelope("brute", data));
    return;
  }
  if (a.op == "factorize") {
    SubtreePlacement u = parse_placement(ball, a.u);
    SubtreePlacement v = parse_placement(ball, a.v);
    auto rep = check_factorization_i(ball, u, v, opt);
    data["found"] = rep.found;
    data["fix_u"] = rep.fix_u;
    data["fix_v"] = rep.fix_v;
    data["candidates_checked"] = rep.candidates_checked;
    if (rep.found) {
      data["fix_w"] = rep.fix_w;
      data["witness"] = placement_json(ball, rep.witness);
    }
    emit(envelope("brute", data));
    return;
  }
  throw DomainError("unknown op '" + a.op + "' (order, partition, ipk, factorize)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic analysis on thick semi-regular trees"};
  app.require_subcommand(1);

  SphericalArgs spherical_args;
  auto* sph = app.add_subcommand("spherical", "exact spherical function tables");
  sph->add_option("--kind", spherical_args.kind, "vt or two-orbit");
  sph->add_option("--d", spherical_args.d, "degree of the base orbit")->required();
  sph->add_option("--dprime", spherical_args.dprime, "degree of the other orbit");
  sph->add_option("--alpha", spherical_args.alpha, "phi(tau), exact rational")->required();
  sph->add_option("--n", spherical_args.n, "last index of the table");
  sph->add_option("--format", spherical_args.format, "csv or json");
  sph->callback([&] { run_spherical(spherical_args); });

  SpecialArgs special_args;
  auto* spc = app.add_subcommand("special", "special representation coefficient tables");
  spc->add_option("--kind", special_args.kind, "vt-plus, vt-minus or two-orbit");
  spc->add_option("--d", special_args.d, "degree of the base orbit")->required();
  spc->add_option("--dprime", special_args.dprime, "degree of the other orbit");
  spc->add_option("--n", special_args.n, "table depth");
  spc->callback([&] { run_special(special_args); });

  PsdArgs psd_args;
  auto* psd = app.add_subcommand("psd", "positivity of the radial Gram matrix on a ball");
  psd->add_option("--kind", psd_args.kind, "vt or two-orbit");
  psd->add_option("--d", psd_args.d, "degree of the base orbit")->required();
  psd->add_option("--dprime", psd_args.dprime, "degree of the other orbit");
  psd->add_option("--alpha", psd_args.alpha, "phi(tau), exact rational")->required();
  psd->add_option("--radius", psd_args.radius, "ball radius");
  psd->add_option("--tol", psd_args.tol, "eigenvalue tolerance");
  psd->callback([&] { run_psd(psd_args); });

  DynamicsArgs dynamics_args;
  auto* dyn = app.add_subcommand("dynamics", "restriction and induction on parameters");
  dyn->add_option("--d", dynamics_args.d, "degree")->required();
  dyn->add_option("--dprime", dynamics_args.dprime, "other degree (base change)");
  dyn->add_option("--alpha", dynamics_args.alpha, "spherical parameter to restrict");
  dyn->add_option("--gamma", dynamics_args.gamma, "subgroup parameter to induce");
  dyn->add_flag("--base-change", dynamics_args.base_change_op, "re-express at the other orbit");
  dyn->add_flag("--special-table", dynamics_args.special_table,
                "induction/restriction of the special representations");
  dyn->callback([&] { run_dynamics(dynamics_args); });

  FellArgs fell_args;
  auto* fel = app.add_subcommand("fell", "limit sets and the dual-space model");
  fel->add_option("--kind", fell_args.kind, "vt or two-orbit");
  fel->add_option("--d", fell_args.d, "degree of the base orbit")->required();
  fel->add_option("--dprime", fell_args.dprime, "degree of the other orbit");
  fel->add_option("--target", fell_args.target, "parameter whose limit set to compute");
  fel->add_option("--cuspidals", fell_args.cuspidals, "emit the full model with this many cuspidal points");
  fel->callback([&] { run_fell(fell_args); });

  CosetArgs coset_args;
  auto* cos = app.add_subcommand("coset", "double coset Haar measures");
  cos->add_option("--kind", coset_args.kind, "vt or two-orbit");
  cos->add_option("--d", coset_args.d, "degree of the base orbit")->required();
  cos->add_option("--dprime", coset_args.dprime, "degree of the other orbit");
  cos->add_option("--family", coset_args.family,
                  "vertex, edge, edge-inversion, edge-kv, edge-kv-neg");
  cos->add_option("--n", coset_args.n, "displacement index");
  cos->add_option("--parity", coset_args.parity, "base vertex type for the vertex family");
  cos->add_option("--table", coset_args.table, "emit all families up to this index as CSV");
  cos->add_flag("--verify", coset_args.verify, "verify the partition on a ball");
  cos->add_option("--center", coset_args.center, "ball center for --verify");
  cos->add_option("--radius", coset_args.radius, "ball radius for --verify");
  cos->add_option("--format", coset_args.format, "csv or json");
  cos->callback([&] { run_coset(coset_args); });

  PermArgs perm_args;
  auto* prm = app.add_subcommand("perm", "finite permutation group certificates");
  prm->add_option("--degree", perm_args.degree, "number of points");
  prm->add_option("--gen", perm_args.gens, "generator in cycle notation (repeatable)");
  prm->add_option("--group", perm_args.group, "sym, alt, cyclic, dihedral or trivial");
  prm->add_option("--cap", perm_args.cap, "closure size cap");
  prm->callback([&] { run_perm(perm_args); });

  RaduArgs radu_args;
  auto* rad = app.add_subcommand("radu", "colorings, local actions and variant membership");
  rad->add_option("--d", radu_args.d, "degree of the root type");
  rad->add_option("--dprime", radu_args.dprime, "degree of the other type");
  rad->add_option("--radius", radu_args.radius, "ball radius");
  rad->add_option("--center", radu_args.center, "vertex or edge");
  rad->add_option("--root-type", radu_args.root_type, "type of the root vertex");
  rad->add_flag("--theta", radu_args.theta, "first entries of the group-order enumeration");
  rad->add_flag("--coloring", radu_args.coloring, "emit the canonical legal coloring");
  rad->add_option("--automorphism", radu_args.automorphism_file, "JSON file with an automorphism");
  auto* vertex_opt = rad->add_option("--vertex", radu_args.vertex, "vertex address for a local action");
  rad->add_flag("--membership", radu_args.membership, "evaluate variant membership");
  rad->add_option("--family", radu_args.family, "variant family, 1..12");
  rad->add_option("--x", radu_args.x, "radius set X")->delimiter(',');
  rad->add_option("--y0", radu_args.y0, "radius set Y0")->delimiter(',');
  rad->add_option("--y1", radu_args.y1, "radius set Y1")->delimiter(',');
  rad->add_option("--eps0", radu_args.eps0, "pinned sign for V0 (family 6)");
  rad->add_option("--eps1", radu_args.eps1, "pinned sign for V1 (family 6)");
  rad->callback([&, vertex_opt] {
    radu_args.vertex_given = vertex_opt->count() > 0;
    run_radu(radu_args);
  });

  BruteArgs brute_args;
  auto* brt = app.add_subcommand("brute", "exhaustive computations on a ball");
  brt->add_option("--d", brute_args.d, "degree of the root type");
  brt->add_option("--dprime", brute_args.dprime, "degree of the other type");
  brt->add_option("--radius", brute_args.radius, "ball radius");
  brt->add_option("--center", brute_args.center, "vertex or edge");
  brt->add_option("--root-type", brute_args.root_type, "type of the root vertex");
  brt->add_option("--op", brute_args.op, "order, partition, ipk or factorize");
  brt->add_option("--kind", brute_args.kind, "group kind for --op partition");
  brt->add_option("--k", brute_args.k, "depth for --op ipk");
  brt->add_option("--edge", brute_args.edge, "child address naming the edge for --op ipk");
  brt->add_option("--u", brute_args.u, "placement kind:address:radius for --op factorize");
  brt->add_option("--v", brute_args.v, "placement kind:address:radius for --op factorize");
  brt->callback([&] { run_brute(brute_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const treeharm::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
