#include "pseudocurve/cli/cli.hpp"

#include "pseudocurve/branch_model.hpp"
#include "pseudocurve/cli/verify.hpp"
#include "pseudocurve/cusp_combinatorics.hpp"
#include "pseudocurve/error.hpp"
#include "pseudocurve/json_io.hpp"
#include "pseudocurve/moduli_index.hpp"
#include "pseudocurve/node_geometry.hpp"
#include "pseudocurve/saddle_residue.hpp"

#include "parsing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace pseudocurve::cli {

namespace {

using nlohmann::ordered_json;

/// Result of one subcommand: the document to print and the exit status.
struct Outcome {
  ordered_json doc;
  int status = kExitOk;
};

void print_text(const ordered_json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) print_text(value, out, prefix.empty() ? key : prefix + "." + key);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_primitive(); });
    if (flat) {
      out << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], out, prefix + "[" + std::to_string(i) + "]");
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

ordered_json inertia_json(const InertiaResult& r) {
  return {{"ind_plus", r.ind_plus}, {"ind_minus", r.ind_minus}, {"nullity", r.nullity}, {"s_ind", r.s_ind}};
}

ordered_json poly_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back({format_rational(c.re()), format_rational(c.im())});
  return arr;
}

ordered_json finite_or_null(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

// cusp ---------------------------------------------------------------------------------------

struct CuspArgs {
  std::string type;
  int n = 2;
};

Outcome run_cusp(const CuspArgs& a) {
  const CuspType p(parse_int_list(a.type));
  const auto adm = admissible_exponents(p);
  const auto delta = nodal_number(p);
  const std::vector<int> orders{p.first() - 1};
  const CuspType types[] = {p};
  ordered_json doc = {
      {"exponents", std::vector<int>(p.exponents().begin(), p.exponents().end())},
      {"divisors", divisor_sequence(p)},
      {"admissible_exponents", adm.exponents},
      {"critical_mask", adm.critical_mask},
      {"nodal_number_formula", nodal_number_formula(p)},
      {"delta", delta},
      {"semigroup_generators", semigroup_generators(p)},
      {"semigroup_gaps", nodal_number_oracle(p)},
      {"bennequin_index", bennequin_index(delta)},
      {"cusp_order", p.first() - 1},
  };
  if (p.first() > 1) doc["cusp_stratum_codim"] = cusp_stratum_codim(a.n, orders, 1);
  doc["cusp_type_stratum_codim"] = cusp_type_stratum_codim(a.n, types);
  doc["anchors"] = {
      {"nodal_number_formula", "sum (d_{i-1} - d_i)(p_i - 1) over characteristic exponents"},
      {"delta", "half the characteristic-exponent sum"},
      {"semigroup_gaps", "gap count of the value semigroup"},
      {"bennequin_index", "beta = 2 delta - 1"},
      {"cusp_stratum_codim", "2 (n sum k_i - m)"},
      {"cusp_type_stratum_codim", "2 (n - 1) sum (p_l - p_0 - l')"},
  };
  return {doc};
}

// index --------------------------------------------------------------------------------------

struct IndexArgs {
  std::int64_t mu = 0;
  int n = 2;
  int genus = 0;
  std::int64_t marked = 0;
  std::optional<std::int64_t> k_total;
  std::optional<std::int64_t> h1;
  std::optional<std::int64_t> self_int;
  std::optional<std::int64_t> delta;
  std::optional<std::string> genera;
  std::optional<std::string> solve;
};

Outcome run_index(const IndexArgs& a) {
  const auto bounds = cusp_count_bounds(a.mu, a.genus, a.marked);
  ordered_json doc = {
      {"gromov_operator_index", gromov_operator_index(a.mu, a.n, a.genus)},
      {"moduli_projection_index", moduli_projection_index(a.mu, a.n, a.genus)},
      {"marked_moduli_index", marked_moduli_index(a.mu, a.n, a.genus, a.marked)},
      {"teichmueller_dim", teichmueller_dim(a.genus)},
      {"cusp_count_bounds", {{"lower", bounds.lower}, {"upper", bounds.upper}, {"feasible", bounds.feasible()}}},
  };
  ordered_json anchors = {
      {"gromov_operator_index", "2 (mu + n (1 - g))"},
      {"moduli_projection_index", "2 (mu + (n - 3)(1 - g))"},
      {"marked_moduli_index", "2 (mu + (n - 3)(1 - g) - m)"},
      {"teichmueller_dim", "0, 1, 3g - 3"},
      {"cusp_count_bounds", "mu - m <= kappa <= mu - m + g - 1"},
  };
  if (a.h1 && a.k_total) {
    const auto h0 = h0_from_h1(a.mu, a.n, a.genus, *a.k_total, *a.h1);
    doc["h0"] = h0.h0;
    doc["stratum_empty"] = h0.stratum_empty();
    if (!h0.stratum_empty()) doc["h1_stratum_codim"] = h1_stratum_codim(h0.h0, *a.h1);
    anchors["h0"] = "h0 = h1 + 2 (mu + (g - 1)(3 - n) - |k|)";
    anchors["h1_stratum_codim"] = "h0 * h1";
  }
  if (a.self_int || a.solve) {
    CurveData c;
    c.n = a.n;
    c.mu = a.mu;
    c.self_int = a.self_int.value_or(0);
    c.delta = a.delta.value_or(0);
    c.marked = a.marked;
    if (a.genera) {
      for (int g : parse_int_list(*a.genera)) c.genera.push_back(g);
    } else {
      c.genera = {a.genus};
    }
    if (a.solve) {
      const auto unknown = parse_genus_unknown(*a.solve);
      doc["genus_formula"] = {{"solve", *a.solve}, {"value", genus_formula_solve(c, unknown)}};
    } else {
      doc["genus_formula"] = {{"consistent", genus_formula_check(c)}};
    }
    anchors["genus_formula"] = "sum g_j = ([C]^2 - c1[C]) / 2 + d - delta";
  }
  doc["anchors"] = anchors;
  return {doc};
}

// saddle -------------------------------------------------------------------------------------

struct SaddleArgs {
  int k = 1;
  int l = 0;
  std::string poly;
  std::optional<int> nu;
};

Outcome run_saddle(const SaddleArgs& a) {
  const ResidueForm f(a.k, a.l, parse_polynomial(a.poly));
  const auto m = residue_form_matrix(f);
  ordered_json matrix = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(format_rational(x));
    matrix.push_back(r);
  }
  const auto exact = inertia(f);
  const int want = a.k - a.l;
  const bool pass = exact.ind_plus == want && exact.ind_minus == want && exact.s_ind == want;
  ordered_json doc = {
      {"k", a.k},
      {"l", a.l},
      {"poly", poly_json(f.p())},
      {"matrix", matrix},
      {"inertia", inertia_json(exact)},
      {"s_ind", exact.s_ind},
      {"expected", want},
      {"pass", pass},
      {"floating_inertia_consistent", floating_inertia_consistent(f, exact)},
      {"a0_equivalent", a0_equivalence_check(f)},
  };
  ordered_json anchors = {{"inertia", "ind+ Q = ind- Q = S-ind Q = k - l"},
                          {"matrix", "Re of the z^-1 coefficient of z^(l-k) P(z) W(z)^2"}};
  if (a.nu) {
    doc["saddle_index_at_cusp"] = saddle_index_at_cusp(a.k, a.l, *a.nu);
    anchors["saddle_index_at_cusp"] = "max(0, k - l - nu)";
  }
  doc["anchors"] = anchors;
  return {doc, pass ? kExitOk : kExitVerificationFailed};
}

// node ---------------------------------------------------------------------------------------

struct NodeArgs {
  std::string lambda = "0.1";
  std::string check = "volume";
  int grid = 200;
  std::optional<std::string> z;
  std::optional<double> a;
  std::optional<double> b;
};

Outcome run_node(const NodeArgs& args) {
  const Complex lambda = parse_complex(args.lambda);
  ordered_json doc = {{"lambda", {lambda.real(), lambda.imag()}}, {"check", args.check}};
  int status = kExitOk;
  if (args.check == "volume") {
    const auto r = volume_identity(lambda, args.grid);
    const bool pass = r.max_residual < 1e-10;
    doc["grid"] = args.grid;
    doc["max_residual"] = r.max_residual;
    doc["max_ratio_deviation"] = r.max_ratio_deviation;
    doc["constant"] = (1.0 - std::norm(lambda)) / 2.0;
    doc["pulled_back_area"] = r.pulled_back_area;
    doc["annulus_area"] = r.annulus_area;
    doc["pass"] = pass;
    doc["anchor"] = "pullback of the hyperbola area form is (1 - |lambda|^2)/2 drho dtheta";
    if (!pass) status = kExitVerificationFailed;
  } else if (args.check == "inverse") {
    double worst = 0.0;
    for (int i = 0; i < args.grid; ++i) {
      const double rho = -1.0 + 2.0 * i / (args.grid - 1);
      worst = std::max(worst, std::abs(rho_of_r(r_of_rho(rho, lambda), lambda) - rho));
    }
    const double mod = std::abs(lambda);
    doc["grid"] = args.grid;
    doc["max_inverse_residual"] = worst;
    doc["r_at_minus_one"] = r_of_rho(-1.0, lambda);
    doc["r_at_zero"] = r_of_rho(0.0, lambda);
    doc["r_at_one"] = r_of_rho(1.0, lambda);
    const bool pass = worst < 1e-12 && std::abs(r_of_rho(-1.0, lambda) - mod) <= 1e-14 &&
                      std::abs(r_of_rho(0.0, lambda) - std::sqrt(mod)) <= 1e-14 &&
                      std::abs(r_of_rho(1.0, lambda) - 1.0) <= 1e-14;
    doc["pass"] = pass;
    doc["anchor"] = "rho(r) = (r^2 - |lambda|^2 / r^2) / (1 - |lambda|^2) and its inverse R";
    if (!pass) status = kExitVerificationFailed;
  } else if (args.check == "radius") {
    doc["radius_log"] = radius_log(lambda);
    doc["anchor"] = "neck conformal radius log(1/|lambda|)";
    if (args.a && args.b) {
      doc["radius_exp"] = radius_exp({*args.a, *args.b});
      doc["anchor_radius_exp"] = "cylinder conformal radius e^(b-a)";
    }
  } else if (args.check == "density") {
    if (!args.z) throw Error(ErrorKind::ParseError, "--check density needs --z");
    const Complex z = parse_complex(*args.z);
    doc["z_plus"] = {z.real(), z.imag()};
    doc["density"] = hyperbola_metric_density(z, lambda);
    doc["anchor"] = "hyperbola metric density 1 + |lambda|^2 / |z+|^4";
  } else {
    throw Error(ErrorKind::ParseError, "unknown --check '" + args.check + "'");
  }
  return {doc, status};
}

// decay --------------------------------------------------------------------------------------

struct DecayArgs {
  std::optional<std::string> modes;
  int length = 10;
  bool complex_layout = false;
  bool real_layout = false;
  double weight = 1.0;
  bool supersolution = false;
  std::optional<int> k_star;
  double c1 = 0.0;
  double alpha = 1.0;
  double s = 1.0;
};

ordered_json vector_json(const std::vector<double>& xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(finite_or_null(x));
  return arr;
}

Outcome run_supersolution(const DecayArgs& a) {
  const auto r = supersolution_sequences(a.length, a.k_star, {a.c1, a.alpha, a.s});
  ordered_json doc = {
      {"l", r.l},
      {"k_star", r.k_star},
      {"a_plus", vector_json(r.a_plus)},
      {"a_minus", vector_json(r.a_minus)},
      {"gamma", vector_json(r.gamma)},
      {"k0", r.k0 ? ordered_json(*r.k0) : ordered_json(nullptr)},
      {"decay_constant_plus", r.decay_constant_plus},
      {"decay_constant_minus", r.decay_constant_minus},
      {"anchor", "supersolutions A+-_k >= (gamma_k / 2)(A+-_{k-1} + A+-_{k+1})"},
  };
  return {doc, r.k0 ? kExitOk : kExitVerificationFailed};
}

Outcome run_decay(const DecayArgs& a) {
  if (a.supersolution) return run_supersolution(a);
  if (!a.modes) throw Error(ErrorKind::ParseError, "decay needs --modes (or --supersolution)");
  if (a.complex_layout && a.real_layout) throw Error(ErrorKind::ParseError, "--complex and --real exclude each other");
  const ModeLayout layout = a.complex_layout ? ModeLayout::Complex : a.real_layout ? ModeLayout::Real : ModeLayout::Auto;
  const CylinderMap u(parse_modes(*a.modes, layout), {0.0, static_cast<double>(a.length)});
  const auto report = decay_estimate_check(u, a.length);

  ordered_json ratios = ordered_json::array();
  ordered_json remainder_ratios = ordered_json::array();
  ordered_json remainder_norms = ordered_json::array();
  for (int k = 1; k <= a.length - 2; ++k) {
    try {
      ratios.push_back(three_band_ratio(u, k));
    } catch (const Error&) {
      ratios.push_back(nullptr);
    }
    remainder_ratios.push_back(remainder_band_ratio(u, k, a.weight));
  }
  for (int k = 0; k < a.length; ++k) remainder_norms.push_back(three_term_truncation(u, k, a.weight).remainder_norm);

  ordered_json modes = ordered_json::array();
  for (const auto& m : u.modes()) {
    ordered_json v = ordered_json::array();
    for (const auto& c : m.v) v.push_back({c.real(), c.imag()});
    modes.push_back({{"m", m.m}, {"v", v}});
  }
  ordered_json doc = {
      {"length", a.length},
      {"modes", modes},
      {"energies", report.energies},
      {"gamma_star", report.gamma_star},
      {"c_fit", finite_or_null(report.c_fit)},
      {"c_fit_sharp", report.c_fit_sharp ? finite_or_null(*report.c_fit_sharp) : ordered_json(nullptr)},
      {"three_band_ratios", ratios},
      {"remainder_band_ratios", remainder_ratios},
      {"remainder_norms", remainder_norms},
      {"pass", report.pass},
      {"anchors",
       {{"c_fit", "e_k <= C (e^(-2k) e_[0,2] + e^(-2(l-k)) e_[l-2,l])"},
        {"c_fit_sharp", "same bound with exponent 4 when modes 0, +-1 are absent"},
        {"three_band_ratios", "2 e_k / (e_{k-1} + e_{k+1}), extremal value 1/cosh 2"},
        {"remainder_band_ratios", "modes |m| >= 2 satisfy the ratio bound 1/cosh 4"}}},
  };
  return {doc, report.pass ? kExitOk : kExitVerificationFailed};
}

// branch -------------------------------------------------------------------------------------

struct BranchArgs {
  std::optional<std::string> input;
  std::optional<std::string> other;
  std::optional<std::string> from_type;
};

std::string read_source(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <class F>
ordered_json attempt(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  }
}

Outcome run_branch(const BranchArgs& a) {
  if (a.input.has_value() == a.from_type.has_value()) {
    throw Error(ErrorKind::ParseError, "branch needs exactly one of --input and --from-type");
  }
  const Branch b = a.input ? branch_from_json(read_source(*a.input))
                           : branch_from_cusp_type(CuspType(parse_int_list(*a.from_type)));
  ordered_json doc = {
      {"branch", ordered_json::parse(branch_to_json(b))},
      {"multiplicity", multiplicity(b)},
      {"cusp_order", cusp_order(b)},
      {"prepared", is_prepared(b)},
  };
  doc["cusp_type"] = attempt([&] {
    const auto p = cusp_type_of_branch(b);
    return ordered_json(std::vector<int>(p.exponents().begin(), p.exponents().end()));
  });
  doc["jet_normal_form"] = attempt([&] {
    const auto jet = jet_normal_form(b);
    return ordered_json{{"k", jet.k}, {"l", jet.l}, {"p1", poly_json(jet.p1)}, {"p2", poly_json(jet.p2)}};
  });
  doc["ordinary_cusp"] = attempt([&] { return ordered_json(is_ordinary_cusp(b)); });
  if (a.other) {
    const Branch c = branch_from_json(read_source(*a.other));
    const auto r = intersection_report(b, c);
    doc["intersection"] = {{"multiplicity", r.multiplicity},
                           {"forward_valuation", r.forward_valuation},
                           {"backward_valuation", r.backward_valuation},
                           {"graph_contact", r.graph_contact ? ordered_json(*r.graph_contact) : ordered_json(nullptr)}};
  }
  doc["anchors"] = {{"cusp_type", "gcd-drop scan of the prepared branch"},
                    {"jet_normal_form", "(z^(k+1) P1, z^(k+l+2) P2) up to order 2k+1"},
                    {"intersection", "valuation of the elimination polynomial along the other branch"}};
  return {doc};
}

// feasibility --------------------------------------------------------------------------------

struct FeasibilityArgs {
  int degree = 1;
  bool all_splittings = false;
};

Outcome run_feasibility(const FeasibilityArgs& a) {
  const auto r = cp2_multiple_component_obstruction(a.degree, a.all_splittings);
  ordered_json split = ordered_json::array();
  for (const auto& s : r.worst_split) split.push_back({{"degree", s.degree}, {"multiplicity", s.multiplicity}});
  ordered_json doc = {
      {"degree", a.degree},
      {"obstructed", r.obstructed},
      {"worst_count", r.worst_count},
      {"required", r.required},
      {"worst_split", split},
      {"all_splittings", a.all_splittings},
      {"rigidity_index", cp2_rational_rigidity_index(a.degree)},
      {"anchors",
       {{"worst_count", "sum d_i (d_i + 3) / 2 over distinct components"},
        {"required", "3d - 1 generic points"},
        {"rigidity_index", "2 (mu + (n - 3)(1 - g) - m) at mu = 3d, m = 3d - 1"}}},
  };
  return {doc};
}

// verify -------------------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  int cases = 0;
  int jobs = 0;
};

Outcome run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    names = split(a.suite, ',');
  }
  for (const auto& n : names) {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw Error(ErrorKind::ParseError, "unknown suite '" + n + "'");
    }
  }
  const auto certs = run_suites(names, {a.seed, a.cases, a.jobs});
  out << certificate_json(certs) << "\n";
  const bool ok = std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.cases_failed() == 0; });
  return {nullptr, ok ? kExitOk : kExitVerificationFailed};
}

}  // namespace

int run_subcommand(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical checks for pseudoholomorphic curve invariants", "pseudocurve"};
  app.require_subcommand(1, 1);
  bool json_output = false;

  CuspArgs cusp;
  auto* cusp_cmd = app.add_subcommand("cusp", "Invariants of a cusp type");
  cusp_cmd->add_option("--type", cusp.type, "Characteristic exponents p0,p1,...")->required();
  cusp_cmd->add_option("--n", cusp.n, "Complex dimension of the ambient manifold");

  IndexArgs index;
  auto* index_cmd = app.add_subcommand("index", "Fredholm indices and dimension counts");
  index_cmd->add_option("--mu", index.mu, "c1(X) . [C]")->required();
  index_cmd->add_option("--n", index.n, "Complex dimension");
  index_cmd->add_option("--genus", index.genus, "Genus of the domain");
  index_cmd->add_option("--marked", index.marked, "Number of marked points");
  index_cmd->add_option("--k-total", index.k_total, "Total cusp order |k|");
  index_cmd->add_option("--h1", index.h1, "dim H^1");
  index_cmd->add_option("--self-int", index.self_int, "[C]^2 for the genus formula");
  index_cmd->add_option("--delta", index.delta, "Self-intersection number delta");
  index_cmd->add_option("--genera", index.genera, "Component genera g1,g2,...");
  index_cmd->add_option("--solve", index.solve, "Genus formula unknown: genus, mu, self_int, delta, components");

  SaddleArgs saddle;
  auto* saddle_cmd = app.add_subcommand("saddle", "Inertia of the residue quadratic form");
  saddle_cmd->add_option("--k", saddle.k, "Cusp order")->required();
  saddle_cmd->add_option("--l", saddle.l, "Secondary cusp index")->required();
  saddle_cmd->add_option("--poly", saddle.poly, "Coefficients a0,a1,... as p/q or re:im")->required();
  saddle_cmd->add_option("--nu", saddle.nu, "Vanishing order of psi at the cusp");

  NodeArgs node;
  auto* node_cmd = app.add_subcommand("node", "Node neck geometry");
  node_cmd->add_option("--lambda", node.lambda, "Node parameter, e.g. 0.1+0i");
  node_cmd->add_option("--check", node.check, "volume, inverse, radius or density");
  node_cmd->add_option("--grid", node.grid, "Grid size")->check(CLI::Range(2, 100000));
  node_cmd->add_option("--z", node.z, "Point z+ for --check density");
  node_cmd->add_option("--a", node.a, "Cylinder start for radius_exp");
  node_cmd->add_option("--b", node.b, "Cylinder end for radius_exp");

  DecayArgs decay;
  auto* decay_cmd = app.add_subcommand("decay", "Band energies of holomorphic cylinder maps");
  decay_cmd->add_option("--modes", decay.modes, "m:c,c,...;m:... Laurent coefficients");
  decay_cmd->add_option("--length", decay.length, "Cylinder length l")->check(CLI::Range(3, 10000));
  decay_cmd->add_flag("--complex", decay.complex_layout, "Read coefficients as (re, im) pairs");
  decay_cmd->add_flag("--real", decay.real_layout, "Read coefficients as real coordinates");
  decay_cmd->add_option("--weight", decay.weight, "Weight of the L2 term in the L^{1,2} norm");
  decay_cmd->add_flag("--supersolution", decay.supersolution, "Report the supersolution sequences instead");
  decay_cmd->add_option("--k-star", decay.k_star, "Stitching index (default l/2)");
  decay_cmd->add_option("--c1", decay.c1, "Perturbation constant C1");
  decay_cmd->add_option("--alpha", decay.alpha, "Perturbation exponent alpha");
  decay_cmd->add_option("--s", decay.s, "Perturbation exponent s");

  BranchArgs branch;
  auto* branch_cmd = app.add_subcommand("branch", "Local invariants of a parameterized branch");
  branch_cmd->add_option("--input", branch.input, "Branch JSON text or file");
  branch_cmd->add_option("--other", branch.other, "Second branch for the intersection multiplicity");
  branch_cmd->add_option("--from-type", branch.from_type, "Build the monomial model of a cusp type");

  FeasibilityArgs feas;
  auto* feas_cmd = app.add_subcommand("feasibility", "Multiple-component obstruction in CP2");
  feas_cmd->add_option("--cp2-degree", feas.degree, "Degree d")->required()->check(CLI::Range(1, 200));
  feas_cmd->add_flag("--all-splittings", feas.all_splittings, "Enumerate every multiplicity vector");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run oracle cross-check suites");
  verify_cmd->add_option("--suite", verify.suite, "all or a comma separated list of suites");
  verify_cmd->add_option("--seed", verify.seed, "Seed of the random sweeps");
  verify_cmd->add_option("--cases", verify.cases, "Random cases per parameter point (0: suite default)");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0: PSEUDOCURVE_JOBS or hardware)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json_output, "Emit JSON");

  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp&) {
    const auto used = app.get_subcommands();
    out << (used.empty() ? app.help() : used.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto used = app.get_subcommands();
    err << (used.empty() ? app.help() : used.front()->help());
    return kExitUsage;
  }

  try {
    Outcome result;
    if (cusp_cmd->parsed()) result = run_cusp(cusp);
    else if (index_cmd->parsed()) result = run_index(index);
    else if (saddle_cmd->parsed()) result = run_saddle(saddle);
    else if (node_cmd->parsed()) result = run_node(node);
    else if (decay_cmd->parsed()) result = run_decay(decay);
    else if (branch_cmd->parsed()) result = run_branch(branch);
    else if (feas_cmd->parsed()) result = run_feasibility(feas);
    else if (verify_cmd->parsed()) return run_verify(verify, out).status;

    if (json_output) {
      out << result.doc.dump(2) << "\n";
    } else {
      print_text(result.doc, out, "");
    }
    return result.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (json_output) {
      out << ordered_json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
    }
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomainError;
  }
}

}  // namespace pseudocurve::cli
