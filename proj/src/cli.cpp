#include "luinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <vector>

#include "luinv/census.hpp"
#include "luinv/characters.hpp"
#include "luinv/dimensions.hpp"
#include "luinv/errors.hpp"
#include "luinv/higher.hpp"
#include "luinv/invariants.hpp"
#include "luinv/series.hpp"
#include "luinv/state_io.hpp"
#include "luinv/states.hpp"

namespace luinv::cli {

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s(buf);
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

namespace {

std::string sci9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", x);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<int> k, m, order, rank, max_index, tuple_length;
  std::vector<int> local_dims, subset;
  bool mixed = false;
  std::string state_path, invariant;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

void cmd_dims(const Options& o, std::ostream& out) {
  const int m = require(o.m, "--m");
  if (!o.local_dims.empty()) {
    if (o.mixed) throw UsageError("--local-dims and --mixed cannot be combined");
    if (o.k && *o.k != static_cast<int>(o.local_dims.size()) + 1)
      throw UsageError("--k must equal the number of --local-dims entries plus one (the environment)");
    out << restricted_dimension(o.local_dims, m) << '\n';
    return;
  }
  const int k = require(o.k, "--k");
  out << (o.mixed ? mixed_dimension(k, m) : stable_dimension(k, m)) << '\n';
}

void cmd_hilbert(const Options& o, std::ostream& out) {
  const int k = require(o.k, "--k");
  const int order = require(o.order, "--order");
  const PowerSeries s = hilbert_series(k, order);
  out << "# k=" << k << " order=" << order << "; coefficient of t^m counts invariants of degree 2m (real)\n";
  out << "# m\td_m\n";
  for (int m = 0; m <= order; ++m) out << m << '\t' << s.coeff(m) << '\n';
  const GeneratorCounts u = euler_exponents(s);
  out << "# d\tu_d\n";
  for (int d = 1; d <= order; ++d) out << d << '\t' << u.at(d) << '\n';
}

void cmd_subgroups(const Options& o, std::ostream& out) {
  const int r = require(o.rank, "--rank");
  const int max_index = require(o.max_index, "--max-index");
  // Refuse before printing anything.
  if (tuple_count(r, max_index) > kDefaultTupleBound) count_subgroup_classes(r, max_index);
  out << "# rank=" << r << "; conjugacy classes of index-d subgroups of the free group\n";
  out << "# d\tclasses\n";
  for (int d = 1; d <= max_index; ++d) out << d << '\t' << count_subgroup_classes(r, d) << '\n';
}

void cmd_orbits(const Options& o, std::ostream& out) {
  out << conjugation_orbit_count(require(o.tuple_length, "--tuple-length"), require(o.m, "--m")) << '\n';
}

void cmd_char_table(const Options& o, std::ostream& out) {
  const int m = require(o.m, "--m");
  const auto& parts = partitions_of(m);
  out << "# m=" << m << "; rows: irreducible character, columns: class by cycle structure\n# chi";
  for (const auto& cls : parts) out << '\t' << cls.to_string();
  out << '\n';
  for (const auto& lambda : parts) {
    out << lambda.to_string();
    for (const auto& cls : parts) out << '\t' << character_value(lambda, cls);
    out << '\n';
  }
}

const PureState& require_pure(const AnyState& s, const std::string& what) {
  if (const auto* p = std::get_if<PureState>(&s)) return *p;
  throw UsageError(what + " requires a pure state");
}

DensityMatrix as_density(const AnyState& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return projector(*p);
  return std::get<DensityMatrix>(s);
}

int subsystems_of(const AnyState& s) {
  return std::visit([](const auto& x) { return x.subsystems(); }, s);
}

void cmd_eval(const Options& o, std::ostream& out) {
  if (o.state_path.empty()) throw UsageError("missing required flag --state");
  const AnyState state = read_state_file(o.state_path);
  const SubsetMask a = SubsetMask::from_members(subsystems_of(state), o.subset);
  double value = 0;
  if (o.invariant == "I") {
    value = invariant_I(require_pure(state, "I"), a);
  } else if (o.invariant == "J") {
    if (const auto* p = std::get_if<PureState>(&state)) value = invariant_J(*p, a);
    else value = invariant_J(std::get<DensityMatrix>(state), a);
  } else if (o.invariant == "eta") {
    value = eta(as_density(state), a);
  } else if (o.invariant == "Q") {
    value = meyer_wallach(require_pure(state, "Q"));
  } else if (o.invariant == "higher") {
    value = higher_invariant(require_pure(state, "higher"), a, require(o.m, "--m"));
  } else {
    throw UsageError("unknown invariant '" + o.invariant + "' (expected I, J, eta, Q or higher)");
  }
  out << fixed9(value) << '\n';
}

void cmd_transform(const Options& o, std::ostream& out) {
  if (o.state_path.empty()) throw UsageError("missing required flag --state");
  const AnyState state = read_state_file(o.state_path);
  const PureState& psi = require_pure(state, "transform");
  const InvariantVector iv = invariant_I_vector(psi);
  const InvariantVector jv = invariant_J_vector(psi);
  const InvariantVector j_pred = j_from_i(iv);
  const InvariantVector i_pred = i_from_j(jv);
  double residual = 0;
  for (std::uint32_t s = 0; s < iv.size(); ++s)
    residual = std::max({residual, std::abs(j_pred[s] - jv[s]), std::abs(i_pred[s] - iv[s])});

  const int k = psi.subsystems();
  out << "# k=" << k << " dims=" << join(psi.dims()) << "\n# subset\tI\tJ\n";
  for (std::uint32_t s = 0; s < iv.size(); ++s)
    out << SubsetMask(k, s).to_string() << '\t' << fixed9(iv[s]) << '\t' << fixed9(jv[s]) << '\n';
  out << "# max_residual\n" << sci9(residual) << '\n';
}

void cmd_rank_oracle(const Options& o, std::ostream& out) {
  if (o.local_dims.empty()) throw UsageError("missing required flag --local-dims");
  if (!o.seed) throw UsageError("rank-oracle needs an explicit --seed");
  const int m = require(o.m, "--m");
  const std::size_t samples = o.samples.value_or(default_rank_samples(o.local_dims.size(), m));
  out << invariant_space_rank(o.local_dims, m, samples, *o.seed) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-unitary invariant dimensions, generating functions and invariant evaluation", "luinv"};
  app.require_subcommand(1);
  Options o;

  auto int_opt = [](CLI::App* sub, const std::string& name, std::optional<int>& slot, const std::string& help) {
    sub->add_option_function<int>(name, [&slot](const int& v) { slot = v; }, help);
  };

  auto* dims = app.add_subcommand("dims", "Dimension of the degree-m invariant space");
  int_opt(dims, "--k", o.k, "Number of subsystems");
  int_opt(dims, "--m", o.m, "Half-degree m (invariants of real degree 2m)");
  dims->add_option("--local-dims", o.local_dims, "Bounded local dimensions n1,...,n_{k-1}; the environment is unbounded")
      ->delimiter(',');
  dims->add_flag("--mixed", o.mixed, "Mixed-state invariants of k subsystems");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients and Euler-product exponents");
  int_opt(hilbert, "--k", o.k, "Number of subsystems");
  int_opt(hilbert, "--order", o.order, "Truncation order");

  auto* subgroups = app.add_subcommand("subgroups", "Brute-force count of subgroup classes of a free group");
  int_opt(subgroups, "--rank", o.rank, "Free group rank");
  int_opt(subgroups, "--max-index", o.max_index, "Largest subgroup index");

  auto* orbits = app.add_subcommand("orbits", "Conjugation orbits of S_m on tuples of permutations");
  int_opt(orbits, "--tuple-length", o.tuple_length, "Tuple length j");
  int_opt(orbits, "--m", o.m, "Degree m");

  auto* chars = app.add_subcommand("char-table", "Character table of S_m");
  int_opt(chars, "--m", o.m, "Degree m");

  auto* eval = app.add_subcommand("eval", "Evaluate an invariant on a state file");
  eval->add_option("--state", o.state_path, "State file")->required();
  eval->add_option("--invariant", o.invariant, "I, J, eta, Q or higher")->required();
  eval->add_option("--subset", o.subset, "Subsystem labels, e.g. 1,3")->delimiter(',');
  int_opt(eval, "--m", o.m, "Degree for the higher-order invariant");

  auto* transform = app.add_subcommand("transform", "I- and J-vectors of a pure state and the transform residual");
  transform->add_option("--state", o.state_path, "State file")->required();

  auto* rank = app.add_subcommand("rank-oracle", "Numerical rank of permutation-contraction invariants");
  rank->add_option("--local-dims", o.local_dims, "Local dimensions n1,...")->delimiter(',')->required();
  int_opt(rank, "--m", o.m, "Half-degree m");
  rank->add_option_function<std::size_t>("--samples", [&o](const std::size_t& v) { o.samples = v; },
                                         "Number of random states (default 3 (m!)^k)");
  rank->add_option_function<std::uint64_t>("--seed", [&o](const std::uint64_t& v) { o.seed = v; }, "RNG seed");

  std::vector<std::string> argv_storage{"luinv"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (*dims) cmd_dims(o, out);
    else if (*hilbert) cmd_hilbert(o, out);
    else if (*subgroups) cmd_subgroups(o, out);
    else if (*orbits) cmd_orbits(o, out);
    else if (*chars) cmd_char_table(o, out);
    else if (*eval) cmd_eval(o, out);
    else if (*transform) cmd_transform(o, out);
    else if (*rank) cmd_rank_oracle(o, out);
  } catch (const EnumerationBoundError& e) {
    err << "refused: " << e.what() << '\n';
    return kBoundRefused;
  } catch (const InvariantViolation& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kAssertionFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace luinv::cli
