#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nsalpha/baker.hpp"
#include "nsalpha/nets.hpp"

using nlohmann::json;
using namespace nsalpha;

namespace {

struct Input {
  LaurentMatrix A{1, 1};                // Laurent form (restriction for groups)
  std::optional<GroupRingMatrix> group; // set when the input is over a group
  long index_multiplier = 1;            // n = |Q| for group inputs
  std::string description;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

LaurentPoly builtin_poly(const std::string& name) {
  LaurentPoly z = LaurentPoly::z();
  LaurentPoly one(GaussianRational(1L));
  if (name == "z-1") return z - one;
  if (name == "counterexample")
    return LaurentPoly::monomial(2, GaussianRational(5L)) -
           LaurentPoly::monomial(1, GaussianRational(6L)) +
           LaurentPoly(GaussianRational(5L));
  throw std::invalid_argument("unknown builtin: " + name);
}

Input resolve_input(const std::string& builtin, const std::string& matrix_path,
                    const std::string& group_arg) {
  Input in;
  if (!builtin.empty()) {
    if (builtin == "dinf-xt") {
      GroupRingMatrix gm = dinf_xt();
      in.A = restrict_to_Z(gm);
      in.group = std::move(gm);
      in.index_multiplier = 2;
      in.description = "builtin:dinf-xt";
      return in;
    }
    in.A = LaurentMatrix::scalar(builtin_poly(builtin));
    in.description = "builtin:" + builtin;
    return in;
  }
  if (matrix_path.empty())
    throw std::invalid_argument("provide --matrix FILE or --builtin NAME");
  json mj = read_json_file(matrix_path);
  if (!group_arg.empty()) {
    VCGroupSpec spec;
    if (group_arg.find('.') != std::string::npos || group_arg.find('/') != std::string::npos)
      spec = VCGroupSpec::from_json(read_json_file(group_arg));
    else
      spec = VCGroupSpec::named(group_arg);
    require_valid_group(spec);
    GroupRingMatrix gm = GroupRingMatrix::from_json(spec, mj);
    in.A = restrict_to_Z(gm);
    in.index_multiplier = spec.n;
    in.group = std::move(gm);
    in.description = "file:" + matrix_path + " group:" + group_arg;
  } else {
    in.A = LaurentMatrix::from_json(mj);
    in.description = "file:" + matrix_path;
  }
  return in;
}

std::vector<long> parse_levels(const std::string& range, const std::string& list) {
  std::vector<long> out;
  if (!range.empty()) {
    auto pos = range.find("..");
    if (pos == std::string::npos)
      throw std::invalid_argument("--levels expects the form a..b");
    long a = std::stol(range.substr(0, pos));
    long b = std::stol(range.substr(pos + 2));
    if (a < 1 || b < a) throw std::invalid_argument("--levels: need 1 <= a <= b");
    for (long i = a; i <= b; ++i) out.push_back(i);
  }
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stol(tok));
  if (out.empty()) throw std::invalid_argument("no levels given (--levels or --level-list)");
  for (long i : out)
    if (i < 1) throw std::invalid_argument("levels must be positive");
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

json config_json(const std::string& command, const Input& in, const Tolerances& tol,
                 int precision_bits) {
  return {{"command", command},
          {"input", in.description},
          {"tol_rank", tol.tol_rank},
          {"tol_cluster", tol.tol_cluster},
          {"precision_bits", precision_bits}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Novikov-Shubin numbers and finite-quotient alpha numbers "
               "for matrices over Laurent and virtually cyclic group rings"};
  app.require_subcommand(1);

  std::string builtin, matrix_path, group_arg, out_path, format = "json";
  std::string levels_range, levels_list, k_set_str = "1";
  long i_max = 100000, n_max = 100000, level = 0;
  double tol_rank = 1e-8, tol_cluster = 1e-6;
  int precision_bits = 53;
  std::optional<double> baker_D;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--builtin", builtin, "named input: z-1, counterexample, dinf-xt");
      cmd->add_option("--matrix", matrix_path, "matrix JSON file");
      cmd->add_option("--group", group_arg, "group spec: JSON file or Z|Dinf|ZxZ2|ZxZ3");
    }
    cmd->add_option("--tol-rank", tol_rank, "relative rank threshold");
    cmd->add_option("--tol-cluster", tol_cluster, "relative multiplicity-cluster width");
    cmd->add_option("--precision-bits", precision_bits,
                    "request >53 to force extended-precision sigma+ evaluation");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    return cmd;
  };

  auto* c_ns = add_common(app.add_subcommand("ns", "exact alpha^(2) via Smith normal form"),
                          true);
  auto* c_alpha =
      add_common(app.add_subcommand("alpha", "alpha numbers of finite quotients"), true);
  c_alpha->add_option("--levels", levels_range, "level range a..b");
  c_alpha->add_option("--level-list", levels_list, "comma-separated levels");
  c_alpha->add_option("--format", format, "csv (default for alpha)");
  auto* c_net = add_common(
      app.add_subcommand("net", "net limsup/liminf estimate over the divisibility net"),
      true);
  c_net->add_option("--K-set", k_set_str, "comma-separated K values");
  c_net->add_option("--i-max", i_max, "level budget");
  c_net->add_option("--n-max", n_max, "record search budget");
  c_net->add_option("--baker-D", baker_D, "Baker constant for the floor consistency check");
  auto* c_sdf = add_common(
      app.add_subcommand("sdf", "spectral distribution step function at one level"), true);
  c_sdf->add_option("--level", level, "quotient level i")->required();
  c_sdf->add_option("--format", format, "tsv (default for sdf)");
  auto* c_cx = add_common(
      app.add_subcommand("counterexample", "full 5z^2-6z+5 net experiment"), false);
  c_cx->add_option("--K-set", k_set_str, "comma-separated K values");
  c_cx->add_option("--i-max", i_max, "level budget");
  c_cx->add_option("--n-max", n_max, "record search budget");
  c_cx->add_option("--baker-D", baker_D, "Baker constant for the floor line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Tolerances tol;
    tol.tol_rank = tol_rank;
    tol.tol_cluster = tol_cluster;
    if (precision_bits > 53) tol.escalation_threshold = 1e308;  // always escalate

    std::vector<long> K_set;
    {
      std::stringstream ss(k_set_str);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) K_set.push_back(std::stol(tok));
    }

    if (c_ns->parsed()) {
      Input in = resolve_input(builtin, matrix_path, group_arg);
      SNFResult snf = smith_normal_form(in.A);
      NSValue ns = in.A.is_zero() ? NSValue::inf_plus() : ns_number(snf.factors.empty()
                      ? LaurentPoly() : snf.factors.back());
      json factors = json::array();
      for (const auto& f : snf.factors) factors.push_back(f.str());
      json roots = json::array();
      if (!snf.factors.empty())
        for (const auto& r : unit_circle_roots(snf.factors.back())) {
          json rr = {{"re", to_double(r.approx.real())},
                     {"im", to_double(r.approx.imag())},
                     {"multiplicity", r.multiplicity}};
          if (r.order) rr["order"] = *r.order;
          roots.push_back(rr);
        }
      json outj = {{"config", config_json("ns", in, tol, precision_bits)},
                   {"ns", ns.to_json()},
                   {"rank", snf.rank},
                   {"invariant_factors", factors},
                   {"unit_circle_roots", roots}};
      emit(out_path, outj.dump(2) + "\n");
      return 0;
    }

    if (c_alpha->parsed()) {
      Input in = resolve_input(builtin, matrix_path, group_arg);
      std::vector<long> levels = parse_levels(levels_range, levels_list);
      std::ostringstream os;
      os << "# nsalpha alpha\n# config: "
         << config_json("alpha", in, tol, precision_bits).dump() << "\n";
      os << "i,group_order,rank,sigma_plus,m_plus,alpha,flags\n";
      std::optional<EvalPlan> plan;
      if (in.A.rows() == 1 && in.A.cols() == 1 && !in.A.is_zero())
        plan = make_eval_plan(in.A.at(0, 0));
      for (long i : levels) {
        SpectralSample s = spectral_sample(in.A, i, in.index_multiplier * i, tol,
                                           plan ? &*plan : nullptr);
        std::vector<std::string> flags;
        if (s.zero_matrix) flags.push_back("zero_matrix");
        if (s.full_kernel) flags.push_back("full_kernel");
        if (s.degenerate) flags.push_back("degenerate");
        if (s.escalated) flags.push_back("escalated");
        std::string fl;
        for (size_t k = 0; k < flags.size(); ++k) fl += (k ? ";" : "") + flags[k];
        os << s.level << "," << s.group_order << "," << s.rank << ","
           << fmt_double(s.sigma_plus) << "," << s.m_plus << "," << fmt_double(s.alpha)
           << "," << fl << "\n";
      }
      emit(out_path, os.str());
      return 0;
    }

    if (c_net->parsed()) {
      Input in = resolve_input(builtin, matrix_path, group_arg);
      NetOptions opts;
      opts.K_set = K_set;
      opts.n_max = n_max;
      opts.i_budget = i_max;
      opts.index_multiplier = in.index_multiplier;
      opts.baker_D = baker_D;
      opts.tol = tol;
      CounterexampleReport rep = counterexample_report(in.A, opts);
      json outj = {{"config", config_json("net", in, tol, precision_bits)},
                   {"K_set", K_set},
                   {"i_max", i_max},
                   {"n_max", n_max},
                   {"report", rep.to_json()}};
      emit(out_path, outj.dump(2) + "\n");
      return 0;
    }

    if (c_sdf->parsed()) {
      Input in = resolve_input(builtin, matrix_path, group_arg);
      StepSDF sdf = sdf_step(in.A, level, in.index_multiplier * level, tol);
      std::ostringstream os;
      os << "# nsalpha sdf\n# config: "
         << config_json("sdf", in, tol, precision_bits).dump() << "\n";
      os << "# level " << sdf.level << " group_order " << sdf.group_order << "\n";
      os << "sigma\tF\n";
      os << fmt_double(0) << "\t" << fmt_double(sdf.kernel_fraction) << "\n";
      for (const auto& [sigma, F] : sdf.steps)
        os << fmt_double(sigma) << "\t" << fmt_double(F) << "\n";
      emit(out_path, os.str());
      return 0;
    }

    if (c_cx->parsed()) {
      Input in = resolve_input("counterexample", "", "");
      NetOptions opts;
      opts.K_set = K_set;
      opts.n_max = n_max;
      opts.i_budget = i_max;
      opts.baker_D = baker_D;
      opts.tol = tol;
      CounterexampleReport rep = counterexample_report(in.A.at(0, 0), opts);
      json outj = {{"config", config_json("counterexample", in, tol, precision_bits)},
                   {"K_set", K_set},
                   {"i_max", i_max},
                   {"n_max", n_max},
                   {"report", rep.to_json()}};
      emit(out_path, outj.dump(2) + "\n");
      return 0;
    }
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 4;
  } catch (const PrecisionError& e) {
    std::cerr << "precision escalation failure: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
