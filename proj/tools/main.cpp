#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "exalg/eval.hpp"
#include "exalg/fock.hpp"
#include "exalg/geometry.hpp"
#include "exalg/grades.hpp"
#include "exalg/jsonio.hpp"
#include "exalg/spaces.hpp"
#include "exalg/star.hpp"

namespace {

using namespace exalg;

constexpr int kExitOk = 0;
constexpr int kExitEval = 1;
constexpr int kExitParse = 2;

struct CommandError {
  int code;
  std::string message;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string fmt(Scalar s) {
  if (s.imag() == 0.0) return fmt(s.real());
  if (s.real() == 0.0) return fmt(s.imag()) + "i";
  std::string out = fmt(s.real());
  if (s.imag() >= 0) out += "+";
  return out + fmt(s.imag()) + "i";
}

struct SessionOptions {
  int dimension = 3;
  bool complex_field = false;
  std::string orientation = "1";
  double tolerance = kCoeffTol;
  bool json = false;
};

void add_session_options(CLI::App* cmd, SessionOptions& opt) {
  cmd->add_option("-n,--dimension", opt.dimension, "ambient dimension")
      ->required()
      ->check(CLI::Range(1, kDimensionCap));
  cmd->add_flag("--complex", opt.complex_field,
                "work over the complex field (default real)");
  cmd->add_option("--orient", opt.orientation,
                  "unit phase of the orientation element (default 1)");
  cmd->add_option("--tol", opt.tolerance, "coefficient cleanup tolerance");
}

SessionConfig make_session(const SessionOptions& opt) {
  SessionConfig cfg;
  cfg.dimension = opt.dimension;
  cfg.field = opt.complex_field ? Field::Complex : Field::Real;
  cfg.tolerance = opt.tolerance;
  cfg.output = opt.json ? OutputMode::Json : OutputMode::Text;

  SessionConfig phase_cfg = cfg;
  phase_cfg.orientation_unit = Scalar(1.0);
  Multivector phase;
  try {
    phase = eval_multivector(*parse(opt.orientation, phase_cfg), phase_cfg);
  } catch (const ParseError& err) {
    throw CommandError{kExitParse, std::string("--orient: ") + err.what()};
  } catch (const EvalError& err) {
    throw CommandError{kExitEval, std::string("--orient: ") + err.what()};
  }
  if (!phase.is_zero() && phase.top_grade().value_or(0) != 0)
    throw CommandError{kExitEval, "--orient: expected a scalar phase"};
  Scalar unit = phase.scalar_part();
  if (std::abs(std::abs(unit) - 1.0) > 1e-9)
    throw CommandError{kExitEval, "--orient: phase must have modulus 1"};
  cfg.orientation_unit = unit;
  return cfg;
}

std::string read_expression(const std::string& raw) {
  if (raw != "-") return raw;
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

Multivector evaluate(const std::string& src, const SessionConfig& cfg,
                     const char* stage) {
  try {
    bool mixed = false;
    ExprPtr e = parse(read_expression(src), cfg, &mixed);
    if (mixed)
      std::cerr << "warning: mixed product chain without parentheses; the "
                   "four products share one precedence level\n";
    return eval_multivector(*e, cfg);
  } catch (const ParseError& err) {
    throw CommandError{kExitParse, std::string(stage) + ": " + err.what()};
  } catch (const EvalError& err) {
    throw CommandError{kExitEval, std::string(stage) + ": " + err.what()};
  } catch (const std::exception& err) {
    throw CommandError{kExitEval, std::string(stage) + ": " + err.what()};
  }
}

Blade evaluate_blade(const std::string& src, const SessionConfig& cfg,
                     const char* stage) {
  Multivector m = evaluate(src, cfg, stage);
  try {
    return Blade::validated(std::move(m));
  } catch (const std::exception& err) {
    throw CommandError{kExitEval, std::string(stage) + ": " + err.what()};
  }
}

std::string subspace_text(const SubspaceBasis& basis) {
  std::string out;
  for (int k = 0; k < basis.dim(); ++k) {
    if (k) out += "; ";
    std::vector<Scalar> coords(basis.columns.col(k).data(),
                               basis.columns.col(k).data() + basis.ambient);
    out += Multivector::from_vector(coords, basis.ambient).to_string();
  }
  return out;
}

// ---- subcommands ----------------------------------------------------------

int run_eval(const SessionOptions& opt, const std::string& expr) {
  SessionConfig cfg = make_session(opt);
  try {
    bool mixed = false;
    ExprPtr e = parse(read_expression(expr), cfg, &mixed);
    if (mixed)
      std::cerr << "warning: mixed product chain without parentheses; the "
                   "four products share one precedence level\n";
    Value v = eval(*e, cfg);
    if (opt.json)
      std::cout << to_json_string(v, cfg) << "\n";
    else
      std::cout << to_text(v) << "\n";
    return kExitOk;
  } catch (const ParseError& err) {
    throw CommandError{kExitParse, err.what()};
  } catch (const EvalError& err) {
    throw CommandError{kExitEval, err.what()};
  }
}

int run_spaces(const SessionOptions& opt, const std::string& expr) {
  SessionConfig cfg = make_session(opt);
  Multivector m = evaluate(expr, cfg, "spaces");
  SubspaceBasis isp = inner_space(m);
  SubspaceBasis osp = outer_space(m);
  GradeProfile g = grade_profile(m);
  std::cout << "isp dim " << isp.dim();
  if (isp.dim()) std::cout << ": " << subspace_text(isp);
  std::cout << "\nosp dim " << osp.dim();
  if (osp.dim()) std::cout << ": " << subspace_text(osp);
  std::cout << "\ngrades: inner " << g.inner;
  if (g.bottom) std::cout << ", bottom " << *g.bottom << ", top " << *g.top;
  std::cout << ", outer " << g.outer << "\n";
  return kExitOk;
}

int run_factorize(const SessionOptions& opt, const std::string& expr) {
  SessionConfig cfg = make_session(opt);
  Multivector m = evaluate(expr, cfg, "factorize");
  try {
    FactorizationResult fr = factorize_maximal(m);
    FactorizationFlags flags = classify_factorization(m, fr.b, fr.n);
    std::cout << "B = " << fr.b.mv().to_string() << "\n";
    std::cout << "N = " << fr.n.to_string() << "\n";
    std::cout << "kind: maximal-orthogonal-optimal\n";
    std::cout << "flags:";
    if (flags.efficient) std::cout << " efficient";
    if (flags.orthogonal) std::cout << " orthogonal";
    if (flags.maximal) std::cout << " maximal";
    if (flags.optimal) std::cout << " optimal";
    std::cout << "\nresidual = " << fmt(fr.residual) << "\n";
    return kExitOk;
  } catch (const std::exception& err) {
    throw CommandError{kExitEval, std::string("factorize: ") + err.what()};
  }
}

int run_carve(const SessionOptions& opt, const std::string& expr) {
  SessionConfig cfg = make_session(opt);
  Multivector m = evaluate(expr, cfg, "carve");
  try {
    CarvingResult cr = carve_minimal(m);
    CarvingFlags flags = classify_carving(m, cr.b, cr.n);
    std::cout << "B = " << cr.b.mv().to_string() << "\n";
    std::cout << "N = " << cr.n.to_string() << "\n";
    std::cout << "kind: minimal-internal-optimal\n";
    std::cout << "flags:";
    if (flags.efficient) std::cout << " efficient";
    if (flags.internal) std::cout << " internal";
    if (flags.minimal) std::cout << " minimal";
    if (flags.optimal) std::cout << " optimal";
    std::cout << "\nresidual = " << fmt(cr.residual) << "\n";
    return kExitOk;
  } catch (const std::exception& err) {
    throw CommandError{kExitEval, std::string("carve: ") + err.what()};
  }
}

int run_angles(const SessionOptions& opt, const std::string& expr_a,
               const std::string& expr_b) {
  SessionConfig cfg = make_session(opt);
  Blade a = evaluate_blade(expr_a, cfg, "angles");
  Blade b = evaluate_blade(expr_b, cfg, "angles");
  try {
    if (a.is_zero() || b.is_zero())
      throw CommandError{kExitEval, "angles: zero blade"};
    PrincipalData pd =
        principal_angles(outer_space(a.mv()), outer_space(b.mv()));
    std::cout << "principal cosines:";
    for (double c : pd.cosines) std::cout << " " << fmt(c);
    if (pd.cosines.empty()) std::cout << " (none)";
    std::cout << "\n";
    AsymmetricAngle angle = asym_angle_cos(a, b);
    std::cout << "cos theta unoriented = " << fmt(angle.unoriented_cos) << "\n";
    std::cout << "cos theta oriented = " << fmt(angle.oriented_cos) << "\n";

    Multivector ab = contract_left(a.mv(), b.mv());
    double predicted = a.norm() * b.norm() * angle.unoriented_cos;
    std::cout << "|A << B| = " << fmt(ab.norm()) << "\n";
    std::cout << "|A| |B| cos theta = " << fmt(predicted) << "\n";
    if (ab.is_zero()) {
      std::cout << "A << B = 0 (partially orthogonal)\n";
    } else {
      SubspaceBasis expected = subspace_intersection(
          subspace_complement(outer_space(a.mv())), outer_space(b.mv()));
      bool spaces_match = expected.dim() == outer_space(ab).dim() &&
                          subspace_contains(expected, outer_space(ab));
      std::cout << "[A << B] = [A]^perp cap [B]: "
                << (spaces_match ? "yes" : "no") << "\n";
      if (cfg.field == Field::Real) {
        Multivector oriented =
            wedge(project(a.mv(), outer_space(b.mv())), ab);
        std::cout << "(P_B A) ^ (A << B) oriented with B: "
                  << (inner(oriented, b.mv()).real() > 0 ? "yes" : "no")
                  << "\n";
      }
    }
    return kExitOk;
  } catch (const CommandError&) {
    throw;
  } catch (const std::exception& err) {
    throw CommandError{kExitEval, std::string("angles: ") + err.what()};
  }
}

int run_simple(const SessionOptions& opt, const std::string& expr) {
  SessionConfig cfg = make_session(opt);
  Multivector m = evaluate(expr, cfg, "simple");
  bool simple = is_simple(m);
  std::cout << (simple ? "simple" : "non-simple");
  if (m.is_homogeneous() && !m.is_zero()) {
    std::cout << "; plucker residual " << fmt(worst_plucker_residual(m))
              << "; cartan residual " << fmt(cartan_residual(m));
  } else if (!m.is_zero()) {
    std::cout << "; mixed grades (residual checks apply per homogeneous part)";
  }
  std::cout << "\n";
  return kExitOk;
}

MultiIndex parse_index_set(const std::string& text, int n, int& sign,
                           const char* stage) {
  std::vector<int> indices;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) indices.push_back(std::stoi(part));
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw CommandError{kExitParse, std::string(stage) +
                                           ": invalid index character in '" +
                                           text + "'"};
      indices.push_back(c - '0');
    }
  }
  for (int ix : indices)
    if (ix < 1 || ix > n)
      throw CommandError{kExitParse, std::string(stage) + ": index " +
                                         std::to_string(ix) +
                                         " out of range for dimension " +
                                         std::to_string(n)};
  Sign s = epsilon(IndexSeq(indices, n));
  if (s.zero)
    throw CommandError{kExitEval, std::string(stage) + ": repeated index in '" +
                                      text + "'"};
  sign *= s.value;
  return MultiIndex::from_indices(indices, n);
}

std::string signed_index_text(const SignedIndex& value, int extra_sign) {
  if (value.zero) return "0";
  int sign = value.sign * extra_sign;
  return (sign < 0 ? std::string("-") : std::string("+")) +
         value.index.to_string();
}

int run_scom(const SessionOptions& opt, const std::string& i_text,
             const std::string& j_text, const std::string& k_text) {
  const int n = opt.dimension;
  int sign = 1;
  MultiIndex i = parse_index_set(i_text, n, sign, "scom");
  MultiIndex j = parse_index_set(j_text, n, sign, "scom");
  if (!k_text.empty()) {
    MultiIndex k = parse_index_set(k_text, n, sign, "scom");
    std::cout << signed_index_text(supercommutator_closed(i, j, k), sign)
              << "\n";
    return kExitOk;
  }
  bool any = false;
  for (const MultiIndex& k : all_indices(n)) {
    SignedIndex value = supercommutator_closed(i, j, k);
    if (value.zero) continue;
    any = true;
    std::cout << k.to_string() << " -> " << signed_index_text(value, sign)
              << "\n";
  }
  if (!any) std::cout << "0 for all k\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exterior-algebra expression evaluator and analysis tool"};
  app.require_subcommand(1);

  SessionOptions opt;
  std::string expr, expr_b, scom_i, scom_j, scom_k;

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
  add_session_options(cmd_eval, opt);
  cmd_eval->add_flag("--json", opt.json, "emit JSON instead of text");
  cmd_eval->add_option("expr", expr, "expression ('-' reads stdin)")->required();

  CLI::App* cmd_spaces =
      app.add_subcommand("spaces", "inner/outer spaces and grade profile");
  add_session_options(cmd_spaces, opt);
  cmd_spaces->add_option("expr", expr, "expression")->required();

  CLI::App* cmd_fact =
      app.add_subcommand("factorize", "maximal orthogonal blade factorization");
  add_session_options(cmd_fact, opt);
  cmd_fact->add_option("expr", expr, "expression")->required();

  CLI::App* cmd_carve =
      app.add_subcommand("carve", "minimal internal blade carving");
  add_session_options(cmd_carve, opt);
  cmd_carve->add_option("expr", expr, "expression")->required();

  CLI::App* cmd_angles =
      app.add_subcommand("angles", "principal and asymmetric angles of blades");
  add_session_options(cmd_angles, opt);
  cmd_angles->add_option("expr_a", expr, "first blade")->required();
  cmd_angles->add_option("expr_b", expr_b, "second blade")->required();

  CLI::App* cmd_simple =
      app.add_subcommand("simple", "simplicity verdict and residuals");
  add_session_options(cmd_simple, opt);
  cmd_simple->add_option("expr", expr, "expression")->required();

  CLI::App* cmd_scom = app.add_subcommand(
      "scom", "closed-form supercommutator of creation/annihilation blades");
  add_session_options(cmd_scom, opt);
  cmd_scom->add_option("i", scom_i, "creation multi-index")->required();
  cmd_scom->add_option("j", scom_j, "annihilation multi-index")->required();
  cmd_scom->add_option("k", scom_k, "basis state (omit for a table)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "command line: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (app.got_subcommand(cmd_eval)) return run_eval(opt, expr);
    if (app.got_subcommand(cmd_spaces)) return run_spaces(opt, expr);
    if (app.got_subcommand(cmd_fact)) return run_factorize(opt, expr);
    if (app.got_subcommand(cmd_carve)) return run_carve(opt, expr);
    if (app.got_subcommand(cmd_angles)) return run_angles(opt, expr, expr_b);
    if (app.got_subcommand(cmd_simple)) return run_simple(opt, expr);
    if (app.got_subcommand(cmd_scom))
      return run_scom(opt, scom_i, scom_j, scom_k);
  } catch (const CommandError& err) {
    std::cerr << "error: " << err.message << "\n";
    return err.code;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitEval;
  }
  return kExitParse;
}
