//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wirtinger/cli.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/forward.hpp"
#include "wirtinger/graph.hpp"
#include "wirtinger/optimize.hpp"
#include "wirtinger/oracle.hpp"
#include "wirtinger/reverse.hpp"

namespace wirtinger::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kGrammarHelp = R"(Expressions use one complex variable, z unless --var says otherwise.
  literals    2  0.5  1e-3  2i  i
  operators   + - * /  and ^ with an integer exponent
  precedence  ^ binds tighter than unary minus: -z^2 is -(z^2)
  functions   conj re im abs2 exp log sin cos
Flag values are complex literals such as 1, 1i, 1+1i, 2.5-0.5i (write 1i, not i).
Cotangents and gradients use the plus convention unless --convention minus is given.
Exit status: 0 on success, 1 for usage, parse or input errors, 2 for domain or
numeric errors and for a failed check.)";

struct Options {
  std::string expression;
  std::string at = "0";
  std::string var = "z";
  std::string format = "text";
  std::string tangent = "1";
  std::string cotangent = "1";
  std::string convention = "plus";
  double h = 1e-5;
  double tol = 1e-6;
  std::string matrix;
  std::optional<std::string> quad_tangent;
  std::optional<std::string> quad_cotangent;
  std::string init = "0";
  OptimizerConfig optimizer;
};

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json tensor_json(const Tensor& t) {
  if (t.rank() == 0) return complex_json(t.item());
  json rows = json::array();
  for (Index r = 0; r < t.shape().rows(); ++r) {
    if (t.rank() == 1) {
      rows.push_back(complex_json(t(r)));
      continue;
    }
    json row = json::array();
    for (Index c = 0; c < t.shape().cols(); ++c) row.push_back(complex_json(t(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sci(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Accepts `NAME=VALUE` or a bare `VALUE`.
std::string point_text(const std::string& text, const std::string& var) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) return text;
  const std::string name = trim(std::string_view(text).substr(0, eq));
  if (name != var) {
    throw ConfigError("--at assigns '" + name + "' but the expression variable is '" + var + "'");
  }
  return text.substr(eq + 1);
}

// Emits either text lines or the JSON document
// {command, inputs, convention?, result, diagnostics}.
class Report {
 public:
  Report(std::string command, const Options& opts) : command_(std::move(command)), json_(opts.format == "json") {}

  json& inputs() { return inputs_; }
  json& result() { return result_; }
  void set_convention(Convention c) { convention_ = c; }
  void line(const std::string& text) { lines_.push_back(text); }
  void diagnostic(const std::string& text) {
    diagnostics_.push_back(text);
    lines_.push_back(text);
  }

  void emit(std::ostream& out) const {
    if (!json_) {
      for (const std::string& l : lines_) out << l << '\n';
      return;
    }
    json doc;
    doc["command"] = command_;
    doc["inputs"] = inputs_.is_null() ? json::object() : inputs_;
    if (convention_) doc["convention"] = std::string(to_string(*convention_));
    doc["result"] = result_.is_null() ? json::object() : result_;
    doc["diagnostics"] = diagnostics_;
    out << doc.dump(2) << '\n';
  }

 private:
  std::string command_;
  bool json_;
  json inputs_;
  json result_;
  json diagnostics_ = json::array();
  std::optional<Convention> convention_;
  std::vector<std::string> lines_;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int dispatch(const std::string& command, const Options& opts) {
    try {
      if (command == "eval") return eval(opts);
      if (command == "jvp") return forward(opts);
      if (command == "vjp") return reverse(opts, false);
      if (command == "grad") return reverse(opts, true);
      if (command == "convention-report") return convention_report(opts);
      if (command == "check") return check(opts);
      if (command == "holo-check") return holo_check(opts);
      if (command == "quadform") return quadform(opts);
      if (command == "optimize") return optimize(opts);
      err_ << "error: unknown command '" << command << "'\n";
      return kUsage;
    } catch (const expr::ParseError& e) {
      report_parse_error(e);
      return kUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << '\n';
      return kNumeric;
    } catch (const NumericError& e) {
      err_ << "error: " << e.what() << '\n';
      return kNumeric;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }
  }

 private:
  Graph compile(const Options& opts) {
    source_ = opts.expression;
    return expr::compile(opts.expression, builtin_registry(), opts.var);
  }

  void report_parse_error(const expr::ParseError& e) {
    err_ << "error: " << e.what() << '\n';
    const std::size_t offset = std::min(e.span().offset, source_.size());
    err_ << "  " << source_ << '\n';
    err_ << "  " << std::string(offset, ' ') << std::string(std::max<std::size_t>(e.span().length, 1), '^')
         << '\n';
  }

  static void expression_inputs(Report& r, const Options& opts, Complex z) {
    r.inputs()["expression"] = opts.expression;
    r.inputs()["variable"] = opts.var;
    r.inputs()["at"] = complex_json(z);
  }

  int eval(const Options& opts) {
    const Graph g = compile(opts);
    const Complex z = parse_complex(point_text(opts.at, opts.var));
    const Complex value = evaluate(g, Tensor(z)).item();
    Report r("eval", opts);
    expression_inputs(r, opts, z);
    r.result()["value"] = complex_json(value);
    r.line(format_complex(value));
    r.emit(out_);
    return kOk;
  }

  int forward(const Options& opts) {
    const Graph g = compile(opts);
    const Complex z = parse_complex(point_text(opts.at, opts.var));
    const Complex t = parse_complex(opts.tangent);
    const JvpResult res = jvp(g, Tensor(z), Tensor(t));
    Report r("jvp", opts);
    expression_inputs(r, opts, z);
    r.inputs()["tangent"] = complex_json(t);
    r.result()["value"] = complex_json(res.value.item());
    r.result()["tangent"] = complex_json(res.tangent.item());
    r.line("value: " + format_complex(res.value.item()));
    r.line("tangent: " + format_complex(res.tangent.item()));
    r.emit(out_);
    return kOk;
  }

  int reverse(const Options& opts, bool gradient) {
    const Convention conv = parse_convention(opts.convention);
    const Graph g = compile(opts);
    const Complex z = parse_complex(point_text(opts.at, opts.var));
    const Complex fbar = gradient ? Complex(1.0, 0.0) : parse_complex(opts.cotangent);
    const Recording rec = record(g, Tensor(z));
    const Complex xi = vjp(rec.tape, Tensor(fbar), conv).item();
    const char* key = gradient ? "gradient" : "cotangent";

    Report r(gradient ? "grad" : "vjp", opts);
    expression_inputs(r, opts, z);
    if (!gradient) r.inputs()["cotangent"] = complex_json(fbar);
    r.set_convention(conv);
    r.result()["value"] = complex_json(rec.value.item());
    r.result()[key] = complex_json(xi);
    r.line("convention: " + std::string(to_string(conv)));
    r.line("value: " + format_complex(rec.value.item()));
    r.line(std::string(key) + ": " + format_complex(xi));
    r.emit(out_);
    return kOk;
  }

  int convention_report(const Options& opts) {
    struct Row {
      std::string source;
      Convention convention;
      Complex gradient;
    };
    const Complex z(1.0, 1.0);
    const Graph g = expr::compile("0.5*z^2");
    const std::vector<Row> rows = {
        {"wirt --convention plus", Convention::plus, grad(g, Tensor(z), Convention::plus).item()},
        {"wirt --convention minus", Convention::minus, grad(g, Tensor(z), Convention::minus).item()},
        {"JAX (reference)", Convention::minus, Complex(1.0, 1.0)},
        {"PyTorch (reference)", Convention::plus, Complex(1.0, -1.0)},
        {"TensorFlow (reference)", Convention::plus, Complex(1.0, -1.0)},
    };

    Report r("convention-report", opts);
    r.inputs()["expression"] = "0.5*z^2";
    r.inputs()["at"] = complex_json(z);
    r.result()["rows"] = json::array();
    r.line("gradient of 0.5*z^2 at z = 1+1i");
    std::ostringstream header;
    header << std::left << std::setw(26) << "source" << std::setw(12) << "convention" << "gradient";
    r.line(header.str());
    for (const Row& row : rows) {
      std::ostringstream s;
      s << std::left << std::setw(26) << row.source << std::setw(12) << to_string(row.convention)
        << format_complex(row.gradient);
      r.line(s.str());
      r.result()["rows"].push_back({{"source", row.source},
                                    {"convention", std::string(to_string(row.convention))},
                                    {"gradient", complex_json(row.gradient)}});
    }
    for (std::size_t k = 0; k < 2; ++k) {
      std::string agrees;
      for (std::size_t ref = 2; ref < rows.size(); ++ref) {
        if (std::abs(rows[k].gradient - rows[ref].gradient) <= 1e-12) {
          agrees += (agrees.empty() ? "" : ", ") + rows[ref].source.substr(0, rows[ref].source.find(' '));
        }
      }
      r.diagnostic(std::string(to_string(rows[k].convention)) + " agrees with " + (agrees.empty() ? "none" : agrees));
    }
    r.emit(out_);
    return kOk;
  }

  int check(const Options& opts) {
    if (!(opts.h > 0.0)) throw ConfigError("--h must be positive");
    if (!(opts.tol > 0.0)) throw ConfigError("--tol must be positive");
    const Graph g = compile(opts);
    const Complex z = parse_complex(point_text(opts.at, opts.var));
    const Tensor point(z);
    evaluate(g, point);
    const LatentJacobian jac = latent_jacobian_fd(g, point, opts.h);

    const std::vector<Complex> probes = {Complex(1.0, 0.0), Complex(0.0, 1.0)};
    auto worst = [&](auto&& engine, auto&& oracle) {
      double e = 0.0;
      for (Complex p : probes) e = std::max(e, relative_error(engine(Tensor(p)), oracle(Tensor(p))));
      return e;
    };
    const Recording rec = record(g, point);
    struct Mode {
      std::string name;
      double error;
    };
    const std::vector<Mode> modes = {
        {"jvp", worst([&](const Tensor& t) { return jvp(g, point, t).tangent; },
                      [&](const Tensor& t) { return latent_jvp_oracle(jac, t); })},
        {"vjp (plus)", worst([&](const Tensor& f) { return vjp(rec.tape, f, Convention::plus); },
                             [&](const Tensor& f) { return latent_vjp_oracle(jac, f, Convention::plus); })},
        {"vjp (minus)", worst([&](const Tensor& f) { return vjp(rec.tape, f, Convention::minus); },
                              [&](const Tensor& f) { return latent_vjp_oracle(jac, f, Convention::minus); })},
    };

    Report r("check", opts);
    expression_inputs(r, opts, z);
    r.inputs()["h"] = opts.h;
    r.inputs()["tol"] = opts.tol;
    r.line("check " + opts.expression + " at " + opts.var + " = " + format_complex(z) + " against finite differences (h = " +
           format_real(opts.h) + ", tol = " + format_real(opts.tol) + ")");
    bool pass = true;
    json errors = json::object();
    for (const Mode& m : modes) {
      const bool ok = m.error <= opts.tol;
      pass = pass && ok;
      std::ostringstream s;
      s << std::left << std::setw(13) << m.name << "max relative error " << sci(m.error) << "  " << (ok ? "PASS" : "FAIL");
      r.line(s.str());
      errors[m.name] = m.error;
    }
    r.result()["max_relative_error"] = errors;
    r.result()["pass"] = pass;
    r.line(pass ? "PASS" : "FAIL");
    r.emit(out_);
    return pass ? kOk : kNumeric;
  }

  int holo_check(const Options& opts) {
    if (!(opts.tol > 0.0)) throw ConfigError("--tol must be positive");
    const Graph g = compile(opts);
    const Complex z = parse_complex(point_text(opts.at, opts.var));
    evaluate(g, Tensor(z));
    const HolomorphicityReport rep = holomorphicity_check(g, Tensor(z), opts.tol, opts.h);
    const double analytic = std::abs(wirtinger_of(g, z).dzbar.item());

    Report r("holo-check", opts);
    expression_inputs(r, opts, z);
    r.inputs()["tol"] = opts.tol;
    r.result()["holomorphic_at_point"] = rep.is_holomorphic;
    r.result()["dzbar_norm"] = rep.dzbar_norm;
    r.result()["dzbar_norm_analytic"] = analytic;
    r.line(std::string(rep.is_holomorphic ? "holomorphic" : "NOT holomorphic") + " at this point (" + opts.var +
           " = " + format_complex(z) + ")");
    r.line("|d/dzbar f| = " + sci(rep.dzbar_norm) + " by finite differences, " + sci(analytic) +
           " by the analytic rules (tol " + format_real(opts.tol) + ")");
    r.diagnostic("pointwise check only: it says nothing about other points");
    r.emit(out_);
    return kOk;
  }

  int quadform(const Options& opts) {
    const Tensor a = read_matrix_csv_file(opts.matrix);
    const Tensor z = parse_complex_vector(point_text(opts.at, "z"));
    const Graph g = quadratic_form(a);
    if (z.shape() != g.input_shape()) {
      throw ShapeError("vector of length " + std::to_string(z.size()) + " does not match the " +
                       a.shape().to_string() + " matrix");
    }
    const Recording rec = record(g, z);

    Report r("quadform", opts);
    r.inputs()["matrix"] = tensor_json(a);
    r.inputs()["at"] = tensor_json(z);
    r.result()["value"] = tensor_json(rec.value);
    r.line("value: " + format_complex(rec.value.item()));
    if (opts.quad_tangent) {
      const Tensor t = parse_complex_vector(*opts.quad_tangent);
      const Tensor out = jvp(g, z, t).tangent;
      r.inputs()["tangent"] = tensor_json(t);
      r.result()["tangent"] = tensor_json(out);
      r.line("tangent: " + format_tensor(out));
    }
    if (opts.quad_cotangent) {
      const Convention conv = parse_convention(opts.convention);
      const Complex fbar = parse_complex(*opts.quad_cotangent);
      const Tensor xi = vjp(rec.tape, Tensor(fbar), conv);
      r.inputs()["cotangent"] = complex_json(fbar);
      r.set_convention(conv);
      r.result()["cotangent"] = tensor_json(xi);
      r.line("convention: " + std::string(to_string(conv)));
      r.line("cotangent: " + format_tensor(xi));
    }
    r.emit(out_);
    return kOk;
  }

  int optimize(const Options& opts) {
    OptimizerConfig cfg = opts.optimizer;
    cfg.convention = parse_convention(opts.convention);
    const Graph g = compile(opts);
    const Complex z0 = parse_complex(point_text(opts.init, opts.var));
    const Trajectory traj = gradient_descent(g, z0, cfg);

    Report r("optimize", opts);
    r.inputs()["expression"] = opts.expression;
    r.inputs()["variable"] = opts.var;
    r.inputs()["init"] = complex_json(z0);
    r.inputs()["learning_rate"] = cfg.learning_rate;
    r.inputs()["max_steps"] = cfg.max_steps;
    r.inputs()["grad_tol"] = cfg.grad_tol;
    r.set_convention(cfg.convention);
    r.line("convention: " + std::string(to_string(cfg.convention)));
    r.line("step  z  f  |grad|");
    json iterates = json::array();
    for (const Iterate& it : traj.iterates) {
      r.line(std::to_string(it.step) + "  " + format_complex(it.z) + "  " + format_real(it.value) + "  " +
             format_real(it.grad_norm));
      iterates.push_back({{"step", it.step},
                          {"z", complex_json(it.z)},
                          {"f", it.value},
                          {"grad_norm", it.grad_norm}});
    }
    r.result()["iterates"] = std::move(iterates);
    r.result()["status"] = std::string(to_string(traj.reason));
    r.result()["final"] = complex_json(traj.last().z);
    r.line("status: " + std::string(to_string(traj.reason)) + " after " + std::to_string(traj.last().step) +
           " steps");
    r.line("final z: " + format_complex(traj.last().z));
    r.emit(out_);
    return kOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string source_;
};

void add_format(CLI::App* cmd, Options& opts) {
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_expression(CLI::App* cmd, Options& opts, bool with_point = true) {
  cmd->add_option("expression", opts.expression, "expression in z")->required();
  if (with_point) cmd->add_option("--at", opts.at, "evaluation point, z=LITERAL or LITERAL (default 0)");
  cmd->add_option("--var", opts.var, "variable name (default z)");
  add_format(cmd, opts);
}

void add_convention(CLI::App* cmd, Options& opts) {
  cmd->add_option("--convention", opts.convention, "gradient convention (default plus)")
      ->check(CLI::IsMember({"plus", "minus"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app("Complex automatic differentiation with Wirtinger derivatives.", "wirt");
  app.footer(kGrammarHelp);
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  add_expression(app.add_subcommand("eval", "print f(z)"), opts);

  CLI::App* jvp_cmd = app.add_subcommand("jvp", "forward mode: f(z) and df(z)(z')");
  add_expression(jvp_cmd, opts);
  jvp_cmd->add_option("--tangent", opts.tangent, "tangent z' (default 1)");

  CLI::App* vjp_cmd = app.add_subcommand("vjp", "reverse mode: cotangent pulled back through f");
  add_expression(vjp_cmd, opts);
  vjp_cmd->add_option("--cotangent", opts.cotangent, "output cotangent (default 1)");
  add_convention(vjp_cmd, opts);

  CLI::App* grad_cmd = app.add_subcommand("grad", "gradient of f at z (cotangent 1)");
  add_expression(grad_cmd, opts);
  add_convention(grad_cmd, opts);

  add_format(app.add_subcommand("convention-report", "gradient of 0.5*z^2 at 1+1i under each convention"), opts);

  CLI::App* check_cmd = app.add_subcommand("check", "compare jvp and vjp with finite differences");
  add_expression(check_cmd, opts);
  check_cmd->add_option("--h", opts.h, "finite-difference step (default 1e-5)");
  check_cmd->add_option("--tol", opts.tol, "relative error tolerance (default 1e-6)");

  CLI::App* holo_cmd = app.add_subcommand("holo-check", "test d/dzbar f = 0 at one point");
  add_expression(holo_cmd, opts);
  holo_cmd->add_option("--tol", opts.tol, "tolerance on |d/dzbar f| (default 1e-6)");
  holo_cmd->add_option("--h", opts.h, "finite-difference step (default 1e-5)");

  CLI::App* quad_cmd = app.add_subcommand("quadform", "conj(z)^T A z for a CSV matrix A");
  quad_cmd->add_option("--matrix", opts.matrix, "CSV file, one row per line")->required();
  quad_cmd->add_option("--at", opts.at, "vector z as comma-separated literals")->required();
  quad_cmd->add_option("--tangent", opts.quad_tangent, "tangent vector z'");
  quad_cmd->add_option("--cotangent", opts.quad_cotangent, "scalar output cotangent");
  add_convention(quad_cmd, opts);
  add_format(quad_cmd, opts);

  CLI::App* opt_cmd = app.add_subcommand("optimize", "gradient descent on a real-valued f");
  add_expression(opt_cmd, opts, false);
  opt_cmd->add_option("--init", opts.init, "starting point (default 0)");
  opt_cmd->add_option("--lr", opts.optimizer.learning_rate, "learning rate (default 0.1)");
  opt_cmd->add_option("--steps", opts.optimizer.max_steps, "maximum number of steps (default 1000)");
  opt_cmd->add_option("--tol", opts.optimizer.grad_tol, "stop once |grad| is at most this (default 1e-8)");
  opt_cmd->add_option("--imag-tol", opts.optimizer.imag_tol, "largest accepted |im f| (default 1e-9)");
  add_convention(opt_cmd, opts);

  std::vector<const char*> argv = {"wirt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (const CLI::App* sub : app.get_subcommands()) {
    return Runner(out, err).dispatch(sub->get_name(), opts);
  }
  return kUsage;
}

}  // namespace wirtinger::cli
