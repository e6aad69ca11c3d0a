#include "cli.hpp"

#include "ore/desing.hpp"
#include "ore/diffdesing.hpp"
#include "ore/lclm.hpp"
#include "ore/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace ore::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Writes key/value records either as aligned text or as the line-oriented
// machine format (key=value, operators as key.order and key.c<k>).
class Emitter {
 public:
  Emitter(std::ostream& os, bool machine) : os_(os), machine_(machine) {}

  void text(const std::string& key, const std::string& value) {
    os_ << key << (machine_ ? "=" : ": ") << value << '\n';
  }

  void integer(const std::string& key, long value) { text(key, std::to_string(value)); }

  void flag(const std::string& key, bool value) { text(key, machine_ ? (value ? "1" : "0") : (value ? "yes" : "no")); }

  void poly(const std::string& key, const Poly& p, std::string_view var = "x") {
    if (machine_)
      os_ << key << '=' << machine_poly(p) << '\n';
    else
      os_ << key << " = " << to_string(p, var) << '\n';
  }

  void op(const std::string& key, const OrePoly& l, bool canonical) {
    if (machine_)
      write_machine_operator(os_, key, canonical && !l.is_zero() ? primitive(l) : l);
    else
      os_ << key << " = " << print_operator(l, canonical) << '\n';
  }

  void list(const std::string& key, const std::vector<long>& v) {
    std::string s;
    for (long e : v) {
      if (!s.empty()) s += machine_ ? " " : ", ";
      s += std::to_string(e);
    }
    text(key, machine_ ? s : "{" + s + "}");
  }

  void factors(const std::vector<FactorRow>& rows) {
    if (machine_) {
      integer("factors.count", static_cast<long>(rows.size()));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string k = "factors." + std::to_string(i);
        poly(k + ".poly", rows[i].factor);
        integer(k + ".before", rows[i].before);
        integer(k + ".after", rows[i].after);
      }
      return;
    }
    os_ << "multiplicities (lc L -> lc M):\n";
    for (const auto& r : rows) os_ << "  " << to_string(r.factor) << ": " << r.before << " -> " << r.after << '\n';
  }

 private:
  std::ostream& os_;
  bool machine_;
};

std::string read_operand(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read operator file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OrePoly parse_operand(const std::string& arg, const AlgebraRef& alg) {
  try {
    return parse_operator(read_operand(arg), alg);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")) + " in '" +
                         read_operand(arg) + "'",
                     e.position());
  }
}

std::vector<OrePoly> parse_operands(const std::vector<std::string>& args, std::size_t min, std::size_t max,
                                    const AlgebraRef& alg) {
  if (args.size() < min || args.size() > max) {
    std::string want = min == max ? std::to_string(min) : std::to_string(min) + " or more";
    throw UsageError("expected " + want + " operator argument(s), got " + std::to_string(args.size()));
  }
  std::vector<OrePoly> ops;
  for (const auto& a : args) ops.push_back(parse_operand(a, alg));
  return ops;
}

struct DesingFlags {
  int order = 1;
  std::string mode = "lv";
  std::uint64_t seed = 0;
  int max_tries = 100;
  int height_ceiling = 50;
  std::string factor;
};

void add_desing_flags(CLI::App* cmd, DesingFlags& f) {
  cmd->add_option("--order,-n", f.order, "order of the auxiliary operator")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", f.mode, "mc (Monte Carlo), lv (Las Vegas) or det (deterministic)")
      ->check(CLI::IsMember({"mc", "lv", "det"}));
  cmd->add_option("--seed", f.seed, "master seed for the random auxiliary operator");
  cmd->add_option("--max-tries", f.max_tries, "Las Vegas retry budget")->check(CLI::PositiveNumber);
  cmd->add_option("--height-ceiling", f.height_ceiling, "largest coefficient height tried by det")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--factor", f.factor, "report how many copies of this factor of lc(L) are removed");
}

DesingReport run_desing(const OrePoly& l, const DesingFlags& f) {
  DesingOptions opts;
  opts.order = f.order;
  opts.mode = f.mode == "mc" ? DesingMode::monte_carlo : f.mode == "det" ? DesingMode::deterministic : DesingMode::las_vegas;
  opts.seed = f.seed;
  opts.max_tries = f.max_tries;
  opts.height_ceiling = f.height_ceiling;
  return report(l, opts);
}

void emit_desing(Emitter& e, const OrePoly& l, const DesingFlags& f, bool full) {
  const OrePoly base = primitive(l);
  std::optional<Poly> factor;
  if (!f.factor.empty()) {
    factor = canonical(parse_poly(f.factor));
    if (factor->is_constant()) throw UsageError("--factor must be a nonconstant polynomial");
    if (!divides(*factor, base.poly_lc()))
      throw UsageError("--factor " + to_string(*factor) + " does not divide lc(L) = " + to_string(base.poly_lc()));
  }
  std::optional<Removability> query;
  if (factor && f.mode == "lv") query = is_removable(base, *factor, f.order, f.seed, f.max_tries);
  const DesingReport rep = query ? query->report : run_desing(base, f);

  e.text("mode", f.mode);
  e.integer("order", f.order);
  e.text("seed", std::to_string(rep.seed));
  e.integer("trials", rep.trials_used);
  e.flag("certified", rep.certified);
  e.poly("multiplier", rep.multiplier);
  e.op("L", base, true);
  e.op("A", rep.aux, true);
  e.op("M", rep.result.m, true);
  e.poly("lc_L", rep.input_lc);
  e.poly("lc_M", rep.result.m.poly_lc());
  e.poly("removed", rep.removed_part);
  e.factors(rep.factor_table);
  if (factor) {
    e.poly("factor", *factor);
    e.integer("k", query ? query->k : removed_multiplicity(rep, *factor));
  }
  if (full) {
    e.integer("order_increase", rep.order_increase);
    e.op("U", rep.result.u_cofactor, false);
    e.op("V", rep.result.v_cofactor, false);
    e.poly("u_n", rep.result.u_n);
    e.poly("content", rep.result.removed_content);
  }
}

// Returns the exit code: diffdesing is the only command with a non-error,
// nonzero outcome.
int emit_diffdesing(Emitter& e, std::ostream& err, const OrePoly& l, const std::string& point_text) {
  const Rational xi = point_text.empty() ? Rational(0) : parse_rational(point_text);
  const ClassicalResult res = classical_desingularize_at(l, xi);
  const ExponentSet& exps = std::visit([](const auto& r) -> const ExponentSet& { return r.exponents; }, res);
  e.text("point", to_string(xi));
  e.poly("indicial", exps.indicial, "s");
  e.list("candidates", exps.candidates);
  e.list("admitted", exps.admitted);
  if (const auto* bad = std::get_if<NotDesingularizable>(&res)) {
    e.text("status", "not desingularizable");
    err << "not desingularizable: " << bad->exponents.admitted.size() << " admitted exponent(s) for an operator of order "
        << l.order() << '\n';
    return not_desingularizable;
  }
  const auto& ok = std::get<ClassicalOutcome>(res);
  e.text("status", "ok");
  e.list("missing", ok.missing);
  e.op("A", ok.aux, true);
  e.op("M", ok.result, true);
  return ExitCode::ok;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact desingularization of Ore operators", "oredesing"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string algebra_text = "diff", generator, format = "text";
  app.add_option("--algebra", algebra_text, "diff, shift or custom:sigma=<poly>,delta=<poly>");
  app.add_option("--generator", generator, "symbol of the generator (default D, S or P)");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::vector<std::string> operands;
  auto* lclm_cmd = app.add_subcommand("lclm", "least common left multiple of two operators");
  lclm_cmd->add_option("operators", operands, "L and A")->required();

  DesingFlags desing_flags;
  auto* desing_cmd = app.add_subcommand("desing", "desingularize L with an auxiliary operator of order n");
  desing_cmd->add_option("operator", operands, "L")->required();
  add_desing_flags(desing_cmd, desing_flags);

  auto* report_cmd = app.add_subcommand("report", "desing with the full lclm witness");
  report_cmd->add_option("operator", operands, "L")->required();
  add_desing_flags(report_cmd, desing_flags);

  std::string point;
  auto* diff_cmd = app.add_subcommand("diffdesing", "classical desingularization of a differential operator");
  diff_cmd->add_option("operator", operands, "L")->required();
  diff_cmd->add_option("--point", point, "the singular point (a rational number, default 0)");

  auto* mul_cmd = app.add_subcommand("mul", "product of two or more operators, left to right");
  mul_cmd->add_option("operators", operands)->required();
  auto* rdiv_cmd = app.add_subcommand("rdiv", "right division U = Q V + R");
  rdiv_cmd->add_option("operators", operands, "U and V")->required();
  auto* gcrd_cmd = app.add_subcommand("gcrd", "greatest common right divisor");
  gcrd_cmd->add_option("operators", operands, "U and V")->required();
  auto* exp_cmd = app.add_subcommand("exponents", "indicial polynomial and power series exponents at 0");
  exp_cmd->add_option("operator", operands, "L")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : usage_error;
  }

  try {
    AlgebraDescriptor desc = parse_algebra_descriptor(algebra_text);
    if (!generator.empty()) desc.generator = generator;
    const AlgebraRef alg = make_algebra(desc);
    Emitter e(out, format == "machine");

    if (lclm_cmd->parsed()) {
      const auto ops = parse_operands(operands, 2, 2, alg);
      const LclmWitness w = lclm_ansatz(primitive(ops[0]), primitive(ops[1]));
      e.op("M", w.m, true);
      e.op("U", w.u_cofactor, false);
      e.op("V", w.v_cofactor, false);
      e.poly("u_n", w.u_n);
      e.poly("content", w.removed_content);
    } else if (desing_cmd->parsed() || report_cmd->parsed()) {
      const auto ops = parse_operands(operands, 1, 1, alg);
      emit_desing(e, ops[0], desing_flags, report_cmd->parsed());
    } else if (diff_cmd->parsed()) {
      const auto ops = parse_operands(operands, 1, 1, alg);
      if (!alg->is_differential()) throw UsageError("diffdesing needs --algebra diff");
      return emit_diffdesing(e, err, ops[0], point);
    } else if (mul_cmd->parsed()) {
      const auto ops = parse_operands(operands, 2, static_cast<std::size_t>(-1), alg);
      OrePoly product = ops[0];
      for (std::size_t i = 1; i < ops.size(); ++i) product = product * ops[i];
      e.op("product", product, false);
    } else if (rdiv_cmd->parsed()) {
      const auto ops = parse_operands(operands, 2, 2, alg);
      if (ops[1].is_zero()) throw UsageError("division by the zero operator");
      const OreDivision qr = right_divide(ops[0], ops[1]);
      e.op("Q", qr.quot, false);
      e.op("R", qr.rem, false);
    } else if (gcrd_cmd->parsed()) {
      const auto ops = parse_operands(operands, 2, 2, alg);
      e.op("G", gcrd(ops[0], ops[1]), true);
    } else if (exp_cmd->parsed()) {
      const auto ops = parse_operands(operands, 1, 1, alg);
      if (!alg->is_differential()) throw UsageError("exponents needs --algebra diff");
      const ExponentSet exps = exponents(ops[0]);
      e.poly("indicial", exps.indicial, "s");
      e.list("candidates", exps.candidates);
      e.list("admitted", exps.admitted);
      e.integer("truncation", exps.truncation_order);
    }
    return ExitCode::ok;
  } catch (const SearchExhausted& ex) {
    err << "error: " << ex.what() << '\n';
    return search_exhausted;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return usage_error;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"oredesing"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ore::cli
