#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "genuskit/errors.hpp"

namespace {

enum Exit : int {
  ok = 0,
  usage = 2,
  parse = 3,
  contradictory = 4,
  domain = 5,
  numeric = 6,
  internal = 7,
  io = 8,
};

int fail(int code, const std::string& what) {
  std::cerr << "genuskit: " << what << '\n';
  return code;
}

void add_source(CLI::App* cmd, genuskit::cli::PotentialSource& src) {
  cmd->add_option("--potential", src.path, "Potential file (JSON: {\"couplings\": {\"2\": \"p/q\", ...}})");
  cmd->add_option("--couplings", src.couplings, "Inline couplings, e.g. 2=1,4=2/3");
}

int run(int argc, char** argv) {
  using namespace genuskit::cli;
  CLI::App app{"Genus expansion of Hermitian one-matrix models: string equation, free energies, map counts"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format_name = "table";
  std::string output;
  int precision = -1;
  app.add_option("--format", format_name, "table, csv or json")->capture_default_str();
  app.add_option("--output,-o", output, "Write to this file instead of standard output");
  app.add_option("--precision", precision, "Significant digits for numerics (default: GENUSKIT_PRECISION or 50)");

  RkOptions rk;
  auto* rk_cmd = app.add_subcommand("rk", "Coefficients r_k of the string-equation expansion");
  add_source(rk_cmd, rk.source);
  rk_cmd->add_option("--order", rk.order, "Highest k (0..5)")->capture_default_str();
  rk_cmd->add_flag("--deformed", rk.deformed, "Use the deformed (t-dependent) expansion");
  rk_cmd->add_flag("--generic", rk.generic, "Generic W, written with W1 = W'(r0), W2 = W''(r0), ...");

  FreeEnergyOptions fe;
  auto* fe_cmd = app.add_subcommand("free-energy", "Closed forms F^(k), k <= 3, and their values at T = 1");
  add_source(fe_cmd, fe.source);
  fe_cmd->add_option("--model", fe.model, "Symbolic family: quartic, two-valence or sixtic");
  fe_cmd->add_option("--nu", fe.nu, "Second valence/2 of the two-valence model")->capture_default_str();
  fe_cmd->add_flag("--generic", fe.generic, "Generic closed forms (k >= 1)");
  fe_cmd->add_option("--genus", fe.genus, "Highest k (0..3)")->capture_default_str();

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Counting numbers kappa_k(n) of maps by vertex valences");
  count_cmd->add_option("--valences", count.valences, "Even valences, e.g. 2,4,6")->delimiter(',')->required();
  count_cmd->add_option("--max-vertices", count.max_vertices, "Cap on the number of vertices of each valence")
      ->capture_default_str();
  count_cmd->add_option("--max-total", count.max_total, "Cap on the total vertex count (default: sum of caps)");
  count_cmd->add_option("--genus-max", count.genus_max, "Highest genus k")->capture_default_str();

  PhaseOptions phase;
  auto* phase_cmd = app.add_subcommand("phase", "One-cut / two-cut classification and deformation fate");
  phase_cmd->add_option("--model", phase.model, "quartic or sixtic")->required();
  phase_cmd->add_option("--g", phase.g, "Couplings g2,g4[,g6] as rationals")->required()->allow_extra_args(false);
  phase_cmd->add_option("--endpoint", phase.endpoint_T, "Also solve the one-cut endpoint problem at this T");

  PainleveOptions pain;
  auto* pain_cmd = app.add_subcommand("painleve", "Painleve I hierarchy member at an m-th order critical point");
  pain_cmd->add_option("--m", pain.m, "Criticality order (>= 2)")->capture_default_str();
  pain_cmd->add_option("--rc", pain.rc, "Critical point of W = 1 - (1 - xi/rc)^m")->capture_default_str();
  pain_cmd->add_option("--tail-terms", pain.tail_terms, "Terms of the formal x -> infinity solution");
  pain_cmd->add_flag("--with-y", pain.with_y, "Keep the y term in the printed equation");
  pain_cmd->add_option("--system", pain.system, "Also print triple-scaling equations 0..K");

  ValidateOptions val;
  auto* val_cmd = app.add_subcommand("validate", "Finite-N recurrence checks against the genus expansion");
  add_source(val_cmd, val.source);
  val_cmd->add_option("--N", val.N, "Matrix sizes, e.g. 20,40")->delimiter(',')->capture_default_str();
  val_cmd->add_option("--orders", val.orders, "Highest K in the r_{N,N} comparison (0..3)")->capture_default_str();
  val_cmd->add_option("--resolvent-orders", val.resolvent_orders, "Powers of 1/lambda in the resolvent check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(usage, e.what());
  }

  const Format format = parse_format(format_name);
  unsigned digits = genuskit::cli::default_digits();
  if (precision != -1) {
    if (precision < 10 || precision > 100000) throw genuskit::DomainError("--precision must be in 10..100000");
    digits = static_cast<unsigned>(precision);
  }
  fe.digits = phase.digits = pain.digits = val.digits = digits;

  Document doc;
  if (rk_cmd->parsed()) {
    doc = run_rk(rk);
  } else if (fe_cmd->parsed()) {
    doc = run_free_energy(fe);
  } else if (count_cmd->parsed()) {
    doc = run_count(count);
  } else if (phase_cmd->parsed()) {
    doc = run_phase(phase);
  } else if (pain_cmd->parsed()) {
    doc = run_painleve(pain);
  } else {
    doc = run_validate(val);
  }
  emit(render(doc, format), output);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const genuskit::ParseError& e) {
    return fail(parse, std::string("parse error: ") + e.what());
  } catch (const genuskit::cli::ContradictoryOptions& e) {
    return fail(contradictory, std::string("contradictory options: ") + e.what());
  } catch (const genuskit::DomainError& e) {
    return fail(domain, std::string("domain error: ") + e.what());
  } catch (const genuskit::TruncationError& e) {
    return fail(domain, std::string("truncation: ") + e.what());
  } catch (const genuskit::NumericError& e) {
    return fail(numeric, std::string("numeric error: ") + e.what());
  } catch (const genuskit::cli::IoError& e) {
    return fail(io, std::string("I/O error: ") + e.what());
  } catch (const genuskit::InternalInconsistency& e) {
    return fail(internal, std::string("internal inconsistency: ") + e.what());
  } catch (const std::exception& e) {
    return fail(internal, std::string("internal error: ") + e.what());
  }
}
