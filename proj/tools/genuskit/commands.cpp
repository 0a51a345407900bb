#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "genuskit/counting/counting.hpp"
#include "genuskit/critical/criticality.hpp"
#include "genuskit/critical/painleve.hpp"
#include "genuskit/critical/phase.hpp"
#include "genuskit/energy/closed_form.hpp"
#include "genuskit/energy/specialize.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/finite_n/jacobi.hpp"
#include "genuskit/finite_n/residuals.hpp"
#include "genuskit/string/hodograph.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit::cli {

using nlohmann::json;

namespace {

constexpr unsigned kSmallDigits = 6;  // residuals and deviations

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::string real_string(const Real& x, unsigned digits) { return x.to_string(digits); }

// Ring of `rf` with xi renamed to r0.
RatFunc rename_xi(const RatFunc& rf) {
  std::vector<std::string> names = rf.ring()->names();
  for (auto& n : names) {
    if (n == "xi") n = "r0";
  }
  const RingPtr target = Ring::make(names);
  std::vector<RatFunc> images;
  for (std::size_t i = 0; i < names.size(); ++i) images.emplace_back(Poly::variable(target, i));
  return rf.compose(target, images);
}

Document report_document(const std::string& schema, const std::vector<std::pair<std::string, std::string>>& fields) {
  Document doc;
  doc.schema = schema;
  doc.table.columns = {"field", "value"};
  std::string text;
  for (const auto& [k, v] : fields) {
    doc.table.rows.push_back({k, v});
    text += k + ": " + v + "\n";
  }
  doc.text = text;
  return doc;
}

Rational parse_rational_option(const std::string& name, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const ParseError& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
}

}  // namespace

unsigned default_digits() {
  const char* env = std::getenv("GENUSKIT_PRECISION");
  if (env == nullptr || *env == '\0') return 50;
  const std::string s = env;
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
    throw ParseError("GENUSKIT_PRECISION must be a positive integer, got '" + s + "'");
  }
  const int d = std::stoi(s);
  if (d < 10) throw ParseError("GENUSKIT_PRECISION must be at least 10");
  return static_cast<unsigned>(d);
}

Potential load_potential_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read potential file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("potential file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("couplings") || !j["couplings"].is_object()) {
    throw ParseError("potential file '" + path + "' needs an object \"couplings\"");
  }
  std::map<std::string, std::string> by_degree;
  for (const auto& [key, value] : j["couplings"].items()) {
    if (value.is_string()) {
      by_degree[key] = value.get<std::string>();
    } else if (value.is_number_integer()) {
      by_degree[key] = value.dump();
    } else {
      throw ParseError("coupling \"" + key + "\" must be a string \"p/q\" or an integer, not " + value.dump());
    }
  }
  return Potential::from_strings(by_degree);
}

Potential parse_inline_couplings(const std::string& text) {
  std::map<std::string, std::string> by_degree;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("coupling '" + item + "' is not of the form degree=value");
    const std::string key = trim(item.substr(0, eq));
    if (by_degree.count(key)) throw ParseError("coupling degree " + key + " given twice");
    by_degree[key] = trim(item.substr(eq + 1));
  }
  return Potential::from_strings(by_degree);
}

Potential PotentialSource::load() const {
  if (!path.empty() && !couplings.empty()) throw ContradictoryOptions("--potential and --couplings are exclusive");
  if (!path.empty()) return load_potential_file(path);
  if (!couplings.empty()) return parse_inline_couplings(couplings);
  throw DomainError("no potential given (use --potential FILE or --couplings 2=...,4=...)");
}

json potential_json(const Potential& pot) {
  json c = json::object();
  for (const auto& [n, v] : pot.couplings) {
    const std::string key = std::to_string(2 * n);
    if (const auto* q = std::get_if<Rational>(&v)) {
      c[key] = to_string(*q);
    } else {
      c[key] = std::get<std::string>(v);
    }
  }
  return json{{"couplings", c}};
}

Document run_rk(const RkOptions& o) {
  if (o.generic && o.source.given()) throw ContradictoryOptions("--generic takes no potential");
  if (o.order < 0 || o.order > 5) throw DomainError("--order must be in 0..5");
  RkExpansion rk;
  std::string hodograph;
  json body;
  if (o.generic) {
    rk = solve_rk(generic_context(o.order, o.deformed), o.order);
    hodograph = o.deformed ? "r0: W(r0) + 2*(t - 1)*r0 = T" : "r0: W(r0) = T";
    body["potential"] = "generic";
  } else {
    const Potential pot = o.source.load();
    const WFunction w = build_W(pot);
    rk = o.deformed ? solve_deformed_rk(w, o.order) : solve_rk(w, o.order, JetMode::concrete);
    const JetContextPtr& ctx = rk.context;
    Poly H = ctx->w_derivative(0);
    if (o.deformed) H += (ctx->t() - Poly(ctx->ring(), Rational(1))) * ctx->xi() * Rational(2);
    if (H.degree(ctx->xi_index()) == 1) {
      const RatFunc c = rename_xi(RatFunc(H.coefficient(ctx->xi_index(), 1)));
      if (c.num().is_constant() && c.den().is_constant()) {
        const Rational inv = c.den().constant_term() / c.num().constant_term();
        std::string s = inv.get_num() == 1 ? "T" : to_string(Integer(inv.get_num())) + "*T";
        if (inv.get_den() != 1) s += "/" + to_string(Integer(inv.get_den()));
        hodograph = "r0 = " + s;
      } else {
        hodograph = "r0 = T/(" + c.to_string() + ")";
      }
    } else {
      hodograph = "r0: " + rename_xi(RatFunc(H)).to_string() + " = T";
    }
    body["potential"] = potential_json(pot);
  }
  Document doc;
  doc.schema = "genuskit.rk/1";
  doc.table.columns = {"k", "r_k"};
  std::string text = hodograph + "\n";
  doc.table.rows.push_back({"0", hodograph});
  json rows = json::array();
  for (int k = 1; k <= rk.kmax(); ++k) {
    const std::string expr = rename_xi(rk.r[k].to_ratfunc()).to_string();
    text += "r" + std::to_string(k) + " = " + expr + "\n";
    doc.table.rows.push_back({std::to_string(k), expr});
    rows.push_back(json{{"k", k}, {"expression", expr}});
  }
  doc.text = text;
  body["deformed"] = o.deformed;
  body["order"] = o.order;
  body["r0"] = hodograph;
  body["r"] = rows;
  doc.body = body;
  return doc;
}

namespace {

std::string generic_form_string(const GenericClosedForm& f) {
  std::string s = f.rational.is_zero() ? "" : f.rational.to_string();
  for (const auto& lt : f.logs) {
    const std::string term = to_string(Rational(abs(lt.coeff))) + "*ln(" + lt.arg.to_string() + ")";
    if (s.empty()) {
      s = (lt.coeff < 0 ? "-" : "") + term;
    } else {
      s += (lt.coeff < 0 ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Document run_free_energy(const FreeEnergyOptions& o) {
  const int sources = (o.source.given() ? 1 : 0) + (o.model.empty() ? 0 : 1) + (o.generic ? 1 : 0);
  if (sources > 1) throw ContradictoryOptions("choose one of --potential/--couplings, --model, --generic");
  if (sources == 0) throw DomainError("no potential given (use --potential, --couplings, --model or --generic)");
  if (o.genus < 0 || o.genus > 3) throw DomainError("--genus must be in 0..3");
  Document doc;
  doc.schema = "genuskit.free-energy/1";
  json rows = json::array();
  std::string text;
  if (o.generic) {
    doc.table.columns = {"k", "F_k"};
    for (int k = 1; k <= o.genus; ++k) {
      const std::string expr = generic_form_string(generic_closed_form(k));
      doc.table.rows.push_back({std::to_string(k), expr});
      rows.push_back(json{{"k", k}, {"expression", expr}});
      text += "F" + std::to_string(k) + " = " + expr + "\n";
    }
    doc.body["potential"] = "generic";
  } else {
    WFunction w;
    if (!o.model.empty()) {
      ModelSpec spec;
      if (o.model == "quartic") {
        spec.family = ModelFamily::quartic;
      } else if (o.model == "two-valence") {
        spec.family = ModelFamily::two_valence;
        if (o.nu < 3) throw DomainError("--nu must be at least 3 for the two-valence model");
        spec.nu = o.nu;
      } else if (o.model == "sixtic") {
        spec.family = ModelFamily::sixtic;
      } else {
        throw ParseError("unknown --model '" + o.model + "' (expected quartic, two-valence or sixtic)");
      }
      w = model_W(spec);
      doc.body["potential"] = spec.name();
    } else {
      const Potential pot = o.source.load();
      w = build_W(pot);
      doc.body["potential"] = potential_json(pot);
    }
    std::optional<Real> r0;
    if (w.is_numeric()) {
      const HodographRoot root = hodograph_root(w, Rational(1), o.digits);
      r0 = root.value();
      doc.body["r0"] = real_string(*r0, o.digits);
      text += "r0 = " + real_string(*r0, o.digits) + "  (W(r0) = 1)\n";
    }
    doc.table.columns = {"k", "F_k"};
    if (r0) doc.table.columns.push_back("value");
    for (int k = 0; k <= o.genus; ++k) {
      const ClosedFormF f = closed_form_F(k, w);
      const std::string expr = f.to_string();
      json row{{"k", k}, {"expression", expr}};
      std::vector<std::string> cells{std::to_string(k), expr};
      text += "F" + std::to_string(k) + " = " + expr + "\n";
      if (r0) {
        const std::string v = real_string(f.evaluate({*r0}), o.digits);
        row["value"] = v;
        cells.push_back(v);
        text += "F" + std::to_string(k) + "(r0) = " + v + "\n";
      }
      rows.push_back(row);
      doc.table.rows.push_back(cells);
    }
    if (r0) doc.body["digits"] = o.digits;
  }
  doc.body["genus"] = o.genus;
  doc.body["F"] = rows;
  doc.text = text;
  return doc;
}

Document run_count(const CountOptions& o) {
  if (o.valences.empty()) throw DomainError("--valences is empty");
  for (std::size_t i = 0; i < o.valences.size(); ++i) {
    const int v = o.valences[i];
    if (v < 2 || v % 2 != 0) throw DomainError("valences must be even numbers >= 2");
    if (i > 0 && v <= o.valences[i - 1]) throw DomainError("valences must be strictly increasing");
  }
  if (o.max_vertices < 0) throw DomainError("--max-vertices must be >= 0");
  if (o.genus_max < 0) throw DomainError("--genus-max must be >= 0");
  const std::vector<int> caps(o.valences.size(), o.max_vertices);
  const int total = o.max_total >= 0 ? o.max_total : o.max_vertices * static_cast<int>(o.valences.size());
  const KappaTable table = count_maps(o.valences, caps, total, o.genus_max);

  Document doc;
  doc.schema = "genuskit.count/1";
  for (int v : o.valences) doc.table.columns.push_back("n" + std::to_string(v));
  doc.table.columns.push_back("k");
  doc.table.columns.push_back("kappa");
  json rows = json::array();
  for (const auto& n : table.vectors()) {
    for (int k = 0; k <= o.genus_max; ++k) {
      const std::string kappa = to_string(table.at(k, n));
      std::vector<std::string> cells;
      for (int x : n) cells.push_back(std::to_string(x));
      cells.push_back(std::to_string(k));
      cells.push_back(kappa);
      doc.table.rows.push_back(cells);
      rows.push_back(json{{"n", n}, {"k", k}, {"kappa", kappa}});
    }
  }
  doc.body = json{{"valences", o.valences},
                  {"caps", caps},
                  {"total_cap", total},
                  {"genus_max", o.genus_max},
                  {"rows", rows}};
  return doc;
}

Document run_phase(const PhaseOptions& o) {
  std::vector<Rational> g;
  for (const auto& s : o.g) {
    for (const auto& part : split(s, ',')) g.push_back(parse_rational_option("g", part));
  }
  std::size_t expected = 0;
  if (o.model == "quartic") {
    expected = 2;
  } else if (o.model == "sixtic") {
    expected = 3;
  } else {
    throw ParseError("unknown --model '" + o.model + "' (expected quartic or sixtic)");
  }
  if (g.size() != expected) {
    throw ContradictoryOptions("--model " + o.model + " takes " + std::to_string(expected) + " couplings, got " +
                               std::to_string(g.size()));
  }
  const PhaseVerdict v = o.model == "quartic" ? classify_quartic(g[0], g[1], o.digits)
                                              : sixtic_one_cut_check(g[0], g[1], g[2]);
  std::vector<std::pair<std::string, std::string>> fields{
      {"model", o.model}, {"phase", to_string(v.phase)}, {"fate", to_string(v.fate)}, {"region", v.region}};
  json body{{"model", o.model}, {"phase", to_string(v.phase)}, {"fate", to_string(v.fate)}, {"region", v.region}};
  json gj = json::array();
  for (const auto& q : g) gj.push_back(to_string(q));
  body["g"] = gj;
  if (v.t0_exact) {
    fields.emplace_back("t0", to_string(*v.t0_exact));
    body["t0"] = to_string(*v.t0_exact);
  } else if (v.t0) {
    fields.emplace_back("t0", real_string(*v.t0, o.digits));
    body["t0"] = real_string(*v.t0, o.digits);
  }
  for (const auto& d : v.details) fields.emplace_back("detail", d);
  body["details"] = v.details;
  if (!o.endpoint_T.empty()) {
    const Rational T = parse_rational_option("endpoint", o.endpoint_T);
    const Potential pot = expected == 2 ? Potential::quartic(g[0], g[1]) : Potential::sixtic(g[0], g[1], g[2]);
    const EndpointReport e = endpoint_solve_one_cut(pot, T, o.digits);
    const std::string r0 = e.r0_exact ? to_string(*e.r0_exact) : real_string(e.r0, o.digits);
    fields.emplace_back("endpoint.T", to_string(T));
    fields.emplace_back("endpoint.r0", r0);
    fields.emplace_back("endpoint.alpha", real_string(e.alpha, o.digits));
    fields.emplace_back("endpoint.h", e.h.to_string("lambda"));
    fields.emplace_back("endpoint.verdict", e.verdict);
    body["endpoint"] = json{{"T", to_string(T)},
                            {"r0", r0},
                            {"alpha", real_string(e.alpha, o.digits)},
                            {"h", e.h.to_string("lambda")},
                            {"h_positive", e.h_positive},
                            {"singular", e.singular},
                            {"verdict", e.verdict}};
  }
  Document doc = report_document("genuskit.phase/1", fields);
  doc.body = body;
  return doc;
}

Document run_painleve(const PainleveOptions& o) {
  if (o.m < 2) throw DomainError("--m must be at least 2");
  if (o.tail_terms < 0) throw DomainError("--tail-terms must be >= 0");
  const Rational rc = parse_rational_option("rc", o.rc);
  if (rc <= 0) throw DomainError("--rc must be positive");
  const WFunction w = canonical_critical_W(o.m, rc);
  const auto crit = detect_criticality(w, o.digits);
  if (!crit || crit->m != o.m) throw InternalInconsistency("canonical critical potential lost its criticality");
  const PainleveMember member = painleve_member(o.m, *crit).normalized();
  const std::string equation = member.to_string(o.with_y);

  Document doc;
  doc.schema = "genuskit.painleve/1";
  doc.table.columns = {"field", "value"};
  doc.table.rows.push_back({"equation", equation});
  doc.table.rows.push_back({"alias", member.alias()});
  std::string text = equation + "\n";
  json body{{"m", o.m},
            {"rc", to_string(rc)},
            {"wm", to_string(crit->exact_wm())},
            {"equation", equation},
            {"alias", member.alias()},
            {"with_y", o.with_y}};
  if (o.tail_terms > 0) {
    const FormalTailSeries tail = formal_tail_series(member, o.tail_terms);
    const std::string var = tail.direction > 0 ? "x" : "(-x)";
    json terms = json::array();
    for (std::size_t n = 0; n < tail.a.size(); ++n) {
      const Rational e = ratio(1 - (2L * o.m + 1) * static_cast<long>(n), o.m);
      const std::string a = to_string(tail.a[n]);
      text += "a" + std::to_string(n) + " = " + a + "  [" + var + "^(" + to_string(e) + ")]\n";
      doc.table.rows.push_back({"a" + std::to_string(n), a});
      terms.push_back(json{{"n", n}, {"coefficient", a}, {"exponent", to_string(e)}});
    }
    const auto re = tail.residual_exponent();
    const std::string rs = re ? to_string(*re) : "none";
    text += "residual exponent = " + rs + "\n";
    doc.table.rows.push_back({"residual_exponent", rs});
    body["tail"] = json{{"direction", tail.direction}, {"terms", terms}, {"residual_exponent", rs}};
  }
  if (o.system >= 0) {
    const TripleScalingSystem sys = triple_scaling_system(o.system, *crit, w);
    json eqs = json::array();
    for (int k = 0; k <= o.system; ++k) {
      const std::string eq = sys.to_string(k);
      text += "system[" + std::to_string(k) + "]: " + eq + "\n";
      doc.table.rows.push_back({"system" + std::to_string(k), eq});
      eqs.push_back(eq);
    }
    body["system"] = eqs;
  }
  doc.text = text;
  doc.body = body;
  return doc;
}

Document run_validate(const ValidateOptions& o) {
  if (o.N.empty()) throw DomainError("--N needs at least one value");
  for (int n : o.N) {
    if (n < 2) throw DomainError("--N values must be at least 2");
  }
  std::vector<int> Ns = o.N;
  std::sort(Ns.begin(), Ns.end());
  if (std::adjacent_find(Ns.begin(), Ns.end()) != Ns.end()) throw ContradictoryOptions("--N lists a value twice");
  if (o.orders < 0 || o.orders > 3) throw DomainError("--orders must be in 0..3");
  if (o.resolvent_orders < 1) throw DomainError("--resolvent-orders must be >= 1");

  const Potential pot = o.source.load();
  if (!pot.is_numeric()) throw DomainError("validate needs numeric couplings");
  const WFunction w = build_W(pot);
  const RkExpansion rk = solve_rk(w, o.orders, JetMode::concrete);

  Document doc;
  doc.schema = "genuskit.validate/1";
  doc.table.columns = {"section", "N", "index", "value"};
  auto add = [&doc](const std::string& section, const std::string& N, const std::string& index, const std::string& v) {
    doc.table.rows.push_back({section, N, index, v});
  };
  std::ostringstream text;
  std::vector<JacobiData> data;
  std::vector<FreeEnergyReport> energies;
  json runs = json::array();
  for (int N : Ns) {
    JacobiData jd = stieltjes_recurrence(pot, N, -1, o.digits);
    const ResidualReport sr = string_residual(jd);
    const ResolventReport rr = resolvent_identity_check(jd, o.resolvent_orders);
    const FreeEnergyReport fe = free_energy_biz(jd, std::min(o.orders + 1, 3));
    const std::string Ns_ = std::to_string(N);

    json sres = json::array();
    for (std::size_t i = 0; i < sr.n.size(); ++i) {
      const std::string v = real_string(sr.residual[i], kSmallDigits);
      sres.push_back(v);
      add("string_residual", Ns_, std::to_string(sr.n[i]), v);
    }
    json quad = json::array();
    json lin = json::array();
    for (std::size_t i = 0; i < rr.quadratic.residual.size(); ++i) {
      quad.push_back(real_string(rr.quadratic.residual[i], kSmallDigits));
      lin.push_back(real_string(rr.linear.residual[i], kSmallDigits));
      add("resolvent_quadratic", Ns_, std::to_string(rr.quadratic.n[i]), quad.back());
      add("resolvent_linear", Ns_, std::to_string(rr.linear.n[i]), lin.back());
    }
    json partial = json::array();
    json devs = json::array();
    for (std::size_t K = 0; K < fe.deviations.size(); ++K) {
      partial.push_back(real_string(fe.partial_sums[K], o.digits));
      devs.push_back(real_string(fe.deviations[K], kSmallDigits));
      add("free_energy_deviation", Ns_, std::to_string(K), devs.back());
    }
    add("F_N_minus_F_gauss", Ns_, "", real_string(fe.difference, o.digits));
    runs.push_back(json{
        {"N", N},
        {"n_max", jd.n_max},
        {"quadrature",
         {{"level", jd.level},
          {"nodes", jd.nodes},
          {"cutoff", real_string(jd.cutoff, kSmallDigits)},
          {"orthogonality_defect", real_string(jd.orthogonality_defect, kSmallDigits)}}},
        {"string_residual", {{"n", sr.n}, {"values", sres}, {"max", real_string(sr.max_residual, kSmallDigits)}}},
        {"resolvent",
         {{"n_range", {rr.n_lo, rr.n_hi}},
          {"quadratic", quad},
          {"linear", lin}}},
        {"free_energy",
         {{"F_N", real_string(fe.F_N, o.digits)},
          {"F_gauss", real_string(fe.F_gauss, o.digits)},
          {"difference", real_string(fe.difference, o.digits)},
          {"partial_sums", partial},
          {"deviations", devs}}}});
    text << "N = " << N << ": string residual max " << real_string(sr.max_residual, kSmallDigits)
         << ", resolvent max " << real_string(max(rr.quadratic.max_residual, rr.linear.max_residual), kSmallDigits)
         << " (orders " << o.resolvent_orders << "), F_N - F_N^G = " << real_string(fe.difference, o.digits) << "\n";
    data.push_back(std::move(jd));
    energies.push_back(fe);
  }

  auto fit_json = [](const DecayFit& f) {
    json dev = json::array();
    for (const auto& d : f.deviation) dev.push_back(real_string(d, kSmallDigits));
    json ex = json::array();
    for (double e : f.exponents) {
      std::ostringstream os;
      os.precision(6);
      os << e;
      ex.push_back(os.str());
    }
    return json{{"N", f.N}, {"deviation", dev}, {"exponents", ex}, {"precision_limited", f.precision_limited}};
  };
  json rfits = json::array();
  json ffits = json::array();
  for (int K = 0; K <= o.orders; ++K) {
    const DecayFit f = asymptotic_compare(data, rk, K);
    json j = fit_json(f);
    j["K"] = K;
    j["expected"] = 2 * (K + 1);
    rfits.push_back(j);
    for (std::size_t i = 0; i < f.exponents.size(); ++i) add("r_fit_exponent", "", std::to_string(K), j["exponents"][i]);
    text << "r_{N,N} K = " << K << ": deviations";
    for (const auto& d : j["deviation"]) text << " " << d.get<std::string>();
    if (!f.exponents.empty()) {
      text << ", exponents";
      for (const auto& e : j["exponents"]) text << " " << e.get<std::string>();
    }
    text << " (expected " << 2 * (K + 1) << ")\n";
  }
  const std::size_t fe_orders = energies.front().deviations.size();
  for (std::size_t K = 0; K < fe_orders; ++K) {
    std::vector<Real> dev;
    for (const auto& fe : energies) dev.push_back(fe.deviations[K]);
    const DecayFit f = fit_decay(Ns, dev, o.digits);
    json j = fit_json(f);
    j["K"] = K;
    j["expected"] = 2 * (K + 1);
    ffits.push_back(j);
    for (std::size_t i = 0; i < f.exponents.size(); ++i) add("F_fit_exponent", "", std::to_string(K), j["exponents"][i]);
    text << "F_N K = " << K << ": deviations";
    for (const auto& d : j["deviation"]) text << " " << d.get<std::string>();
    if (!f.exponents.empty()) {
      text << ", exponents";
      for (const auto& e : j["exponents"]) text << " " << e.get<std::string>();
    }
    text << " (expected " << 2 * (K + 1) << ")\n";
  }
  doc.body = json{{"potential", potential_json(pot)},
                  {"digits", o.digits},
                  {"orders", o.orders},
                  {"resolvent_orders", o.resolvent_orders},
                  {"runs", runs},
                  {"fits", {{"r_NN", rfits}, {"free_energy", ffits}}}};
  doc.text = text.str();
  return doc;
}

}  // namespace genuskit::cli
