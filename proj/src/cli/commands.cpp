#include "coiso/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "coiso/operators/pushforward.hpp"
#include "coiso/poissonization/poissonization.hpp"
#include "coiso/ring/parser.hpp"
#include "coiso/ring/random.hpp"

namespace coiso::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const VData& structure(const StructureFile& f) {
  if (!f.V) throw InputError("this command needs a Jacobi structure");
  return *f.V;
}

Report start(const std::string& command, const StructureFile& f) {
  Report r;
  r.command = command;
  r.structure = f.source;
  r.conventions = conventions();
  return r;
}

// Runs `body`, turning runtime failures into an error entry for `name`.
void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    r.error(name, e.what());
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string describe(const NormalMultiSection& xi) { return xi.is_zero() ? "0" : join(xi.describe(), "; "); }

// Nondecreasing k-tuples over 0..choices-1.
std::vector<std::vector<int>> multisets(int choices, int k) {
  std::vector<std::vector<int>> out;
  if (choices == 0) return out;
  std::vector<int> c(k, 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == choices - 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[i];
  }
  return out;
}

struct Generator {
  std::string label;
  NormalMultiSection value;
};

std::vector<NormalMultiSection> pick(const std::vector<Generator>& gens, const std::vector<int>& choice,
                                     std::string& label) {
  std::vector<NormalMultiSection> args;
  std::vector<std::string> labels;
  for (int c : choice) {
    args.push_back(gens[c].value);
    labels.push_back(gens[c].label);
  }
  label = "(" + join(labels, ", ") + ")";
  return args;
}

std::vector<int> range(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

NormalMultiSection section_of(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  if (!o.section) {
    if (!f.section) throw InputError("no section given");
    return *f.section;
  }
  const PatchPtr& patch = V.patch();
  std::vector<Polynomial> comps(patch->d());
  std::stringstream ss(*o.section);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("section entries look like fiber=expression");
    std::string name = part.substr(0, eq);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    const auto idx = patch->context().find(name);
    if (!idx || *idx < patch->n()) throw InputError("'" + name + "' is not a fiber coordinate");
    try {
      comps[*idx - patch->n()] = parse_polynomial(part.substr(eq + 1), patch->context());
    } catch (const ParseError& e) {
      throw InputError(std::string("section: ") + e.what());
    }
    if (comps[*idx - patch->n()].depends_on(patch->fiber_mask()))
      throw InputError("section entries must not depend on fiber coordinates");
  }
  return NormalMultiSection::vector(patch, comps);
}

MultiOperator random_operator(const PatchPtr& patch, int arity, Rng& rng) {
  MultiOperator op(patch, arity);
  const auto vars = range(0, patch->dim());
  if (arity == 0) {
    op.X().set({}, rng.polynomial(vars, 2, 50));
    return op;
  }
  for (const IndexTuple& t : increasing_tuples(patch->dim(), arity))
    if (rng.chance(50)) op.X().set(t, rng.polynomial(vars, 2, 35));
  for (const IndexTuple& t : increasing_tuples(patch->dim(), arity - 1))
    if (rng.chance(50)) op.G().set(t, rng.polynomial(vars, 2, 35));
  return op;
}

bool vanishes_through(const MultiOperator& op, int order) {
  const VarMask fiber = op.patch()->fiber_mask();
  for (const auto* t : {&op.X(), &op.G()})
    for (const auto& [idx, c] : t->entries())
      if (!c.truncate(fiber, order).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::string> conventions() {
  return {
      "J(f,g) = 2 X^{ab} d_a f d_b g + G^a (f d_a g - g d_a f)",
      "Lambda = 2X, Gamma = -G; [X, f]_SN = X(f)",
      "[a,b]_SJ = (-1)^{|a||b|} a o b - b o a",
      "m_k = P[..[J, I xi_1].., I xi_k]",
      "MC(-s) = sum_k (1/k!) m_k(-s,..,-s) with m_0 = P(J); graph y = s(x) coisotropic iff MC(-s) = 0",
      "pushforward by the fiber translation y -> y - s",
      "gauge flow d/dt s_t = sum_k (1/k!) m_{k+1}(s_t,..,s_t, lambda_t)",
      "tilde: k! X^I t^{1-k} on d_I, (k-1)! G^I t^{2-k} on d_I ^ d_t, f -> t f",
      "thickening: X = Pi/2, G = 0, w~^{-1} truncated at p-order K",
  };
}

Report cmd_check_jacobi(const StructureFile& f) {
  const VData& V = structure(f);
  Report r = start("check-jacobi", f);
  guarded(r, "jacobi", [&] {
    JacobiCheckResult j = jacobi_check(V.J);
    r.check("jacobi", j.holds, j.witness);
    r.check("classical-pair", j.classical.holds(), j.classical.witness);
    r.check("agreement", j.holds == j.classical.holds(),
            {"[J,J] vanishes: " + yes_no(j.holds), "classical equations hold: " + yes_no(j.classical.holds())});
  });
  return r;
}

Report cmd_brackets(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  if (o.max_arity < 1 || o.max_arity > 5) throw InputError("--max-arity must be between 1 and 5");
  Report r = start("brackets", f);
  const PatchPtr& patch = V.patch();
  Rng rng(o.seed);
  std::vector<Generator> gens;
  for (int a = 0; a < patch->d(); ++a) gens.push_back({"delta_" + patch->fiber()[a], NormalMultiSection::delta(patch, a)});
  for (int i = 0; i < std::min(patch->n(), 2); ++i)
    gens.push_back({patch->base()[i], NormalMultiSection::section(patch, Polynomial::variable(i))});
  Polynomial g;
  while (g.is_zero()) g = rng.polynomial(range(0, patch->n()), 2, 50);
  gens.push_back({to_string(g, patch->context()), NormalMultiSection::section(patch, g)});
  r.add("generators", std::to_string(gens.size()));

  guarded(r, "oracle-agreement", [&] {
    std::vector<std::string> mismatches;
    for (int k = 1; k <= o.max_arity; ++k) {
      int total = 0, nonzero = 0;
      std::string first;
      for (const auto& choice : multisets(static_cast<int>(gens.size()), k)) {
        std::string label;
        const auto args = pick(gens, choice, label);
        const NormalMultiSection m = derived_mk(V, args);
        const NormalMultiSection oracle = oracle_mk(V, args);
        ++total;
        if (!m.is_zero()) {
          ++nonzero;
          if (first.empty()) first = "m_" + std::to_string(k) + label + ": " + describe(m);
        }
        if (m != oracle) mismatches.push_back("m_" + std::to_string(k) + label + " - oracle: " + describe(m - oracle));
      }
      r.add("m_" + std::to_string(k), std::to_string(nonzero) + " of " + std::to_string(total) + " tuples nonzero");
      if (!first.empty()) r.add("m_" + std::to_string(k) + " witness", first);
    }
    r.check("oracle-agreement", mismatches.empty(), mismatches);
  });
  return r;
}

Report cmd_mc(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  const NormalMultiSection s = section_of(f, o);
  if (s.degree() != 1) throw InputError("the section must be a normal vector field");
  Report r = start("mc", f);
  r.add("section", describe(s));
  guarded(r, "pushforward", [&] {
    const NormalMultiSection mc = mc_series(V, s);
    r.add("MC(-s)", describe(mc));
    const int order = o.order >= 0 ? o.order : fiber_degree(V.J.op()) + 2;
    NormalMultiSection minus = -s;
    for (int k = 0; k <= order; ++k) {
      NormalMultiSection term = k == 0 ? project_P(V.J.op())
                                       : (1 / factorial(k)) * derived_mk(V, std::vector<NormalMultiSection>(k, minus));
      r.add("term " + std::to_string(k), describe(term));
    }
    const bool coisotropic = mc.is_zero();
    r.add("verdict", coisotropic ? "coisotropic" : "not coisotropic");
    const NormalMultiSection pushed = project_P(pushforward_fiber_affine(V.J.op(), s.components(), -1));
    r.check("pushforward", mc == pushed, {"difference: " + describe(mc - pushed)});
    const bool criterion = is_coisotropic_section(V, s.components());
    r.check("coisotropy-criterion", criterion == coisotropic,
            {"MC(-s) = 0: " + yes_no(coisotropic), "direct criterion: " + yes_no(criterion)});
  });
  return r;
}

Report cmd_formal(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  if (!f.series) throw InputError("no series given");
  Report r = start("formal", f);
  const int N = o.order >= 0 ? o.order : f.series->order();
  r.add("order", std::to_string(N));
  guarded(r, "formal-mc", [&] {
    FormalCheck c = verify_formal_mc(V, *f.series, N);
    r.add("first failing order", c.holds ? "none" : std::to_string(c.first_failing_order));
    r.check("formal-mc", c.holds, c.witness);
  });
  return r;
}

Report cmd_gauge(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  if (!f.family) throw InputError("no family given");
  Report r = start("gauge", f);
  const int N = o.order >= 0 ? o.order : f.family->s.order();
  r.add("order", std::to_string(N));
  r.add("time", f.family->time);
  guarded(r, "gauge-equation", [&] {
    GaugeCheck c = verify_gauge(V, *f.family, N);
    auto select = [&](const std::string& prefix) {
      std::vector<std::string> out;
      for (const auto& w : c.witness)
        if (w.rfind(prefix, 0) == 0) out.push_back(w);
      return out;
    };
    r.check("gauge-equation", c.equation_holds, select("equation"));
    r.check("gauge-samples", c.samples_hold, select("t = "));
    r.check("mc-at-samples", c.mc_at_samples, select("MC at"));
  });
  return r;
}

Report cmd_poissonize(const StructureFile& f, const Options& o) {
  const VData& V = structure(f);
  Report r = start("poissonize", f);
  guarded(r, "homogeneous", [&] {
    PoissonizationReport p = poissonization_report(V.J);
    r.add("poisson", yes_no(p.poisson));
    r.add("jacobi", yes_no(p.jacobi));
    r.add("zero section coisotropic", yes_no(p.base_coisotropic));
    r.add("lift coisotropic", yes_no(p.lift_coisotropic));
    r.check("homogeneous", p.homogeneous, p.witness);
    r.check("poisson-iff-jacobi", p.consistent(), p.witness);
    r.check("coisotropy-transport", p.base_coisotropic == p.lift_coisotropic, p.witness);
  });
  guarded(r, "embedding", [&] {
    Rng rng(o.seed);
    std::vector<std::string> witness;
    const int samples = 5;
    for (int i = 0; i < samples; ++i) {
      const MultiOperator a = random_operator(V.patch(), static_cast<int>(rng.uniform(0, 2)), rng);
      const MultiOperator b = random_operator(V.patch(), static_cast<int>(rng.uniform(0, 2)), rng);
      const MultiVector lhs = tilde_op(sj_bracket(a, b)), rhs = sn_bracket(tilde_op(a), tilde_op(b));
      if (lhs != rhs)
        for (const auto& s : (lhs - rhs).describe(tilde_context(*V.patch())))
          witness.push_back("sample " + std::to_string(i) + ": " + s);
    }
    r.add("embedding samples", std::to_string(samples));
    r.check("embedding", witness.empty(), witness);
  });
  return r;
}

Report cmd_ohpark(const StructureFile& f, const Options& o) {
  if (!f.presymplectic) throw InputError("no presymplectic block given");
  const PreSympData& data = *f.presymplectic;
  const int K = f.truncation;
  Report r = start("ohpark", f);
  r.structure = "presymplectic n=" + std::to_string(data.n) + " d=" + std::to_string(data.d);
  r.add("K", std::to_string(K));
  const bool exact = w_inverse(data).exact;
  r.add("inverse", exact ? "exact" : "frozen at the reference point");
  std::vector<std::string> ref;
  for (const auto& c : data.reference) ref.push_back(to_string(c));
  r.add("reference", "(" + join(ref, ", ") + ")");

  guarded(r, "cross-check", [&] {
    const ThickenedPoisson T = thickening_poisson(data, K);
    r.check("zero-section-coisotropic", project_P(T.V.J.op()).is_zero(), {describe(project_P(T.V.J.op()))});
    if (exact)
      r.check("self-bracket", vanishes_through(sj_bracket(T.V.J.op(), T.V.J.op()), K - 1),
              {"[Pi,Pi] has terms of p-order below " + std::to_string(K)});
    else
      r.add("self-bracket", "skipped, W^{-1} is frozen");

    Rng rng(o.seed);
    std::vector<Generator> gens;
    for (int i = 0; i < data.n; ++i) gens.push_back({"d" + data.patch->base()[i], NormalMultiSection::delta(data.patch, i)});
    gens.push_back({data.patch->base()[data.u(0)], NormalMultiSection::section(data.patch, Polynomial::variable(data.u(0)))});
    gens.push_back({data.patch->base()[0], NormalMultiSection::section(data.patch, Polynomial::variable(0))});
    Polynomial g;
    while (g.is_zero()) g = rng.polynomial(range(0, data.n + data.d), 2, 50);
    gens.push_back({to_string(g, data.patch->context()), NormalMultiSection::section(data.patch, g)});

    std::vector<std::string> mismatches;
    const int top = std::min(4, K + 1);
    for (int k = 1; k <= top; ++k) {
      int total = 0, nonzero = 0;
      for (const auto& choice : multisets(static_cast<int>(gens.size()), k)) {
        std::string label;
        const auto args = pick(gens, choice, label);
        NormalMultiSection lhs = ohpark_mk(data, args, K), rhs = derived_mk(T.V, args);
        if (!exact) {
          lhs = at_reference(data, lhs);
          rhs = at_reference(data, rhs);
        }
        ++total;
        nonzero += !lhs.is_zero();
        if (lhs != rhs) mismatches.push_back("m_" + std::to_string(k) + label + " - derived: " + describe(lhs - rhs));
      }
      r.add("m_" + std::to_string(k), std::to_string(nonzero) + " of " + std::to_string(total) + " tuples nonzero");
    }
    r.check("cross-check", mismatches.empty(), mismatches);
  });
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coisotropic deformation toolkit for Jacobi structures"};
  app.require_subcommand(1);
  Options o;
  std::string out_path;
  bool timings = false;
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--out", out_path, "write a JSON report to this file");
  app.add_flag("--timings", timings, "print elapsed time to stderr");

  std::string file;
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", file, "structure file")->required();
    s->fallthrough();
    subs[name] = s;
    return s;
  };
  sub("check-jacobi", "check [J,J] = 0 and the classical equations");
  sub("brackets", "derived brackets against the closed formulas")->add_option("--max-arity", o.max_arity);
  auto* mc = sub("mc", "Maurer-Cartan series of a section");
  mc->add_option("--section", o.section, "fiber=expression, comma separated");
  mc->add_option("--order", o.order, "list terms up to this arity");
  sub("formal", "formal Maurer-Cartan series")->add_option("--order", o.order);
  sub("gauge", "gauge family along a Hamiltonian flow")->add_option("--order", o.order);
  sub("poissonize", "homogeneous Poisson structure on the symplectization");
  sub("ohpark", "closed multibrackets of a presymplectic model against the thickening");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  try {
    const StructureFile f = load_structure(file);
    if (subs["check-jacobi"]->parsed()) report = cmd_check_jacobi(f);
    else if (subs["brackets"]->parsed()) report = cmd_brackets(f, o);
    else if (subs["mc"]->parsed()) report = cmd_mc(f, o);
    else if (subs["formal"]->parsed()) report = cmd_formal(f, o);
    else if (subs["gauge"]->parsed()) report = cmd_gauge(f, o);
    else if (subs["poissonize"]->parsed()) report = cmd_poissonize(f, o);
    else report = cmd_ohpark(f, o);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  out << report.text();
  if (!out_path.empty()) {
    std::ofstream json(out_path);
    if (!json) {
      err << "cannot write " << out_path << "\n";
      return 2;
    }
    json << report.json();
  }
  if (timings)
    err << "elapsed: "
        << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count()
        << " ms\n";
  return report.exit_code();
}

}  // namespace coiso::cli
