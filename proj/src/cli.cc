#include "twoterm/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoterm/dynamics.h"
#include "twoterm/errors.h"
#include "twoterm/io.h"
#include "twoterm/multigraph.h"
#include "twoterm/reliability.h"
#include "twoterm/rootfinder.h"
#include "twoterm/stability.h"
#include "twoterm/sweep.h"

namespace twoterm {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string family;
  std::string coeffs;
  int n = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  std::optional<std::string> s;
  std::optional<std::string> t;
  std::string cache;
  std::string format = "text";
  std::string out;
  std::string svg;
  bool factored = false;

  std::string gadget;
  std::string orientation = "lower-to-u";

  int depth = 10;
  std::size_t budget = 200000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int max_iter = 1000;

  double re = 0;
  double im = 0;
  double eps = 0.05;

  std::string corpus;
};

std::string Fmt(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string Fmt(std::complex<double> z, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ")
    << std::abs(z.imag()) << "i";
  return s.str();
}

json ComplexJson(std::complex<double> z) { return {z.real(), z.imag()}; }

// Where a command's input comes from.
struct Source {
  std::optional<Network> network;
  std::optional<FamilySpec> family;
  std::optional<Polynomial> polynomial;
  std::string label;
};

FamilySpec FamilyFromOptions(const Options& o) {
  FamilySpec spec;
  spec.family = ParseFamily(o.family);
  spec.n = o.n;
  spec.k = o.k;
  spec.l = o.l;
  spec.m = o.m;
  spec.Validate();
  return spec;
}

Network WithTerminals(Network network, const Options& o) {
  if (!o.s && !o.t) return network;
  TerminalPair terminals = network.terminals;
  if (o.s) terminals.s = *o.s;
  if (o.t) terminals.t = *o.t;
  return MakeNetwork(network.graph, terminals);
}

Source LoadSource(const Options& o, bool allow_coeffs) {
  int given = !o.graph.empty() + !o.family.empty() + !o.coeffs.empty();
  if (given != 1) {
    throw UsageError(allow_coeffs
                         ? "give exactly one of --graph, --family, --coeffs"
                         : "give exactly one of --graph, --family");
  }
  Source source;
  if (!o.coeffs.empty()) {
    if (!allow_coeffs) throw UsageError("--coeffs is not accepted here");
    std::vector<std::string> parts;
    std::stringstream in(o.coeffs);
    for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
    source.polynomial = Polynomial::FromCoefficientStrings(parts);
    source.label = source.polynomial->ToString();
    return source;
  }
  if (!o.graph.empty()) {
    source.network = WithTerminals(ReadGraphJson(o.graph), o);
    source.label = o.graph;
    return source;
  }
  source.family = FamilyFromOptions(o);
  source.network = WithTerminals(BuildFamily(*source.family), o);
  source.label = source.family->Describe();
  return source;
}

// Reliability of the source, using the solver for explicit graphs and the
// closed form for unmodified families.
Polynomial SourcePolynomial(const Source& source, const Options& o,
                            ReliabilitySolver& solver) {
  if (source.polynomial) return *source.polynomial;
  if (source.family && !o.s && !o.t) return FamilyReliability(*source.family);
  return solver.Compute(*source.network);
}

std::string Factored(const Polynomial& f) {
  const int v = f.Valuation();
  if (v <= 0) return f.ToString();
  const Polynomial rest = f.ShiftDown(v);
  std::string power = v == 1 ? "p" : "p^" + std::to_string(v);
  if (rest == Polynomial::Constant(1)) return power;
  return power + "*(" + rest.ToString() + ")";
}

json PolynomialJson(const Polynomial& f) {
  return {{"polynomial", f.ToString()},
          {"coefficients", f.CoefficientStrings()},
          {"degree", f.Degree()}};
}

void Emit(std::ostream& out, const Options& o, const json& doc,
          const std::string& text) {
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

// Writes to --out when given, otherwise to the console.
void Deliver(std::ostream& out, const Options& o, const std::string& content) {
  if (o.out.empty()) {
    out << content;
  } else {
    WriteFile(o.out, content);
  }
}

int Compute(const Options& o, ReliabilitySolver& solver, std::ostream& out) {
  Source source = LoadSource(o, false);
  Polynomial f = SourcePolynomial(source, o, solver);
  json doc = PolynomialJson(f);
  doc["source"] = source.label;
  if (o.factored) doc["factored"] = Factored(f);
  if (!f.IsZero()) {
    const int edges = static_cast<int>(source.network->graph.Size());
    FForm form = ToFForm(f, edges);
    doc["fform"] = {{"edges", edges}};
    std::vector<std::string> counts;
    for (const auto& c : form.counts) counts.push_back(c.get_str());
    doc["fform"]["counts"] = counts;
  }
  std::string text = (o.factored ? Factored(f) : f.ToString()) + "\n";
  Emit(out, o, doc, text);
  return 0;
}

int Roots(const Options& o, ReliabilitySolver& solver, std::ostream& out) {
  Source source = LoadSource(o, true);
  Polynomial f = SourcePolynomial(source, o, solver);
  if (f.IsZero()) throw DomainError("terminals are disconnected; reliability 0");
  RootSet roots = AllRoots(f);
  std::string s = source.network ? source.network->terminals.s : "";
  std::string t = source.network ? source.network->terminals.t : "";
  if (o.format == "json") {
    json doc = PolynomialJson(f);
    doc["zero_multiplicity"] = roots.zero_multiplicity;
    doc["reconstruction_error"] = roots.reconstruction_error;
    doc["roots"] = json::array();
    for (const auto& r : roots.roots) {
      doc["roots"].push_back({{"re", r.value.real()},
                              {"im", r.value.imag()},
                              {"residual", r.residual},
                              {"multiplicity", r.multiplicity}});
    }
    Deliver(out, o, doc.dump(2) + "\n");
  } else {
    Deliver(out, o, RootsCsvHeader() + RootsCsvRows("0", s, t, roots));
  }
  if (!o.svg.empty()) WriteFile(o.svg, RenderSvg(roots.Expanded(), source.label));
  return 0;
}

int FamilyCommand(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("family needs --family");
  FamilySpec spec = FamilyFromOptions(o);
  Polynomial f = FamilyReliability(spec);
  json doc = PolynomialJson(f);
  doc["family"] = spec.Describe();
  Emit(out, o, doc, spec.Describe() + ": " + f.ToString() + "\n");
  if (!o.out.empty()) WriteFile(o.out, WriteGraphJson(BuildFamily(spec)));
  return 0;
}

int Substitute(const Options& o, ReliabilitySolver& solver, std::ostream& out) {
  if (o.gadget.empty()) throw UsageError("substitute needs --gadget");
  Source source = LoadSource(o, false);
  Network gadget = ReadGraphJson(o.gadget);
  GadgetOrientation orientation = o.orientation == "lower-to-v"
                                       ? GadgetOrientation::kLowerToV
                                       : GadgetOrientation::kLowerToU;
  Network result = SubstituteGadget(*source.network, gadget, orientation);
  Polynomial direct = solver.Compute(result);
  Polynomial composed = ComposeGadget(*source.network, gadget);
  const bool identity = direct == composed;
  json doc = PolynomialJson(direct);
  doc["vertices"] = result.graph.Order();
  doc["edges"] = result.graph.Size();
  doc["composition"] = composed.ToString();
  doc["identity_holds"] = identity;
  std::ostringstream text;
  text << "G[H]: " << result.graph.Order() << " vertices, "
       << result.graph.Size() << " edges\n"
       << "reliability: " << direct.ToString() << "\n"
       << "composition: " << composed.ToString() << "\n"
       << "identity: " << (identity ? "holds" : "FAILS") << "\n";
  Emit(out, o, doc, text.str());
  if (!o.out.empty()) WriteFile(o.out, WriteGraphJson(result));
  return identity ? 0 : 1;
}

InverseOrbitOptions OrbitOptions(const Options& o) {
  InverseOrbitOptions options;
  options.depth = o.depth;
  options.budget = o.budget;
  options.seed = o.seed;
  options.threads = o.threads;
  return options;
}

int AttractorCommand(const Options& o, std::ostream& out) {
  Source source = LoadSource(o, false);
  AttractorReport report = Attractor(*source.network, OrbitOptions(o));
  if (!o.out.empty()) {
    std::ofstream csv(o.out, std::ios::binary);
    if (!csv) throw InputError("cannot write " + o.out);
    WritePointCloudCsv(csv, report.cloud);
  }
  if (!o.svg.empty()) {
    std::vector<std::complex<double>> points;
    for (const auto& p : report.cloud.points) points.push_back(p.z);
    WriteFile(o.svg, RenderSvg(points, "attractor of " + source.label));
  }
  json doc = PolynomialJson(report.reliability);
  doc["terminal_path"] = report.terminal_path;
  doc["origin"] = {{"kind", OriginKindName(report.origin.kind)},
                   {"multiplier", report.origin.multiplier.get_str()}};
  doc["structure"] = report.structure;
  doc["points"] = report.cloud.points.size();
  doc["depth"] = report.cloud.depth;
  doc["budget_hit"] = report.cloud.budget_hit;
  doc["dropped"] = report.cloud.dropped;
  std::ostringstream text;
  text << "reliability: " << report.reliability.ToString() << "\n"
       << "origin: " << OriginKindName(report.origin.kind)
       << " (multiplier " << report.origin.multiplier.get_str() << ")\n"
       << "structure: " << report.structure << "\n"
       << "points: " << report.cloud.points.size() << " at depth "
       << report.cloud.depth << (report.cloud.budget_hit ? " (budget hit)" : "")
       << ", dropped " << report.cloud.dropped << "\n";
  Emit(out, o, doc, text.str());
  return 0;
}

int ConnectivityCommand(const Options& o, ReliabilitySolver& solver,
                        std::ostream& out) {
  Source source = LoadSource(o, true);
  Polynomial f = SourcePolynomial(source, o, solver);
  ConnectivityVerdict verdict = JuliaConnectivity(f, o.max_iter);
  json doc = PolynomialJson(f);
  doc["verdict"] = ConnectivityName(verdict.verdict);
  doc["critical_orbits"] = json::array();
  std::ostringstream text;
  text << "polynomial: " << f.ToString() << "\n"
       << "verdict: " << ConnectivityName(verdict.verdict) << "\n";
  for (const auto& orbit : verdict.orbits) {
    const auto& v = orbit.verdict;
    doc["critical_orbits"].push_back(
        {{"point", ComplexJson(orbit.point)},
         {"multiplicity", orbit.multiplicity},
         {"outcome", OrbitOutcomeName(v.outcome)},
         {"step", v.step},
         {"max_modulus", v.max_modulus_seen},
         {"escape_radius", v.escape_radius},
         {"certified", v.escape_certified},
         {"overflow", v.overflow}});
    text << "  critical point " << Fmt(orbit.point);
    if (orbit.multiplicity > 1) text << " (x" << orbit.multiplicity << ")";
    text << ": " << OrbitOutcomeName(v.outcome) << " at step " << v.step
         << ", max |z| " << Fmt(v.max_modulus_seen, 6);
    if (v.outcome == OrbitOutcome::kEscaped) {
      text << (v.escape_certified ? ", certified" : ", not certified");
    }
    text << "\n";
  }
  Emit(out, o, doc, text.str());
  return 0;
}

json ReportJson(const HermiteBiehlerReport& r) {
  return {{"weakly_stable", r.weakly_stable},
          {"failed", HermiteBiehlerCheckName(r.failed)},
          {"failed_part", r.failed_part},
          {"even", r.even.ToString("x")},
          {"odd", r.odd.ToString("x")},
          {"detail", r.detail}};
}

std::string ReportText(const HermiteBiehlerReport& r) {
  std::ostringstream text;
  text << "even part E(x): " << r.even.ToString("x") << "\n"
       << "odd part O(x): " << r.odd.ToString("x") << "\n"
       << "weakly stable: " << (r.weakly_stable ? "yes" : "no") << "\n";
  if (!r.weakly_stable) {
    text << "failed check: " << HermiteBiehlerCheckName(r.failed) << " ("
         << r.detail << ")\n";
  }
  return text.str();
}

int Stability(const Options& o, ReliabilitySolver& solver, std::ostream& out) {
  if (o.family == "cycle" && o.graph.empty() && o.coeffs.empty()) {
    CycleWitness w = CycleLeftHalfplaneWitness(o.n, o.k);
    json doc = {{"n", w.n},
                {"k", w.k},
                {"parity", CycleParityName(w.parity)},
                {"g", w.g.ToString()},
                {"f", w.f.ToString()},
                {"stability", ReportJson(w.stability)},
                {"numeric_agrees", w.numeric_agrees}};
    doc["left_roots"] = json::array();
    for (auto z : w.left_roots) doc["left_roots"].push_back(ComplexJson(z));
    std::ostringstream text;
    text << "cycle n=" << w.n << " k=" << w.k << " ("
         << CycleParityName(w.parity) << ")\n"
         << "g(p) = " << w.g.ToString() << "\n"
         << "f(p) = " << w.f.ToString() << "\n"
         << ReportText(w.stability);
    if (!w.left_roots.empty()) {
      auto leftmost = *std::min_element(
          w.left_roots.begin(), w.left_roots.end(),
          [](auto a, auto b) { return a.real() < b.real(); });
      text << "left half-plane roots of g: " << w.left_roots.size()
           << ", leftmost " << Fmt(leftmost) << "\n";
    } else {
      text << "left half-plane roots of g: none\n";
    }
    text << "numeric cross-check: " << (w.numeric_agrees ? "agrees" : "DISAGREES")
         << "\n";
    Emit(out, o, doc, text.str());
    return 0;
  }
  Source source = LoadSource(o, true);
  Polynomial f = SourcePolynomial(source, o, solver);
  HermiteBiehlerReport report = HermiteBiehler(f);
  json doc = PolynomialJson(f);
  doc["stability"] = ReportJson(report);
  Emit(out, o, doc, "polynomial: " + f.ToString() + "\n" + ReportText(report));
  return 0;
}

// |R(theta)(R(B_m)(z))| in quad precision.
double ThetaBundleResidual(std::complex<double> z, int l, int k, int m) {
  const QuadComplex one(1);
  const QuadComplex w = one - pow(one - QuadComplex(Quad(z.real()), Quad(z.imag())), m);
  return static_cast<double>(abs(one - pow(one - pow(w, l), k)));
}

int Density(const Options& o, std::ostream& out) {
  const std::complex<double> target(o.re, o.im);
  ThetaRootHit hit = FindRootNearDiskZero(target, o.eps);
  json doc = {{"target", ComplexJson(target)},
              {"eps", o.eps},
              {"found", hit.found},
              {"l", hit.l},
              {"k", hit.k},
              {"j", hit.j},
              {"root", ComplexJson(hit.root)},
              {"distance", hit.distance},
              {"residual", hit.residual}};
  std::ostringstream text;
  text << (hit.found ? "found" : "not found") << ": theta l=" << hit.l
       << " k=" << hit.k << " j=" << hit.j << " root " << Fmt(hit.root)
       << " distance " << Fmt(hit.distance, 12) << " residual "
       << Fmt(hit.residual, 3) << "\n";
  bool lifted_ok = true;
  if (hit.found && o.m > 0) {
    // Roots of R(theta[B_m]) over the theta root, near the disk at 1. The
    // composition is evaluated nested; expanded it has degree l*k*m.
    doc["lifted"] = json::array();
    text << "lifted through B_" << o.m << " (degree " << hit.l * hit.k * o.m
         << "):\n";
    for (auto z : LiftRootsDiskOne(hit.root, o.m)) {
      const double residual = ThetaBundleResidual(z, hit.l, hit.k, o.m);
      lifted_ok = lifted_ok && residual < 1e-10;
      doc["lifted"].push_back({{"root", ComplexJson(z)}, {"residual", residual}});
      text << "  " << Fmt(z) << " residual " << Fmt(residual, 3) << "\n";
    }
  }
  Emit(out, o, doc, text.str());
  return hit.found && lifted_ok ? 0 : 1;
}

int Sweep(const Options& o, ReliabilitySolver& solver, std::ostream& out,
          std::ostream& err) {
  std::ifstream in(o.corpus, std::ios::binary);
  if (!in) throw InputError("cannot read " + o.corpus);
  SweepOptions options;
  options.threads = o.threads;
  if (o.s || o.t) {
    if (!o.s || !o.t) throw UsageError("sweep needs both --s and --t");
    try {
      options.terminals = {std::stoi(*o.s), std::stoi(*o.t)};
    } catch (const std::exception&) {
      throw UsageError("sweep terminals must be vertex indices");
    }
  }
  std::ostringstream csv;
  SweepSummary summary = SweepGraph6(in, csv, solver, options, err);
  Deliver(out, o, csv.str());
  if (!o.svg.empty()) {
    WriteFile(o.svg, RenderSvg(summary.cloud, "two-terminal roots of " +
                                                  std::filesystem::path(o.corpus)
                                                      .filename()
                                                      .string()));
  }
  std::ostream& report = o.out.empty() ? err : out;
  report << "graphs: " << summary.graphs << ", malformed: " << summary.malformed
         << ", tasks: " << summary.tasks
         << ", disconnected: " << summary.disconnected
         << ", distinct polynomials: " << summary.distinct_polynomials
         << ", roots: " << summary.cloud.size()
         << ", unconverged: " << summary.unconverged << "\n";
  return 0;
}

int Census(const Options& o, ReliabilitySolver& solver, std::ostream& out) {
  Source source = LoadSource(o, true);
  Polynomial f = SourcePolynomial(source, o, solver);
  RealRootCensus c = CensusRealRoots(f);
  json doc = PolynomialJson(f);
  doc["census"] = {{"positive", c.positive},
                   {"negative", c.negative},
                   {"zero", c.zero},
                   {"positive_bound", c.positive_bound},
                   {"negative_bound", c.negative_bound},
                   {"total_real", c.TotalReal()},
                   {"all_real", c.AllReal()}};
  std::ostringstream text;
  text << "polynomial: " << f.ToString() << "\n"
       << "degree " << c.degree << ": " << c.positive << " positive (at most "
       << c.positive_bound << "), " << c.negative << " negative (at most "
       << c.negative_bound << "), " << c.zero << " at zero\n"
       << "real roots: " << c.TotalReal() << " of " << c.degree
       << (c.AllReal() ? " (all real)" : " (not all real)") << "\n";
  Emit(out, o, doc, text.str());
  return 0;
}

void AddSourceFlags(CLI::App* cmd, Options& o, bool coeffs) {
  cmd->add_option("--graph", o.graph, "graph JSON file");
  cmd->add_option("--family", o.family, "closed-form family")
      ->check(CLI::IsMember({"cycle", "theta", "bundle", "path"}));
  cmd->add_option("--n", o.n, "cycle order");
  cmd->add_option("--k", o.k, "cycle distance or theta path count");
  cmd->add_option("--l", o.l, "theta or path length");
  cmd->add_option("--m", o.m, "bundle size");
  cmd->add_option("--s", o.s, "source terminal id");
  cmd->add_option("--t", o.t, "target terminal id");
  if (coeffs) {
    cmd->add_option("--coeffs", o.coeffs,
                    "ascending rational coefficients, comma separated");
  }
}

void AddFormat(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Two-terminal reliability polynomials, roots and dynamics",
               "twoterm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache", o.cache, "memo cache directory");

  auto* compute = app.add_subcommand("compute", "reliability polynomial");
  AddSourceFlags(compute, o, false);
  AddFormat(compute, o);
  compute->add_flag("--factored", o.factored, "print p^k*(deflated part)");

  auto* roots = app.add_subcommand("roots", "complex roots as CSV");
  AddSourceFlags(roots, o, true);
  AddFormat(roots, o);
  roots->add_option("--out", o.out);
  roots->add_option("--svg", o.svg);

  auto* family = app.add_subcommand("family", "closed-form family reliability");
  AddSourceFlags(family, o, false);
  AddFormat(family, o);
  family->add_option("--out", o.out, "write the family graph as JSON");

  auto* substitute = app.add_subcommand("substitute", "gadget replacement G[H]");
  AddSourceFlags(substitute, o, false);
  AddFormat(substitute, o);
  substitute->add_option("--gadget", o.gadget, "gadget graph JSON")->required();
  substitute->add_option("--orientation", o.orientation)
      ->check(CLI::IsMember({"lower-to-u", "lower-to-v"}));
  substitute->add_option("--out", o.out, "write G[H] as JSON");

  auto* attractor = app.add_subcommand("attractor", "inverse orbit of 0");
  AddSourceFlags(attractor, o, false);
  AddFormat(attractor, o);
  attractor->add_option("--depth", o.depth)->check(CLI::NonNegativeNumber);
  attractor->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
  attractor->add_option("--seed", o.seed);
  attractor->add_option("--threads", o.threads);
  attractor->add_option("--out", o.out, "point cloud CSV");
  attractor->add_option("--svg", o.svg);

  auto* connectivity =
      app.add_subcommand("connectivity", "Julia set connectivity");
  AddSourceFlags(connectivity, o, true);
  AddFormat(connectivity, o);
  connectivity->add_option("--max-iter", o.max_iter)->check(CLI::PositiveNumber);

  auto* stability = app.add_subcommand("stability", "Hermite-Biehler test");
  AddSourceFlags(stability, o, true);
  AddFormat(stability, o);

  auto* density = app.add_subcommand("density", "theta root near a target");
  AddFormat(density, o);
  density->add_option("--re", o.re)->required();
  density->add_option("--im", o.im)->required();
  density->add_option("--eps", o.eps)->check(CLI::PositiveNumber);
  density->add_option("--m", o.m, "lift through a bundle of m edges")
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "roots of a graph6 corpus");
  sweep->add_option("corpus", o.corpus, "graph6 file")->required();
  sweep->add_option("--s", o.s);
  sweep->add_option("--t", o.t);
  sweep->add_option("--threads", o.threads);
  sweep->add_option("--out", o.out, "roots CSV");
  sweep->add_option("--svg", o.svg);

  auto* census = app.add_subcommand("census", "real root census");
  AddSourceFlags(census, o, true);
  AddFormat(census, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    ReliabilitySolver solver;
    std::filesystem::path cache_file;
    if (!o.cache.empty()) {
      std::filesystem::create_directories(o.cache);
      cache_file = std::filesystem::path(o.cache) / "memo.bin";
      LoadMemoCache(solver, cache_file);
    }
    int code = 0;
    if (*compute) code = Compute(o, solver, out);
    if (*roots) code = Roots(o, solver, out);
    if (*family) code = FamilyCommand(o, out);
    if (*substitute) code = Substitute(o, solver, out);
    if (*attractor) code = AttractorCommand(o, out);
    if (*connectivity) code = ConnectivityCommand(o, solver, out);
    if (*stability) code = Stability(o, solver, out);
    if (*density) code = Density(o, out);
    if (*sweep) code = Sweep(o, solver, out, err);
    if (*census) code = Census(o, solver, out);
    if (!cache_file.empty()) SaveMemoCache(solver, cache_file);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twoterm
