#include "gbfam/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gbfam/poly_io.hpp"

namespace gbfam {

namespace {

const std::pair<const char*, Command> kCommands[] = {
    {"gb", Command::Gb},
    {"initial", Command::Initial},
    {"coeffs", Command::Coeffs},
    {"contract", Command::Contract},
    {"flat-locus", Command::FlatLocus},
    {"good-point", Command::GoodPoint},
    {"specialize", Command::Specialize},
    {"iso-locus", Command::IsoLocus},
    {"finite-locus", Command::FiniteLocus},
    {"saturate", Command::Saturate},
    {"quolem-check", Command::QuolemCheck},
    {"mono-coeffs", Command::MonoCoeffs},
    {"mono-fiber", Command::MonoFiber},
    {"mono-diagram", Command::MonoDiagram},
};

using json = nlohmann::ordered_json;

json ideal_json(const IdealHandle& handle) {
  json out = json::array();
  for (const auto& g : handle.display_generators()) out.push_back(poly_str(g));
  return out;
}

std::string resolve_ideal_name(const Session& session,
                               const CommandOptions& opts) {
  if (!opts.ideal.empty()) return opts.ideal;
  if (session.ideal_names.size() == 1) return session.ideal_names.front();
  if (session.ideal_names.empty())
    throw analysis_error("the session defines no ideal");
  throw analysis_error("several ideals defined; pick one with --ideal");
}

const FamilyIdeal& family_ideal(Session& session, const CommandOptions& opts) {
  if (!session.family)
    throw analysis_error("this command needs a Q or Fp family ring");
  std::string name = resolve_ideal_name(session, opts);
  auto it = session.ideals.find(name);
  if (it == session.ideals.end())
    throw analysis_error("unknown ideal '" + name + "'");
  return it->second;
}

const MonomialIdeal& mono_ideal(Session& session, const CommandOptions& opts) {
  if (!session.mono_ring)
    throw analysis_error("this command needs a Z or Zmod base ring");
  std::string name = resolve_ideal_name(session, opts);
  auto it = session.mono_ideals.find(name);
  if (it == session.mono_ideals.end())
    throw analysis_error("unknown ideal '" + name + "'");
  return it->second;
}

std::vector<std::uint64_t> parse_window(const std::string& text,
                                        std::size_t rank) {
  std::vector<std::uint64_t> extents;
  std::string cur;
  for (char c : text + "x") {
    if (c == 'x' || c == 'X') {
      if (cur.empty()) throw analysis_error("bad window '" + text + "'");
      try {
        extents.push_back(std::stoull(cur));
      } catch (const std::exception&) {
        throw analysis_error("bad window '" + text + "'");
      }
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw analysis_error("bad window '" + text + "'");
    }
  }
  if (extents.size() == 1 && rank > 1) extents.resize(rank, extents[0]);
  if (extents.size() != rank)
    throw analysis_error("window rank does not match the main variables");
  for (auto e : extents)
    if (e == 0) throw analysis_error("window extents must be positive");
  return extents;
}

// Smallest window containing every recorded exponent, at least 2 wide.
std::vector<std::uint64_t> fitted_window(const std::vector<Exponent>& exps,
                                         std::span<const int> vars) {
  std::vector<std::uint64_t> extents(vars.size(), 2);
  for (const auto& e : exps)
    for (std::size_t i = 0; i < vars.size(); ++i)
      extents[i] = std::max(extents[i],
                            e[static_cast<std::size_t>(vars[i])] + 1);
  return extents;
}

RationalPoint resolve_point(const Session& session, const std::string& text) {
  if (text.empty()) throw analysis_error("this command needs --point");
  auto it = session.points.find(text);
  if (it != session.points.end()) return it->second;
  auto values = parse_assignment_text(text, *session.family->full());
  return RationalPoint(*session.family, std::move(values));
}

PrimeSpec resolve_prime(const Session& session, const std::string& text) {
  if (text.empty()) throw analysis_error("this command needs --prime");
  auto it = session.primes.find(text);
  if (it != session.primes.end()) return it->second;
  auto gens = parse_ideal_text(text, session.family->full());
  std::vector<Polynomial> in_params;
  for (const auto& g : gens) {
    for (const auto& t : g.terms())
      if (!t.exp.supported_on(session.family->full()->params))
        throw analysis_error("prime generator " + poly_str(g) +
                             " involves a main variable");
    in_params.push_back(transport(g, session.family->params()));
  }
  return PrimeSpec(*session.family, std::move(in_params));
}

json locus_json(const char* label_key, const LocusReport& report) {
  json parts = json::array();
  for (const auto& [label, ideal] : report.parts) {
    json entry;
    entry[label_key] = label;
    entry["ideal"] = ideal_json(ideal);
    parts.push_back(std::move(entry));
  }
  json out;
  out["parts"] = std::move(parts);
  out["combined"] = report.combined ? ideal_json(*report.combined)
                                    : json::array();
  return out;
}

json cmd_gb(const FamilyIdeal& I) {
  json out;
  json basis = json::array();
  for (const auto& g : I.basis().elements) basis.push_back(poly_str(g));
  out["basis"] = std::move(basis);
  return out;
}

json cmd_initial(const FamilyIdeal& I) {
  RelativeInitial R = relative_initial(I);
  json gens = json::array();
  for (const auto& g : R.generators()) {
    json entry;
    entry["monomial"] = monomial_str(*I.family().full(), g.xexp);
    entry["coefficient"] = poly_str(g.coeff);
    entry["display"] = initial_gen_str(g.coeff, *I.family().full(), g.xexp);
    gens.push_back(std::move(entry));
  }
  json out;
  out["generators"] = std::move(gens);
  return out;
}

json cmd_coeffs(const FamilyIdeal& I, const CommandOptions& opts) {
  const auto& fam = I.family();
  std::vector<std::uint64_t> extents;
  if (opts.window.empty()) {
    RelativeInitial R = relative_initial(I);
    extents = fitted_window(R.distinct_exponents(), fam.full()->mains);
  } else {
    extents = parse_window(opts.window, fam.full()->mains.size());
  }
  CoefficientTable table = coefficient_table(I, extents);
  json out;
  out["window"] = extents;
  json names = json::array();
  for (int v : fam.full()->mains)
    names.push_back(fam.full()->names[static_cast<std::size_t>(v)]);
  out["variables"] = std::move(names);
  json entries = json::array();
  for (const auto& e : table.entries) {
    json entry;
    entry["monomial"] = monomial_str(*fam.full(), e.xexp);
    entry["ideal"] = ideal_json(e.ideal);
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out;
}

json cmd_contract(const FamilyIdeal& I) {
  json out;
  out["generators"] = ideal_json(base_contraction(I));
  return out;
}

json cmd_flat_locus(const FamilyIdeal& I) {
  LocusReport report = flat_locus(I);
  json out = locus_json("monomial", report);
  out["witness"] =
      report.witness ? json(poly_str(*report.witness)) : json(nullptr);
  out["conclusive"] = report.conclusive;
  out["note"] = report.note;
  return out;
}

json cmd_good_point(const FamilyIdeal& I, const PrimeSpec& p) {
  GoodPointVerdict verdict = good_point(I, p);
  json out;
  out["prime"] = ideal_json(p.handle());
  out["trivial"] = verdict.trivial;
  json verdicts = json::array();
  for (const auto& e : verdict.entries) {
    json entry;
    entry["monomial"] = monomial_str(*I.family().full(), e.xexp);
    entry["verdict"] = verdict_name(e.verdict);
    verdicts.push_back(std::move(entry));
  }
  out["verdicts"] = std::move(verdicts);
  out["good"] = verdict.good;
  out["note"] = "conditional on the given ideal being prime";
  return out;
}

json cmd_specialize(const FamilyIdeal& I, const RationalPoint& pt) {
  SpecializationReport report = specialization_check(I, pt);
  const auto& fam = I.family();
  json out;
  out["point"] = pt.str(fam);
  json predicted = json::array(), actual = json::array();
  for (const auto& e : report.predicted)
    predicted.push_back(monomial_str(*fam.mains(), e));
  for (const auto& e : report.actual)
    actual.push_back(monomial_str(*fam.mains(), e));
  out["predicted"] = std::move(predicted);
  out["actual"] = std::move(actual);
  out["contained"] = report.contained;
  out["equal"] = report.equal;
  return out;
}

json cmd_saturate(Session& session, const FamilyIdeal& I,
                  const CommandOptions& opts) {
  if (opts.element.empty())
    throw analysis_error("saturate needs --element \"<poly in k[a]>\"");
  Polynomial s =
      parse_polynomial_text(opts.element, session.family->full());
  for (const auto& t : s.terms())
    if (!t.exp.supported_on(session.family->full()->params))
      throw analysis_error("localizing element must lie in k[a]");
  FamilyIdeal contracted = localize_contract(I, s);
  json out;
  out["element"] = poly_str(s);
  out["generators"] = ideal_json(contracted.handle());
  return out;
}

json cmd_quolem(const FamilyIdeal& I) {
  QuolemReport report = quotient_extension_check(I);
  json out;
  out["equal"] = report.equal;
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry;
    entry["monomial"] = monomial_str(*I.family().full(), e.xexp);
    entry["equal"] = e.equal;
    entry["lhs"] = e.lhs;
    entry["rhs"] = e.rhs;
    entries.push_back(std::move(entry));
  }
  out["exponents"] = std::move(entries);
  return out;
}

json cmd_mono_coeffs(const MonomialIdeal& J, const CommandOptions& opts) {
  const auto& ring = *J.ring_ptr();
  std::vector<std::uint64_t> extents;
  std::vector<Exponent> exps;
  for (const auto& [c, e] : J.terms()) exps.push_back(e);
  if (opts.window.empty())
    extents = fitted_window(exps, ring.mains);
  else
    extents = parse_window(opts.window, ring.nvars());
  json entries = json::array();
  std::vector<std::uint64_t> odo(extents.size(), 0);
  bool done = extents.empty();
  while (!done) {
    Exponent e(ring.nvars());
    for (std::size_t i = 0; i < odo.size(); ++i) e.set(i, odo[i]);
    json entry;
    entry["monomial"] = monomial_str(ring, e);
    entry["generator"] = J.coeff_ideal(e).get_str();
    entries.push_back(std::move(entry));
    std::size_t i = odo.size();
    while (i > 0) {
      --i;
      if (++odo[i] < extents[i]) break;
      odo[i] = 0;
      if (i == 0) done = true;
    }
  }
  json out;
  out["window"] = extents;
  json names = json::array();
  for (const auto& n : ring.names) names.push_back(n);
  out["variables"] = std::move(names);
  out["entries"] = std::move(entries);
  return out;
}

json cmd_mono_fiber(const MonomialIdeal& J, const CommandOptions& opts) {
  if (opts.q.empty()) throw analysis_error("mono-fiber needs --q <prime>");
  mpz_class q;
  try {
    q = mpz_class(opts.q);
  } catch (const std::invalid_argument&) {
    throw analysis_error("bad prime '" + opts.q + "'");
  }
  json gens = json::array();
  for (const auto& e : J.fiber(q))
    gens.push_back(monomial_str(*J.ring_ptr(), e));
  json out;
  out["q"] = q.get_str();
  out["generators"] = std::move(gens);
  return out;
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [text, cmd] : kCommands)
    if (name == text) return cmd;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [text, cmd] : kCommands)
    if (cmd == c) return text;
  return "?";
}

Report execute_command(Session& session, Command cmd,
                       const CommandOptions& opts) {
  json body;
  std::string iname;
  switch (cmd) {
    case Command::Gb:
      iname = resolve_ideal_name(session, opts);
      body = cmd_gb(family_ideal(session, opts));
      break;
    case Command::Initial:
      iname = resolve_ideal_name(session, opts);
      body = cmd_initial(family_ideal(session, opts));
      break;
    case Command::Coeffs:
      iname = resolve_ideal_name(session, opts);
      body = cmd_coeffs(family_ideal(session, opts), opts);
      break;
    case Command::Contract:
      iname = resolve_ideal_name(session, opts);
      body = cmd_contract(family_ideal(session, opts));
      break;
    case Command::FlatLocus:
      iname = resolve_ideal_name(session, opts);
      body = cmd_flat_locus(family_ideal(session, opts));
      break;
    case Command::GoodPoint: {
      const FamilyIdeal& I = family_ideal(session, opts);
      iname = resolve_ideal_name(session, opts);
      body = cmd_good_point(I, resolve_prime(session, opts.prime));
      break;
    }
    case Command::Specialize: {
      const FamilyIdeal& I = family_ideal(session, opts);
      iname = resolve_ideal_name(session, opts);
      body = cmd_specialize(I, resolve_point(session, opts.point));
      break;
    }
    case Command::IsoLocus:
      iname = resolve_ideal_name(session, opts);
      body = locus_json("variable", iso_locus(family_ideal(session, opts)));
      break;
    case Command::FiniteLocus:
      iname = resolve_ideal_name(session, opts);
      body = locus_json("variable", finite_locus(family_ideal(session, opts)));
      break;
    case Command::Saturate:
      iname = resolve_ideal_name(session, opts);
      body = cmd_saturate(session, family_ideal(session, opts), opts);
      break;
    case Command::QuolemCheck:
      iname = resolve_ideal_name(session, opts);
      body = cmd_quolem(family_ideal(session, opts));
      break;
    case Command::MonoCoeffs:
      iname = resolve_ideal_name(session, opts);
      body = cmd_mono_coeffs(mono_ideal(session, opts), opts);
      break;
    case Command::MonoFiber:
      iname = resolve_ideal_name(session, opts);
      body = cmd_mono_fiber(mono_ideal(session, opts), opts);
      break;
    case Command::MonoDiagram:
      iname = resolve_ideal_name(session, opts);
      body = cmd_mono_coeffs(mono_ideal(session, opts), opts);
      break;
  }
  json data;
  data["command"] = command_name(cmd);
  data["ideal"] = iname;
  for (auto& [key, value] : body.items()) data[key] = std::move(value);
  Report report;
  report.data = std::move(data);
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Groebner bases of parametric ideals and their coefficient "
               "ideals"};
  app.require_subcommand(1);

  struct Cli {
    std::string file, format = "text";
    CommandOptions opts;
  } cli;

  for (const auto& [name, cmd] : kCommands) {
    auto* sub = app.add_subcommand(name, "");
    sub->add_option("file", cli.file, "session file")->required();
    sub->add_option("--ideal", cli.opts.ideal, "ideal name");
    sub->add_option("--format", cli.format, "text|json");
    if (cmd == Command::Specialize)
      sub->add_option("--point", cli.opts.point, "named point or a=v,...");
    if (cmd == Command::GoodPoint)
      sub->add_option("--prime", cli.opts.prime, "named prime or (gens)");
    if (cmd == Command::Coeffs || cmd == Command::MonoCoeffs ||
        cmd == Command::MonoDiagram)
      sub->add_option("--window", cli.opts.window, "RxC");
    if (cmd == Command::Saturate)
      sub->add_option("--element", cli.opts.element, "localizing element");
    if (cmd == Command::MonoFiber)
      sub->add_option("--q", cli.opts.q, "prime for the fiber");
  }

  std::vector<const char*> argv;
  argv.push_back("gbfam");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  Command cmd = Command::Gb;
  for (const auto& [name, c] : kCommands)
    if (app.get_subcommand(name)->parsed()) cmd = c;

  Format format;
  if (cli.format == "text")
    format = Format::Text;
  else if (cli.format == "json")
    format = Format::Json;
  else {
    err << "unknown format '" << cli.format << "'\n";
    return 1;
  }

  std::ifstream in(cli.file);
  if (!in) {
    err << "cannot open " << cli.file << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  SessionOptions sopts;
  if (const char* env = std::getenv("GBFAM_PRIME")) {
    try {
      sopts.default_prime = std::stoull(env);
    } catch (...) {
      err << "GBFAM_PRIME is not a number\n";
      return 1;
    }
  }

  try {
    Session session = parse_session(buffer.str(), sopts);
    Report report = execute_command(session, cmd, cli.opts);
    out << render(report, format);
    return 0;
  } catch (const parse_error& e) {
    err << cli.file << ":" << e.what() << "\n";
    return 2;
  } catch (const analysis_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const structural_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gbfam
