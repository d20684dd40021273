// Command-line front end: parse germs over a cross-cap target (or a generic
// variable space with user-supplied tangent-field generators), run the
// computations and verification suites, and emit text or stable JSON.
//
// Exit codes: 0 success / all checks pass, 1 verification failure
// (including non-transverse pullbacks), 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crosscap/classify.hpp"

using nlohmann::ordered_json;

namespace {

using namespace crosscap;

struct Options {
  int k = 0;
  std::string germ_text;
  int degree = 2;  // transversal degree
  int max_degree = 12;
  std::string mode = "ke";
  int vars = 0;  // generic-space mode when > 0
  std::string fields_path;
  int jets = 20;
  unsigned seed = 77003917;
  bool json = false;
};

struct Setup {
  std::optional<CrossCapContext> ctx;
  SpacePtr space;  // where germs live
  TangentContext tc;
};

Setup make_setup(const Options& o, bool need_tangent) {
  Setup s;
  if (o.vars > 0) {
    s.space = generic_space(o.vars);
    if (need_tangent) {
      std::ifstream in(o.fields_path);
      if (!in)
        throw std::invalid_argument("cannot open fields file: " +
                                    o.fields_path);
      std::stringstream buf;
      buf << in.rdbuf();
      std::vector<PolyVec> fields = parse_field_lines(buf.str(), s.space);
      if (fields.empty())
        throw std::invalid_argument("fields file has no generators: " +
                                    o.fields_path);
      s.tc = user_context(s.space, std::move(fields));
    } else {
      s.tc.vars = s.space;
    }
    return s;
  }
  if (o.k < 2)
    throw std::invalid_argument("need -k with k >= 2, or --vars + --fields");
  s.ctx.emplace(minimal_crosscap(o.k));
  s.space = s.ctx->target;
  s.tc = tangent_context(*s.ctx);
  return s;
}

ordered_json k_json(const Options& o) {
  return o.vars > 0 ? ordered_json(nullptr) : ordered_json(o.k);
}

ordered_json basis_strings(const std::vector<PolyVec>& vs) {
  ordered_json a = ordered_json::array();
  for (const PolyVec& v : vs) a.push_back(polyvec_str(v));
  return a;
}

std::string joined(const std::vector<PolyVec>& vs, const char* sep = ", ") {
  std::string out;
  for (const PolyVec& v : vs) out += (out.empty() ? "" : sep) + polyvec_str(v);
  return out;
}

// components ';'-joined without outer parentheses, so vfields output can be
// fed back as a --fields file
std::string field_line(const PolyVec& v) {
  std::string out;
  for (const Poly& p : v.c) out += (out.empty() ? "" : "; ") + poly_str(p);
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const VerificationReport& r) {
  std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.claim << "\n";
  for (const std::string& d : r.details) std::cout << "    " << d << "\n";
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["status"] = r.pass ? "pass" : "fail";
  j["details"] = r.details;
  return j;
}

int finish_reports(const Options& o, const std::string& command,
                   const std::vector<VerificationReport>& reports,
                   bool include_k) {
  bool all = true;
  for (const VerificationReport& r : reports) all = all && r.pass;
  if (o.json) {
    ordered_json j;
    j["command"] = command;
    if (include_k) j["k"] = o.k;
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : reports) arr.push_back(report_json(r));
    j["reports"] = arr;
    j["status"] = all ? "pass" : "fail";
    emit(j);
  } else {
    for (const VerificationReport& r : reports) print_report(r);
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

int run_vfields(const Options& o) {
  Setup s = make_setup(o, false);
  const CrossCapContext& ctx = *s.ctx;
  std::vector<PolyVec> fields = ctx.theta();
  std::vector<std::string> labels = {"euler"};
  for (int f = 1; f <= 3; ++f)
    for (int j = 1; j <= ctx.k - 1; ++j)
      labels.push_back("family-" + std::to_string(f) + "-j" +
                       std::to_string(j));

  bool all_liftable = true;
  ordered_json arr = ordered_json::array();
  if (!o.json)
    std::cout << "# liftable vector fields over the order-" << ctx.k
              << " cross-cap target\n";
  for (size_t i = 0; i < fields.size(); ++i) {
    LiftResult lr = verify_liftable(ctx, fields[i]);
    all_liftable = all_liftable && lr.ok();
    if (o.json) {
      ordered_json f;
      f["label"] = labels[i];
      ordered_json comps = ordered_json::array();
      for (const Poly& p : fields[i].c) comps.push_back(poly_str(p));
      f["components"] = comps;
      f["liftable"] = lr.ok();
      if (lr.ok()) {
        ordered_json lift = ordered_json::array();
        for (const Poly& p : lr.lift->c) lift.push_back(poly_str(p));
        f["lift"] = lift;
      } else {
        f["failure"] = lr.failure;
      }
      arr.push_back(f);
    } else {
      std::cout << "# " << labels[i];
      if (lr.ok())
        std::cout << " — lift " << polyvec_str(*lr.lift) << "\n";
      else
        std::cout << " — NOT LIFTABLE: " << lr.failure << "\n";
      std::cout << field_line(fields[i]) << "\n";
    }
  }
  if (o.json) {
    ordered_json j;
    j["command"] = "vfields";
    j["k"] = o.k;
    j["fields"] = arr;
    j["status"] = all_liftable ? "ok" : "fail";
    emit(j);
  }
  return all_liftable ? 0 : 1;
}

int run_codim(const Options& o) {
  Setup s = make_setup(o, true);
  GermMap h = parse_germ(o.germ_text, s.space);
  CodimReport rep = codimension(s.tc, h, o.max_degree);
  if (o.json) {
    ordered_json j;
    j["command"] = "codim";
    j["k"] = k_json(o);
    j["germ"] = germ_str(h);
    if (rep.finite) {
      j["codimension"] = rep.codim;
      j["normal_basis"] = basis_strings(rep.normal_basis);
      j["determinacy"] = rep.determinacy ? ordered_json(*rep.determinacy)
                                         : ordered_json("unknown");
      j["stabilization_degree"] = rep.stabilization_degree;
    } else {
      j["codimension"] = "not-certified-finite";
      j["normal_basis"] = ordered_json::array();
      j["determinacy"] = "unknown";
      j["stabilization_degree"] = nullptr;
    }
    j["status"] = "ok";
    emit(j);
  } else {
    std::cout << "germ: " << germ_str(h) << "\n";
    if (rep.finite) {
      std::cout << "codimension: " << rep.codim << "\n";
      std::cout << "normal basis: " << joined(rep.normal_basis) << "\n";
      if (rep.determinacy)
        std::cout << "determinacy: " << *rep.determinacy << "\n";
      else
        std::cout << "determinacy: unknown (a tangent field does not vanish "
                     "at the origin)\n";
      std::cout << "stabilization degree: " << rep.stabilization_degree
                << "\n";
    } else {
      std::cout << "codimension: not certified finite up to degree "
                << rep.max_degree << "\n";
    }
  }
  return 0;
}

int run_determinacy(const Options& o) {
  Setup s = make_setup(o, true);
  GermMap h = parse_germ(o.germ_text, s.space);
  DeterminacyMode mode =
      o.mode == "k1" ? DeterminacyMode::via_K1 : DeterminacyMode::via_Ke;
  std::optional<int> bound = determinacy_bound(s.tc, h, mode, o.max_degree);
  if (o.json) {
    ordered_json j;
    j["command"] = "determinacy";
    j["k"] = k_json(o);
    j["germ"] = germ_str(h);
    j["mode"] = o.mode;
    j["determinacy"] =
        bound ? ordered_json(*bound) : ordered_json("none-up-to-max-degree");
    j["status"] = "ok";
    emit(j);
  } else {
    std::cout << "germ: " << germ_str(h) << "\n";
    if (bound)
      std::cout << "determinacy bound: " << *bound << "\n";
    else
      std::cout << "determinacy bound: none up to degree " << o.max_degree
                << "\n";
  }
  return 0;
}

int run_transversal(const Options& o) {
  Setup s = make_setup(o, true);
  GermMap jet = parse_germ(o.germ_text, s.space);
  std::vector<PolyVec> tv = complete_transversal(s.tc, jet, o.degree);
  if (o.json) {
    ordered_json j;
    j["command"] = "transversal";
    j["k"] = k_json(o);
    j["germ"] = germ_str(jet);
    j["degree"] = o.degree;
    j["transversal"] = basis_strings(tv);
    j["status"] = "ok";
    emit(j);
  } else {
    std::cout << "germ: " << germ_str(jet) << "\n";
    std::cout << "degree-" << o.degree << " transversal: "
              << (tv.empty() ? std::string("(none)") : joined(tv)) << "\n";
  }
  return 0;
}

int run_pullback(const Options& o) {
  Setup s = make_setup(o, false);
  GermMap h = parse_germ(o.germ_text, s.space);
  try {
    GermMap g = sharp_pullback(*s.ctx, h);
    if (o.json) {
      ordered_json j;
      j["command"] = "pullback";
      j["k"] = o.k;
      j["germ"] = germ_str(h);
      j["source"] = g.source->names;
      ordered_json comps = ordered_json::array();
      for (const Poly& p : g.components) comps.push_back(poly_str(p));
      j["pullback"] = comps;
      j["status"] = "ok";
      emit(j);
    } else {
      std::cout << "germ: " << germ_str(h) << "\n";
      std::string src;
      for (const std::string& n : g.source->names)
        src += (src.empty() ? "" : ", ") + n;
      std::cout << "source: " << src << "\n";
      std::cout << "pullback: " << germ_str(g) << "\n";
    }
    return 0;
  } catch (const PullbackError& e) {
    if (o.json) {
      ordered_json j;
      j["command"] = "pullback";
      j["k"] = o.k;
      j["germ"] = germ_str(h);
      j["status"] = "fail";
      j["message"] = e.what();
      emit(j);
    } else {
      std::cout << "germ: " << germ_str(h) << "\n";
      std::cout << "not transverse: " << e.what() << "\n";
    }
    return 1;
  }
}

int run_classify(const Options& o) {
  std::vector<VerificationReport> reports =
      classify_codim2(o.k, o.jets, o.seed);
  return finish_reports(o, "classify", reports, true);
}

int run_counterexample(const Options& o) {
  std::vector<VerificationReport> reports = {verify_family_necessity()};
  return finish_reports(o, "counterexample", reports, false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact classification engine for map-germs on minimal cross caps"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  Options o;

  auto configure = [&o](CLI::App* sub, bool wants_germ, bool wants_user_space,
                        bool k_required) {
    sub->set_help_flag("--help", "print usage");
    CLI::Option* kopt =
        sub->add_option("-k", o.k, "cross-cap order (k >= 2)");
    if (wants_germ)
      sub->add_option("-h,--germ", o.germ_text,
                      "germ text, components comma-separated")
          ->required();
    if (wants_user_space) {
      CLI::Option* vopt = sub->add_option(
          "--vars", o.vars, "use a generic space x1..xn instead of -k");
      CLI::Option* fopt = sub->add_option(
          "--fields", o.fields_path,
          "tangent-field generator file: one field per line, components "
          "';'-separated, '#' comments");
      vopt->needs(fopt);
      fopt->needs(vopt);
      kopt->excludes(vopt);
      vopt->excludes(kopt);
    } else if (k_required) {
      kopt->required();
    }
    sub->add_flag("--json", o.json, "emit machine-readable JSON");
    return kopt;
  };

  CLI::App* c_vfields = app.add_subcommand(
      "vfields", "list the liftable fields (Euler + three families) with "
                 "their verified lifts");
  configure(c_vfields, false, false, true);

  CLI::App* c_codim = app.add_subcommand(
      "codim", "codimension, normal basis and determinacy of a germ");
  configure(c_codim, true, true, false);
  c_codim->add_option("--max-degree", o.max_degree,
                      "truncation cap for the finiteness search");

  CLI::App* c_det =
      app.add_subcommand("determinacy", "least certified determinacy degree");
  configure(c_det, true, true, false);
  c_det->add_option("--max-degree", o.max_degree,
                    "truncation cap for the search");
  c_det->add_option("--mode", o.mode, "certification route")
      ->check(CLI::IsMember({"ke", "k1"}));

  CLI::App* c_tv = app.add_subcommand(
      "transversal", "complete degree-d transversal of a (d-1)-jet");
  configure(c_tv, true, true, false);
  c_tv->add_option("-d,--degree", o.degree, "transversal degree (>= 2)")
      ->required();

  CLI::App* c_pb = app.add_subcommand(
      "pullback", "restrict the cross cap to the zero set of a germ");
  configure(c_pb, true, false, true);

  CLI::App* c_cl = app.add_subcommand(
      "classify", "verify the codimension-2 normal forms at this k");
  configure(c_cl, false, false, true);
  c_cl->add_option("--jets", o.jets,
                   "number of seeded generic 1-jets for the k >= 5 negative "
                   "certificate");
  c_cl->add_option("--seed", o.seed, "seed for the generic-jet draws");

  CLI::App* c_ce = app.add_subcommand(
      "counterexample",
      "quotient and family-necessity checks for the pair (V2+W1, U1) at k=3");
  c_ce->set_help_flag("--help", "print usage");
  c_ce->add_flag("--json", o.json, "emit machine-readable JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_vfields)) return run_vfields(o);
    if (app.got_subcommand(c_codim)) return run_codim(o);
    if (app.got_subcommand(c_det)) return run_determinacy(o);
    if (app.got_subcommand(c_tv)) return run_transversal(o);
    if (app.got_subcommand(c_pb)) return run_pullback(o);
    if (app.got_subcommand(c_cl)) return run_classify(o);
    if (app.got_subcommand(c_ce)) return run_counterexample(o);
    std::cerr << "input error: unknown command\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << " (at position " << e.pos
              << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
