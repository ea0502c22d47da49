// Command line surface: exact computation of the closed forms and the
// machine-checkable verification suites, with JSON on stdout and a human
// summary on stderr.
//
// Exit codes: 0 success / all cases pass, 1 verification failure,
// 2 usage or parse error, 3 precondition violation.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/errors.hpp"
#include "hecke/formulas.hpp"
#include "hecke/intertwiner.hpp"
#include "hecke/representations.hpp"
#include "hecke/serialize.hpp"
#include "hecke/suites.hpp"

using json = nlohmann::ordered_json;
using namespace hecke;

namespace {

json ratfunc_json(const RatFunc& f) {
  RatFuncWire w = to_wire(f);
  return json{{"num", w.num}, {"den", w.den}, {"scale", w.scale}};
}

IndexSequence parse_sequence(const std::string& text, IndexSequence::Kind kind) {
  std::vector<int> values;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad index '" + tok + "'");
      }
      if (pos != tok.size() || v < 1) throw ParseError("bad index '" + tok + "'");
      values.push_back(v);
    }
  }
  return {values, kind};
}

struct ComputeArgs {
  std::string what;
  std::string lambda_text, mu_text, shape_text, tableau_text, a_text, b_text, u_text;
};

json run_compute(const ComputeArgs& args) {
  const std::string& what = args.what;
  auto lambda = [&] { return Partition::parse(args.lambda_text); };
  auto mu = [&] { return Partition::parse(args.mu_text); };
  auto maybe_eval = [&](const RatFunc& f, json& out) {
    if (!args.u_text.empty()) {
      Rational u = Rational::parse(args.u_text);
      out["u"] = u.str();
      out["value_at_u"] = f.eval(u).str();
    }
  };

  if (what == "h" || what == "r-gamma" || what == "r-delta" || what == "prop4-rhs" ||
      what == "r-theta") {
    RatFunc value;
    if (what == "h") {
      value = corollary_h(lambda(), mu());
    } else if (what == "r-gamma") {
      value = theorem1_value(lambda(), mu(),
                             parse_sequence(args.a_text, IndexSequence::Kind::Rows));
    } else if (what == "r-delta") {
      value = theorem2_value(lambda(), mu(),
                             parse_sequence(args.b_text, IndexSequence::Kind::Columns));
    } else if (what == "prop4-rhs") {
      value = prop4_rhs(lambda(), mu());
    } else {
      Partition m = mu();
      if (m.rows() != 1)
        throw PreconditionError("r-theta needs a single-row mu giving the added row length");
      value = rtheta_value(lambda(), m.part(1));
    }
    json out = ratfunc_json(value);
    maybe_eval(value, out);
    return out;
  }

  if (what == "dset") {
    DSet d = compute_dset(lambda(), mu());
    json pts = json::array();
    for (long p : d.points) pts.push_back(p);
    return json{{"lambda", d.lam.str()},
                {"mu", d.mu.str()},
                {"points", pts},
                {"contains_zero", d.points.count(0) > 0}};
  }

  if (what == "hooks") {
    Partition shape = Partition::parse(args.shape_text);
    json hooks = json::array();
    for (const Box& b : shape.boxes()) hooks.push_back(hook_length(shape, b));
    return json{{"hooks", hooks},
                {"product", hook_product(shape)},
                {"dim", hook_dimension(shape)}};
  }

  if (what == "F") {
    StandardTableau t = StandardTableau::parse(args.tableau_text);
    RationalElement f = matrix_element_F(t);
    json terms = json::array();
    for (const auto& [perm, coeff] : f.terms())
      terms.push_back(json{{"perm", perm.str()}, {"coeff", coeff.str()}});
    return json{{"tableau", t.str()}, {"degree", f.degree()}, {"terms", terms}};
  }

  throw ParseError("unknown compute target '" + what + "'");
}

json report_json(const Report& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json cases = json::array();
  for (const CaseResult& c : r.cases) {
    json jc{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) jc["detail"] = c.detail;
    cases.push_back(jc);
  }
  return json{{"suite", r.suite},     {"claim", r.claim},
              {"params", params},     {"cases", cases},
              {"failures", r.failures()}, {"status", r.pass() ? "pass" : "fail"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for symmetric group intertwiners"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "evaluate a closed form or invariant");
  compute
      ->add_option("what", cargs.what,
                   "one of: h, r-gamma, r-delta, prop4-rhs, r-theta, dset, hooks, F")
      ->required();
  compute->add_option("--lambda", cargs.lambda_text, "partition, e.g. 3,2");
  compute->add_option("--mu", cargs.mu_text, "partition, e.g. 2,1");
  compute->add_option("--shape", cargs.shape_text, "partition for hooks");
  compute->add_option("--tableau", cargs.tableau_text, "row format, e.g. 1,3,5/2,4");
  compute->add_option("--a", cargs.a_text, "row index sequence, e.g. 2,1");
  compute->add_option("--b", cargs.b_text, "column index sequence, e.g. 1,2,3");
  compute->add_option("--u", cargs.u_text, "rational evaluation point P/Q");

  std::string suite_name;
  SuiteOptions sopt;
  long seed_arg = 1;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string names = "all";
  for (const SuiteInfo& s : suite_catalog()) names += ", " + s.name;
  verify->add_option("suite", suite_name, "one of: " + names)->required();
  verify->add_option("--max-size", sopt.max_size, "size cap for the suite");
  verify->add_option("--seed", seed_arg, "seed for evaluation points");
  verify->add_option("--samples", sopt.samples, "seeded sample count where applicable");
  verify->add_option("--jobs", sopt.jobs, "run cases concurrently");
  verify->add_flag("--symbolic", sopt.symbolic, "force RatFunc coefficients (small sizes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      std::cout << run_compute(cargs).dump() << "\n";
      return 0;
    }

    sopt.seed = static_cast<std::uint64_t>(seed_arg);
    std::vector<Report> reports;
    auto t0 = std::chrono::steady_clock::now();
    if (suite_name == "all") {
      reports = run_all(sopt);
    } else {
      reports.push_back(run_suite(suite_name, sopt));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool pass = true;
    for (const Report& r : reports) {
      pass = pass && r.pass();
      std::cerr << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
                << r.cases.size() << " cases, " << r.failures() << " failures)\n";
    }
    std::cerr << "total " << secs << "s\n";

    if (reports.size() == 1) {
      std::cout << report_json(reports.front()).dump() << "\n";
    } else {
      json arr = json::array();
      for (const Report& r : reports) arr.push_back(report_json(r));
      std::cout << arr.dump() << "\n";
    }
    return pass ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MultiplicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
