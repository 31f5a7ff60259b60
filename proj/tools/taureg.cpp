// taureg: maximal ranks, τ-regularity and reductions for bound quiver algebras.
//
// Exit codes: 0 ok, 1 failure, 2 parse or build error, 3 module violates a
// relation, 4 ideal does not annihilate the module, 10 scan found violations.

#include "taureg/fixtures.hpp"
#include "taureg/io.hpp"
#include "taureg/paper_examples.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace taureg;

namespace {

enum Exit { kOk = 0, kFail = 1, kParse = 2, kRelation = 3, kNotAnnihilating = 4, kViolations = 10 };

struct Global {
  std::string field = "q";
  int trials = 8;
  std::uint64_t seed = 42;
  int tmax = 4;
  int cap = 10;
  bool json = false;
};

struct Args {
  std::string algebra;
  std::string module;
  std::string other;
  std::string ideal;
  std::string p1, p0;
  bool inverse = false;
  bool basis = false;
  std::vector<int> only;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuiverPresentation load_algebra_source(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_quiver_file(arg);
  for (const auto& name : fixture_names())
    if (name == arg) return parse_quiver(fixture_source(name));
  throw UsageError("no algebra file or fixture named '" + arg + "'");
}

template <typename Scalar>
Representation<Scalar> load_module(const AlgebraPtr<Scalar>& a, const std::string& arg) {
  if (std::filesystem::exists(arg)) return module_from_json(a, Json::parse(read_text_file(arg)));
  return module_from_expression(a, arg);
}

std::vector<int> parse_mult(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad multiplicity '" + item + "'");
    }
  }
  if (static_cast<int>(out.size()) != n)
    throw UsageError("multiplicity vector '" + text + "' needs " + std::to_string(n) + " entries");
  return out;
}

std::string dims_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

template <typename Scalar>
int cmd_info(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const int n = a->num_vertices();
  Json j;
  j["field"] = FieldTraits<Scalar>::name();
  j["vertices"] = a->quiver().vertices;
  j["arrows"] = a->num_arrows();
  j["relations"] = Json::array();
  for (const auto& r : a->presentation().relations) j["relations"].push_back(relation_string(a->quiver(), r));
  j["dim"] = a->dim();
  j["radical_dim"] = radical(*a).dim();
  j["projectives"] = Json::array();
  j["injectives"] = Json::array();
  for (int i = 0; i < n; ++i) {
    j["projectives"].push_back(projective(a, i).dims());
    j["injectives"].push_back(injective(a, i).dims());
  }
  if (g.json) {
    emit(j);
    return kOk;
  }
  std::cout << "dim A = " << a->dim() << "; P:";
  for (int i = 0; i < n; ++i) std::cout << ' ' << dims_str(projective(a, i).dims());
  std::cout << "\nI:";
  for (int i = 0; i < n; ++i) std::cout << ' ' << dims_str(injective(a, i).dims());
  std::cout << "\ndim rad A = " << radical(*a).dim() << "\nfield " << FieldTraits<Scalar>::name() << '\n';
  return kOk;
}

template <typename Scalar>
int cmd_check(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const auto m = load_module(a, args.module);
  const auto h = hierarchy_report(m, g.trials, g.seed, g.cap);
  Json j;
  j["dim"] = m.dims();
  j["hierarchy"] = hierarchy_json(h);
  if (g.json) {
    emit(j);
    return kOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "module " << dims_str(m.dims()) << " over " << FieldTraits<Scalar>::name() << '\n'
            << "tau-regular     " << h.verdict.outcome_name() << " (presentation rank " << h.verdict.presentation_rank
            << ", best rank " << h.verdict.generic_rank << ", certificate " << h.verdict.certificate << ")\n"
            << "projective      " << yn(h.projective) << '\n'
            << "pd <= 1         " << yn(h.pd_at_most_1) << " (pd " << h.pd.str() << ")\n"
            << "rigid           " << yn(h.rigid) << " (e = " << h.e << ")\n"
            << "tau-rigid       " << yn(h.tau_rigid) << " (E = " << h.E << ")\n"
            << "partial tilting " << yn(h.partial_tilting) << '\n';
  if (!h.verdict.note.empty()) std::cout << h.verdict.note << '\n';
  return kOk;
}

template <typename Scalar>
int cmd_scan(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const ProjDecomp p1{parse_mult(args.p1, a->num_vertices())};
  const ProjDecomp p0{parse_mult(args.p0, a->num_vertices())};
  const auto rep = additivity_scan(a, p1, p0, g.tmax, g.trials, g.seed);
  if (g.json) {
    Json j = scan_json(rep);
    j["p1"] = p1.mult;
    j["p0"] = p0.mult;
    emit(j);
  } else {
    std::cout << "r(P1^t, P0^t) for P1 = " << dims_str(p1.mult) << ", P0 = " << dims_str(p0.mult) << " over "
              << rep.field << '\n';
    for (std::size_t t = 0; t < rep.r.size(); ++t) {
      std::cout << "t=" << t + 1 << "  r=" << rep.r[t] << "  " << (rep.certified[t] ? "certified" : "uncertified")
                << " (" << rep.certificates[t] << ", bound " << rep.upper_bounds[t] << ")";
      if (std::find(rep.violations.begin(), rep.violations.end(), static_cast<int>(t + 1)) != rep.violations.end())
        std::cout << "  > " << t + 1 << "*" << rep.r[0];
      std::cout << '\n';
    }
    std::cout << (rep.violations.empty() ? "additive up to t=" + std::to_string(g.tmax) : "not additive") << '\n';
  }
  return rep.violations.empty() ? kOk : kViolations;
}

template <typename Scalar>
int cmd_reduce(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const auto m = load_module(a, args.module);
  std::optional<Ideal<Scalar>> ideal;
  if (!args.ideal.empty()) ideal = ideal_from_generators(a, parse_ideal_file(a->quiver(), read_text_file(args.ideal)));
  const auto r = reduce_and_compare(m, ideal, g.trials, g.seed, g.cap);
  const Json j = reduction_json(*a, r);
  if (g.json) {
    emit(j);
    return kOk;
  }
  const auto& b = *r.quotient.algebra;
  std::cout << "I = " << (ideal ? "supplied ideal" : "annihilator") << ", dim " << r.ideal.dim() << '\n';
  for (const auto& s : ideal_strings(*a, r.ideal)) std::cout << "  " << s << '\n';
  std::cout << "B = A/I: dim " << b.dim() << ", " << b.num_vertices() << " vertices, " << b.num_arrows() << " arrows, "
            << b.presentation().relations.size() << " relations\n";
  for (const auto& rel : j["quotient"]["relations"]) std::cout << "  " << rel.get<std::string>() << '\n';
  std::cout << "pd          A " << r.pd_a.str() << "  B " << r.pd_b.str() << '\n'
            << "e           A " << r.e_a << "  B " << r.e_b << '\n'
            << "E           A " << r.E_a << "  B " << r.E_b << '\n'
            << "tau-rigid   A " << (r.tau_rigid_a ? "yes" : "no") << "  B " << (r.tau_rigid_b ? "yes" : "no") << '\n'
            << "tau-regular A " << r.regular_a.outcome_name() << "  B " << r.regular_b.outcome_name() << '\n'
            << "e_B <= e_A " << (r.e_shrinks ? "holds" : "FAILS") << ", E_B <= E_A " << (r.E_shrinks ? "holds" : "FAILS")
            << '\n';
  return r.e_shrinks && r.E_shrinks ? kOk : kFail;
}

template <typename Scalar>
int cmd_hom(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const auto m = load_module(a, args.module);
  const auto n = load_module(a, args.other);
  const auto basis = hom_basis(m, n);
  Json j;
  j["hom_dim"] = basis.size();
  j["field"] = FieldTraits<Scalar>::name();
  if (args.basis) {
    j["basis"] = Json::array();
    for (const auto& f : basis) {
      Json maps = Json::array();
      for (const auto& x : f.maps) maps.push_back(matrix_json(x));
      j["basis"].push_back(std::move(maps));
    }
  }
  if (g.json) emit(j);
  else std::cout << "dim Hom = " << basis.size() << '\n';
  return kOk;
}

template <typename Scalar>
int cmd_tau(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const auto m = load_module(a, args.module);
  const auto t = args.inverse ? tau_minus(m) : tau(m);
  if (g.json) {
    emit(module_to_json(t, args.algebra));
  } else {
    std::cout << (args.inverse ? "tau^- M" : "tau M") << " = " << dims_str(t.dims()) << '\n';
    const auto& q = a->quiver();
    for (int k = 0; k < q.num_arrows(); ++k)
      std::cout << "  " << q.arrows[static_cast<std::size_t>(k)].name << ": " << matrix_json(t.arrow_map(k)).dump() << '\n';
  }
  return kOk;
}

template <typename Scalar>
int cmd_ext1(const Global& g, const Args& args) {
  const auto a = build_algebra<Scalar>(load_algebra_source(args.algebra));
  const auto m = load_module(a, args.module);
  const auto n = load_module(a, args.other);
  const int e = ext1_dim(m, n);
  const int stable = stable_hom_dim_inj(n, tau(m));
  if (g.json) {
    Json j;
    j["ext1_dim"] = e;
    j["stable_hom_dim"] = stable;
    j["field"] = FieldTraits<Scalar>::name();
    emit(j);
  } else {
    std::cout << "dim Ext^1 = " << e << "\ndim stable Hom(N, tau M) = " << stable << '\n';
  }
  return e == stable ? kOk : kFail;
}

int cmd_paper_examples(const Global& g, const Args& args, bool trials_given, bool seed_given) {
  PaperOptions opt;
  if (trials_given) opt.trials = g.trials;
  if (seed_given) opt.seed = g.seed;
  opt.cap = g.cap;
  opt.only = args.only;
  const auto results = run_paper_examples(opt);
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"limit_seconds", r.limit}});
    if (!g.json)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.name << "  (" << r.seconds << " s)  " << r.detail
                << '\n';
  }
  if (g.json) emit(Json{{"trials", opt.trials}, {"seed", opt.seed}, {"all_pass", ok}, {"criteria", j}});
  return ok ? kOk : kFail;
}

template <typename Scalar>
int dispatch(const std::string& cmd, const Global& g, const Args& args) {
  if (cmd == "info") return cmd_info<Scalar>(g, args);
  if (cmd == "check") return cmd_check<Scalar>(g, args);
  if (cmd == "scan") return cmd_scan<Scalar>(g, args);
  if (cmd == "reduce") return cmd_reduce<Scalar>(g, args);
  if (cmd == "hom") return cmd_hom<Scalar>(g, args);
  if (cmd == "tau") return cmd_tau<Scalar>(g, args);
  if (cmd == "ext1") return cmd_ext1<Scalar>(g, args);
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal ranks, tau-regularity and reductions for bound quiver algebras"};
  app.require_subcommand(1);
  Global g;
  Args args;
  app.add_option("--field", g.field, "q or fp:<prime>")->capture_default_str();
  auto* trials_opt = app.add_option("--trials", g.trials, "random samples per rank estimate")->capture_default_str()
                         ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--tmax", g.tmax, "largest t for scan")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "syzygy steps for projective dimension")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "JSON output");

  const std::string alg_help = ".qa file or fixture name (ALG-A, ALG-B, ALG-B0, ALG-C, ALG-K)";
  const std::string mod_help = ".mod.json file or expression such as P(2)+I(2)+S(3)";
  auto* info = app.add_subcommand("info", "dimensions of A, its projectives and injectives");
  info->add_option("algebra", args.algebra, alg_help)->required();
  auto* check = app.add_subcommand("check", "hierarchy report and tau-regularity verdict");
  check->add_option("algebra", args.algebra, alg_help)->required();
  check->add_option("module", args.module, mod_help)->required();
  auto* scan = app.add_subcommand("scan", "r(P1^t, P0^t) for t = 1..tmax; exit 10 on violations");
  scan->add_option("algebra", args.algebra, alg_help)->required();
  scan->add_option("--p1", args.p1, "multiplicities of P1, e.g. 0,1,0")->required();
  scan->add_option("--p0", args.p0, "multiplicities of P0, e.g. 0,0,1")->required();
  auto* reduce = app.add_subcommand("reduce", "reduce a module to A/I (I = annihilator unless --ideal)");
  reduce->add_option("algebra", args.algebra, alg_help)->required();
  reduce->add_option("module", args.module, mod_help)->required();
  reduce->add_option("--ideal", args.ideal, "file with ideal generators, one per line")->check(CLI::ExistingFile);
  auto* paper = app.add_subcommand("paper-examples", "run the built-in expectation table");
  paper->add_option("--only", args.only, "criterion ids")->delimiter(',');
  auto* hom = app.add_subcommand("hom", "dim Hom(M, N)");
  hom->add_option("algebra", args.algebra, alg_help)->required();
  hom->add_option("module", args.module, mod_help)->required();
  hom->add_option("other", args.other, mod_help)->required();
  hom->add_flag("--basis", args.basis, "print a basis (with --json)");
  auto* tau = app.add_subcommand("tau", "Auslander-Reiten translate");
  tau->add_option("algebra", args.algebra, alg_help)->required();
  tau->add_option("module", args.module, mod_help)->required();
  tau->add_flag("--inverse", args.inverse, "tau^- instead of tau");
  auto* ext = app.add_subcommand("ext1", "dim Ext^1(M, N), checked against the AR formula");
  ext->add_option("algebra", args.algebra, alg_help)->required();
  ext->add_option("module", args.module, mod_help)->required();
  ext->add_option("other", args.other, mod_help)->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (cmd == "paper-examples") {
      if (g.field != "q") throw UsageError("paper-examples runs over Q only");
      return cmd_paper_examples(g, args, trials_opt->count() > 0, seed_opt->count() > 0);
    }
    if (g.field == "q") return dispatch<Rational>(cmd, g, args);
    if (g.field.rfind("fp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(g.field.substr(3));
      } catch (const std::logic_error&) {
        throw UsageError("bad prime in --field " + g.field);
      }
      try {
        Fp::set_modulus(p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return dispatch<Fp>(cmd, g, args);
    }
    throw UsageError("--field must be q or fp:<prime>");
  } catch (const RelationViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRelation;
  } catch (const NotAnnihilating& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotAnnihilating;
  } catch (const ParseError& e) {
    std::cerr << "parse error, line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kParse;
  } catch (const NotFiniteDimensional& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
