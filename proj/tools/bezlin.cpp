// bezlin: exact linear algebra over polynomial rings with Bezout
// coefficients. One request per invocation; JSON by default, --text for a
// human-readable report. Exit codes: 0 decided, 2 Unknown, 1 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bezlin/json_io.hpp"
#include "bezlin/parse.hpp"

using namespace bezlin;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string slurp_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

// "-" means: read the actual text from stdin.
std::string resolve(const std::string& text) {
  return text == "-" ? slurp_stdin() : text;
}

struct Options {
  std::string ring = "Z";
  std::string vars_csv;
  std::string params_csv;
  long cap = -1;
  long max_cap = -1;
  std::string primes_csv;
  bool text = false;

  DomainDescriptor dom() const { return DomainDescriptor::parse(ring); }

  std::vector<std::string> vars() const {
    if (trim(vars_csv).empty())
      return {};
    std::vector<std::string> v;
    for (auto& s : split(vars_csv, ','))
      v.push_back(trim(s));
    return v;
  }

  std::vector<std::string> params() const {
    if (trim(params_csv).empty())
      return {};
    std::vector<std::string> v;
    for (auto& s : split(params_csv, ','))
      v.push_back(trim(s));
    return v;
  }

  Policy policy() const {
    Policy p;
    if (max_cap >= 0)
      p.max_cap = max_cap;
    if (cap >= 0)
      p.cap_override = cap;
    if (!trim(primes_csv).empty()) {
      p.primes.clear();
      for (auto& s : split(primes_csv, ','))
        p.primes.push_back(std::stol(trim(s)));
    }
    return p;
  }
};

void add_common(CLI::App* cmd, Options& opt, bool with_params = false) {
  cmd->add_option("--ring", opt.ring, "Coefficient ring: Z, Q, Fp:<p>, Zloc:<p>");
  cmd->add_option("--vars", opt.vars_csv, "Comma-separated variable names");
  if (with_params)
    cmd->add_option("--params", opt.params_csv,
                    "Comma-separated parameter names");
  cmd->add_option("--cap", opt.cap, "Starting degree cap override");
  cmd->add_option("--max-cap", opt.max_cap, "Escalation ceiling");
  cmd->add_option("--primes", opt.primes_csv,
                  "Primes for modular falsification");
  cmd->add_flag("--text", opt.text, "Human-readable report instead of JSON");
  cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
}

PolyVector parse_vector(const std::string& text,
                        const std::vector<std::string>& vars,
                        DomainDescriptor dom) {
  PolyVector v;
  for (auto& s : split(resolve(text), ','))
    v.push_back(parse_poly(trim(s), vars, dom));
  return v;
}

PolyMatrix parse_matrix(const std::string& text,
                        const std::vector<std::string>& vars,
                        DomainDescriptor dom) {
  PolyMatrix A;
  for (auto& row : split(resolve(text), ';'))
    A.push_back(parse_vector(row, vars, dom));
  return A;
}

std::vector<DomainElem> parse_elems(const std::string& text,
                                    DomainDescriptor dom) {
  std::vector<DomainElem> v;
  for (auto& s : split(resolve(text), ','))
    v.push_back(DomainElem::from_string(dom, trim(s)));
  return v;
}

void emit(const Json& j, bool text, const std::string& report) {
  if (text)
    std::cout << report;
  else
    std::cout << j.dump(2) << "\n";
}

std::string render_gens(const std::vector<PolyVector>& gens,
                        const std::vector<std::string>& vars) {
  std::ostringstream os;
  for (const auto& g : gens) {
    os << "  (";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i)
        os << ", ";
      os << print_poly(g[i], vars);
    }
    os << ")\n";
  }
  return os.str();
}

// Certificate rendered as the identity it witnesses.
std::string render_identity(const MultiPoly& f0, const PolyVector& gens,
                            const PolyVector& sol,
                            const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << print_poly(f0, vars) << " = ";
  bool first = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (sol[i].is_zero())
      continue;
    if (!first)
      os << " + ";
    os << "(" << print_poly(sol[i], vars) << ")*(" << print_poly(gens[i], vars)
       << ")";
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

std::string verdict_report(const MembershipVerdict& v,
                           const MultiPoly* f0, const PolyVector* gens,
                           const std::vector<std::string>& vars) {
  std::ostringstream os;
  switch (v.status) {
  case MembershipVerdict::Status::Member:
    os << "Member (cap " << v.cap << ")\n";
    if (f0 && gens && !v.certificate.empty())
      os << "  " << render_identity(*f0, *gens, v.solution(), vars) << "\n";
    break;
  case MembershipVerdict::Status::NotMember:
    os << "NotMember";
    if (v.failure == FailureKind::ModularFailure)
      os << " (no solution modulo " << v.failure_prime << ")";
    else if (v.failure == FailureKind::RationalFailure)
      os << " (no rational solution)";
    else if (v.failure == FailureKind::HomogeneousExact)
      os << " (forced-degree system unsolvable)";
    os << "\n";
    break;
  case MembershipVerdict::Status::Unknown:
    os << "Unknown: undecided up to degree cap " << v.cap << "\n";
    break;
  }
  return os.str();
}

int exit_code(const MembershipVerdict& v) {
  return v.status == MembershipVerdict::Status::Unknown ? 2 : 0;
}

std::string family_report(const ParamFamily& fam,
                          const std::vector<std::string>& params,
                          const std::vector<std::string>& xvars) {
  std::ostringstream os;
  for (std::size_t b = 0; b < fam.branches.size(); ++b) {
    const auto& br = fam.branches[b];
    os << "branch " << b + 1 << ": " << formula_to_string(br.guard, params)
       << "\n";
    for (const auto& g : br.gens) {
      os << "  (";
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i)
          os << ", ";
        bool first = true;
        if (g[i].coeffs.empty())
          os << "0";
        for (const auto& [m, t] : g[i].coeffs) {
          if (!first)
            os << " + ";
          os << term_to_string(t, params);
          for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0)
              continue;
            os << "*" << (k < xvars.size() ? xvars[k]
                                           : "X" + std::to_string(k + 1));
            if (m[k] > 1)
              os << "^" << m[k];
          }
          first = false;
        }
      }
      os << ")\n";
    }
  }
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact syzygy and membership computations over Z, Q, F_p, "
               "Z_(p) coefficient rings"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> inputs;
  std::string matrix_text, rhs_text, second_text, at_text;
  unsigned bN = 0, bd = 1, bn = 1;

  auto* c_syz = app.add_subcommand("syz", "Syzygies of a polynomial row");
  add_common(c_syz, opt);
  c_syz->add_option("polys", inputs, "f_1 ... f_n")->required();

  auto* c_syzmat =
      app.add_subcommand("syzmat", "Syzygies of a polynomial matrix");
  add_common(c_syzmat, opt);
  c_syzmat->add_option("--matrix", matrix_text,
                       "Rows separated by ';', entries by ','")
      ->required();

  auto* c_solve = app.add_subcommand("solve", "Particular solution of A y = b");
  add_common(c_solve, opt);
  c_solve->add_option("--matrix", matrix_text, "Coefficient matrix")
      ->required();
  c_solve->add_option("--rhs", rhs_text, "Right-hand side entries")->required();

  auto* c_member = app.add_subcommand("member", "Ideal membership f0 in (gens)");
  add_common(c_member, opt);
  c_member->add_option("polys", inputs, "f_0 f_1 ... f_n")->required();

  auto* c_memberhom = app.add_subcommand(
      "memberhom", "Membership for homogeneous inputs (always decided)");
  add_common(c_memberhom, opt);
  c_memberhom->add_option("polys", inputs, "f_0 f_1 ... f_n")->required();

  auto* c_radmember = app.add_subcommand(
      "radmember", "Radical membership over a field ring");
  add_common(c_radmember, opt);
  c_radmember->add_option("polys", inputs, "f_0 f_1 ... f_n")->required();

  auto* c_radconst = app.add_subcommand(
      "radconst", "Radical membership for ring constants");
  add_common(c_radconst, opt);
  c_radconst->add_option("consts", inputs, "r_0 r_1 ... r_n")->required();

  auto* c_intersect =
      app.add_subcommand("intersect", "Intersection of two column modules");
  add_common(c_intersect, opt);
  c_intersect->add_option("--a", matrix_text, "First module, columns of A")
      ->required();
  c_intersect->add_option("--b", second_text, "Second module, columns of B")
      ->required();

  auto* c_colon = app.add_subcommand("colon", "Module colon ideal (M' : M)");
  add_common(c_colon, opt);
  c_colon->add_option("--mprime", matrix_text, "Columns of M'")->required();
  c_colon->add_option("--m", second_text, "Columns of M")->required();

  auto* c_paramsyz = app.add_subcommand(
      "paramsyz", "Quantifier-free parametric syzygy family");
  add_common(c_paramsyz, opt, true);
  c_paramsyz->add_option("--matrix", matrix_text,
                         "Matrix over the parameters and variables")
      ->required();

  auto* c_evalparam = app.add_subcommand(
      "evalparam", "Evaluate a parametric family at a tuple");
  add_common(c_evalparam, opt, true);
  c_evalparam->add_option("--family", matrix_text,
                          "Family JSON (file path or '-')")
      ->required();
  c_evalparam->add_option("--at", at_text, "Parameter values, comma-separated")
      ->required();

  auto* c_bounds = app.add_subcommand("bounds", "Degree and size bounds");
  add_common(c_bounds, opt);
  c_bounds->add_option("--N", bN, "Number of variables")->required();
  c_bounds->add_option("--d", bd, "Max generator degree");
  c_bounds->add_option("--n", bn, "Number of generators");

  CLI11_PARSE(app, argc, argv);

  try {
    DomainDescriptor dom = opt.dom();
    auto vars = opt.vars();
    Policy policy = opt.policy();

    if (c_syz->parsed() || c_syzmat->parsed()) {
      SyzygyBasis basis;
      if (c_syz->parsed()) {
        PolyVector f;
        for (auto& s : inputs)
          f.push_back(parse_poly(resolve(s), vars, dom));
        basis = syzygies(f, policy);
      } else {
        basis = syzygies_matrix(parse_matrix(matrix_text, vars, dom), policy);
      }
      std::ostringstream rep;
      rep << "generators (degree cap " << basis.degree_cap << ", "
          << (basis.complete ? "complete" : "cap-relative") << "):\n"
          << render_gens(basis.vectors, vars);
      emit(syzygies_to_json(basis, vars), opt.text, rep.str());
      return 0;
    }

    if (c_solve->parsed()) {
      PolyMatrix A = parse_matrix(matrix_text, vars, dom);
      PolyVector b = parse_vector(rhs_text, vars, dom);
      MembershipVerdict v = solve_poly(A, b, policy);
      emit(verdict_to_json(v, vars), opt.text,
           verdict_report(v, nullptr, nullptr, vars));
      return exit_code(v);
    }

    if (c_member->parsed() || c_memberhom->parsed()) {
      if (inputs.size() < 2)
        throw Error("need f_0 and at least one generator");
      MultiPoly f0 = parse_poly(resolve(inputs[0]), vars, dom);
      PolyVector gens;
      for (std::size_t i = 1; i < inputs.size(); ++i)
        gens.push_back(parse_poly(resolve(inputs[i]), vars, dom));
      MembershipVerdict v = c_member->parsed()
                                ? member(f0, gens, policy)
                                : member_homogeneous(f0, gens);
      emit(verdict_to_json(v, vars), opt.text,
           verdict_report(v, &f0, &gens, vars));
      return exit_code(v);
    }

    if (c_radmember->parsed()) {
      if (inputs.size() < 2)
        throw Error("need f_0 and at least one generator");
      MultiPoly f0 = parse_poly(resolve(inputs[0]), vars, dom);
      PolyVector gens;
      for (std::size_t i = 1; i < inputs.size(); ++i)
        gens.push_back(parse_poly(resolve(inputs[i]), vars, dom));
      bool in = radical_member_field(f0, gens, policy);
      Json j;
      j["status"] = in ? "Member" : "NotMember";
      emit(j, opt.text, std::string(in ? "Member" : "NotMember") + "\n");
      return 0;
    }

    if (c_radconst->parsed()) {
      if (inputs.empty())
        throw Error("need r_0 and the ideal constants");
      auto elems = parse_elems(inputs.size() == 1 ? inputs[0] : [&] {
        std::string all;
        for (std::size_t i = 0; i < inputs.size(); ++i)
          all += (i ? "," : "") + inputs[i];
        return all;
      }(), dom);
      if (elems.size() < 2)
        throw Error("need r_0 and at least one generator");
      DomainElem r0 = elems.front();
      elems.erase(elems.begin());
      bool in = rad_member_constants(r0, elems);
      Json j;
      j["status"] = in ? "Member" : "NotMember";
      emit(j, opt.text, std::string(in ? "Member" : "NotMember") + "\n");
      return 0;
    }

    if (c_intersect->parsed()) {
      PolyMatrix A = parse_matrix(matrix_text, vars, dom);
      PolyMatrix B = parse_matrix(second_text, vars, dom);
      auto gens = intersect_modules(A, B, policy);
      Json j;
      j["generators"] = Json::array();
      for (const auto& g : gens)
        j["generators"].push_back(poly_vector_to_json(g, vars));
      emit(j, opt.text, "generators:\n" + render_gens(gens, vars));
      return 0;
    }

    if (c_colon->parsed()) {
      PolyMatrix Mp = parse_matrix(matrix_text, vars, dom);
      PolyMatrix M = parse_matrix(second_text, vars, dom);
      PolyVector gens = colon_modules(Mp, M, policy);
      Json j;
      j["generators"] = poly_vector_to_json(gens, vars);
      std::ostringstream rep;
      rep << "generators:";
      for (const auto& g : gens)
        rep << " " << print_poly(g, vars);
      rep << "\n";
      emit(j, opt.text, rep.str());
      return 0;
    }

    if (c_paramsyz->parsed()) {
      auto params = opt.params();
      if (params.empty())
        throw Error("paramsyz needs --params");
      std::vector<std::string> all = params;
      all.insert(all.end(), vars.begin(), vars.end());
      PolyMatrix A = parse_matrix(matrix_text, all, dom);
      long cap = opt.cap >= 0 ? opt.cap : 1;
      ParamFamily fam = build_param_syzygies(A, (unsigned)params.size(),
                                             (unsigned)vars.size(), cap);
      emit(family_to_json(fam), opt.text, family_report(fam, params, vars));
      return 0;
    }

    if (c_evalparam->parsed()) {
      std::string text;
      if (matrix_text == "-") {
        text = slurp_stdin();
      } else {
        std::ifstream in(matrix_text);
        if (!in)
          throw Error("cannot open family file '" + matrix_text + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
      }
      ParamFamily fam = family_from_json(Json::parse(text));
      DomainVector c = parse_elems(at_text, dom);
      if (c.size() != fam.nparams)
        throw Error("expected " + std::to_string(fam.nparams) +
                    " parameter values");
      const auto& br = fam.select(dom, c);
      Json j;
      j["guard"] = formula_to_json(br.guard);
      j["generators"] = Json::array();
      std::vector<PolyVector> gens;
      for (const auto& gv : br.gens) {
        PolyVector y;
        for (const auto& p : gv)
          y.push_back(p.eval(dom, c));
        j["generators"].push_back(poly_vector_to_json(
            y, vars.empty() ? std::vector<std::string>(fam.nvars_x, "X")
                            : vars));
        gens.push_back(std::move(y));
      }
      emit(j, opt.text,
           "generators:\n" +
               render_gens(gens, vars.empty()
                                     ? std::vector<std::string>(fam.nvars_x,
                                                                "X")
                                     : vars));
      return 0;
    }

    if (c_bounds->parsed()) {
      Json j;
      Integer beta = bounds::beta_field(bN, bd);
      j["beta_field"] = beta.get_str();
      j["kollar"] = bounds::kollar(bN, bd).get_str();
      unsigned long bl = beta.fits_ulong_p() ? beta.get_ui() : 0;
      j["rows"] = bounds::unroll_rows(bN, bl, bd).get_str();
      j["cols"] = bounds::unroll_cols(bN, bl, bn).get_str();
      j["gamma"] = bounds::gamma(bN, bd, bn).get_str();
      std::ostringstream rep;
      rep << "beta_field = " << j["beta_field"].get<std::string>()
          << "\nkollar = " << j["kollar"].get<std::string>()
          << "\nrows = " << j["rows"].get<std::string>()
          << "\ncols = " << j["cols"].get<std::string>()
          << "\ngamma = " << j["gamma"].get<std::string>() << "\n";
      emit(j, opt.text, rep.str());
      return 0;
    }

    throw Error("no subcommand dispatched");
  } catch (const ParseError& e) {
    Json err;
    err["error"] = "parse";
    err["message"] = e.what();
    err["position"] = e.position;
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "input";
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
