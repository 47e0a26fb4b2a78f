#include "bezlin/json_io.hpp"

#include "bezlin/parse.hpp"

namespace bezlin {

Json elem_to_json(const DomainElem& e) { return e.str(); }

Json matrix_to_json(const DomainMatrix& A) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j)
      row.push_back(A.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const DomainVector& v) {
  Json arr = Json::array();
  for (const auto& e : v)
    arr.push_back(e.str());
  return arr;
}

Json poly_to_json(const MultiPoly& f, const std::vector<std::string>& vars) {
  return print_poly(f, vars);
}

Json poly_vector_to_json(const PolyVector& v,
                         const std::vector<std::string>& vars) {
  Json arr = Json::array();
  for (const auto& f : v)
    arr.push_back(print_poly(f, vars));
  return arr;
}

Json syzygies_to_json(const SyzygyBasis& basis,
                      const std::vector<std::string>& vars) {
  Json j;
  j["ring"] = basis.dom.name();
  j["degree_cap"] = basis.degree_cap;
  j["complete"] = basis.complete;
  Json gens = Json::array();
  for (const auto& v : basis.vectors)
    gens.push_back(poly_vector_to_json(v, vars));
  j["generators"] = std::move(gens);
  return j;
}

Json verdict_to_json(const MembershipVerdict& v,
                     const std::vector<std::string>& vars) {
  Json j;
  switch (v.status) {
  case MembershipVerdict::Status::Member:
    j["status"] = "Member";
    break;
  case MembershipVerdict::Status::NotMember:
    j["status"] = "NotMember";
    break;
  case MembershipVerdict::Status::Unknown:
    j["status"] = "Unknown";
    break;
  }
  if (!v.certificate.empty()) {
    Json cert = Json::array();
    for (const auto& col : v.certificate)
      cert.push_back(poly_vector_to_json(col, vars));
    j["certificate"] = std::move(cert);
  }
  if (v.failure) {
    switch (*v.failure) {
    case FailureKind::RationalFailure:
      j["failure"] = "RationalFailure";
      break;
    case FailureKind::ModularFailure:
      j["failure"] = "ModularFailure";
      j["failure_prime"] = v.failure_prime;
      break;
    case FailureKind::HomogeneousExact:
      j["failure"] = "HomogeneousExact";
      break;
    }
  }
  j["cap"] = v.cap;
  Json ledger;
  ledger["beta"] = v.ledger_beta.get_str();
  ledger["rows"] = v.ledger_rows.get_str();
  ledger["cols"] = v.ledger_cols.get_str();
  ledger["gamma"] = v.ledger_gamma.get_str();
  j["ledger"] = std::move(ledger);
  return j;
}

Json term_to_json(const GcdTerm::Ptr& t) {
  Json j;
  switch (t->op) {
  case GcdTerm::Op::Const:
    j["const"] = t->value.get_str();
    break;
  case GcdTerm::Op::Param:
    j["param"] = t->index;
    break;
  case GcdTerm::Op::Add:
    j["add"] = Json::array({term_to_json(t->lhs), term_to_json(t->rhs)});
    break;
  case GcdTerm::Op::Sub:
    j["sub"] = Json::array({term_to_json(t->lhs), term_to_json(t->rhs)});
    break;
  case GcdTerm::Op::Mul:
    j["mul"] = Json::array({term_to_json(t->lhs), term_to_json(t->rhs)});
    break;
  case GcdTerm::Op::Colon:
    j["colon"] = Json::array({term_to_json(t->lhs), term_to_json(t->rhs)});
    break;
  }
  return j;
}

GcdTerm::Ptr term_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1)
    throw ParseError("term node must be a one-key object", 0);
  const auto it = j.begin();
  const std::string& key = it.key();
  if (key == "const")
    return GcdTerm::constant(Integer(it.value().get<std::string>()));
  if (key == "param")
    return GcdTerm::param(it.value().get<unsigned>());
  if (it.value().size() != 2)
    throw ParseError("binary term node needs two operands", 0);
  GcdTerm::Ptr a = term_from_json(it.value()[0]);
  GcdTerm::Ptr b = term_from_json(it.value()[1]);
  if (key == "add")
    return GcdTerm::add(a, b);
  if (key == "sub")
    return GcdTerm::sub(a, b);
  if (key == "mul")
    return GcdTerm::mul(a, b);
  if (key == "colon")
    return GcdTerm::colon(a, b);
  throw ParseError("unknown term node '" + key + "'", 0);
}

Json formula_to_json(const QfFormula::Ptr& f) {
  Json j;
  switch (f->kind) {
  case QfFormula::Kind::True:
    return "true";
  case QfFormula::Kind::False:
    return "false";
  case QfFormula::Kind::Eq0:
    j["eq0"] = term_to_json(f->a);
    break;
  case QfFormula::Kind::Rad:
    j["rad"] = Json::array({term_to_json(f->a), term_to_json(f->b)});
    break;
  case QfFormula::Kind::And: {
    Json arr = Json::array();
    for (const auto& c : f->children)
      arr.push_back(formula_to_json(c));
    j["and"] = std::move(arr);
    break;
  }
  case QfFormula::Kind::Or: {
    Json arr = Json::array();
    for (const auto& c : f->children)
      arr.push_back(formula_to_json(c));
    j["or"] = std::move(arr);
    break;
  }
  case QfFormula::Kind::Not:
    j["not"] = formula_to_json(f->children.front());
    break;
  }
  return j;
}

QfFormula::Ptr formula_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "true")
      return QfFormula::truth(true);
    if (s == "false")
      return QfFormula::truth(false);
    throw ParseError("unknown formula literal '" + s + "'", 0);
  }
  if (!j.is_object() || j.size() != 1)
    throw ParseError("formula node must be a one-key object", 0);
  const auto it = j.begin();
  const std::string& key = it.key();
  if (key == "eq0")
    return QfFormula::eq0(term_from_json(it.value()));
  if (key == "rad")
    return QfFormula::rad_atom(term_from_json(it.value()[0]),
                               term_from_json(it.value()[1]));
  if (key == "not")
    return QfFormula::neg(formula_from_json(it.value()));
  if (key == "and" || key == "or") {
    std::vector<QfFormula::Ptr> cs;
    for (const auto& c : it.value())
      cs.push_back(formula_from_json(c));
    return key == "and" ? QfFormula::conj(std::move(cs))
                        : QfFormula::disj(std::move(cs));
  }
  throw ParseError("unknown formula node '" + key + "'", 0);
}

namespace {

Json polyterm_to_json(const PolyTerm& p) {
  Json arr = Json::array();
  for (const auto& [m, t] : p.coeffs) {
    Json e;
    e["monomial"] = m;
    e["coeff"] = term_to_json(t);
    arr.push_back(std::move(e));
  }
  return arr;
}

PolyTerm polyterm_from_json(const Json& j, unsigned nvars_x) {
  PolyTerm p;
  p.nvars_x = nvars_x;
  for (const auto& e : j) {
    Monomial m = e.at("monomial").get<Monomial>();
    if (m.size() != nvars_x)
      throw ParseError("monomial length mismatch", 0);
    p.coeffs.emplace(std::move(m), term_from_json(e.at("coeff")));
  }
  return p;
}

} // namespace

Json family_to_json(const ParamFamily& fam) {
  Json j;
  j["nparams"] = fam.nparams;
  j["n"] = fam.n;
  j["nvars_x"] = fam.nvars_x;
  Json branches = Json::array();
  for (const auto& br : fam.branches) {
    Json b;
    b["guard"] = formula_to_json(br.guard);
    Json gens = Json::array();
    for (const auto& vec : br.gens) {
      Json g = Json::array();
      for (const auto& p : vec)
        g.push_back(polyterm_to_json(p));
      gens.push_back(std::move(g));
    }
    b["generators"] = std::move(gens);
    branches.push_back(std::move(b));
  }
  j["branches"] = std::move(branches);
  return j;
}

ParamFamily family_from_json(const Json& j) {
  ParamFamily fam;
  fam.nparams = j.at("nparams").get<unsigned>();
  fam.n = j.at("n").get<unsigned>();
  fam.nvars_x = j.at("nvars_x").get<unsigned>();
  for (const auto& b : j.at("branches")) {
    ParamFamily::Branch br;
    br.guard = formula_from_json(b.at("guard"));
    for (const auto& g : b.at("generators")) {
      std::vector<PolyTerm> vec;
      for (const auto& p : g)
        vec.push_back(polyterm_from_json(p, fam.nvars_x));
      if (vec.size() != fam.n)
        throw ParseError("generator length mismatch", 0);
      br.gens.push_back(std::move(vec));
    }
    fam.branches.push_back(std::move(br));
  }
  return fam;
}

} // namespace bezlin
