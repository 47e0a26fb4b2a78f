#include <doctest.h>

#include <functional>

#include "bezlin/json_io.hpp"
#include "bezlin/parse.hpp"
#include "bezlin/qf.hpp"
#include "util.hpp"

using namespace bezlin;
using namespace bezlin::testutil;

namespace {
const auto Z = DomainDescriptor::integers();
DomainVector at(std::initializer_list<long> xs) {
  DomainVector v;
  for (long x : xs)
    v.push_back(DomainElem::from_int(Z, x));
  return v;
}
GcdTerm::Ptr C(unsigned i) { return GcdTerm::param(i); }
} // namespace

TEST_CASE("hash consing gives pointer equality") {
  auto a = GcdTerm::add(C(0), GcdTerm::one());
  auto b = GcdTerm::add(C(0), GcdTerm::one());
  CHECK(a.get() == b.get());
  CHECK(GcdTerm::constant(7).get() == GcdTerm::constant(7).get());
  CHECK(a.get() != GcdTerm::add(GcdTerm::one(), C(0)).get());
}

TEST_CASE("eval_term") {
  CHECK(eval_term(GcdTerm::colon(C(1), C(0)), Z, at({2, 3})) ==
        DomainElem::from_int(Z, 3));
  CHECK(eval_term(GcdTerm::mul(C(0), GcdTerm::sub(C(1), GcdTerm::one())), Z,
                  at({5, 3})) == DomainElem::from_int(Z, 10));
  CHECK_THROWS_AS(eval_term(C(2), Z, at({1})), ShapeError);
}

TEST_CASE("simplify") {
  auto t1 = simplify(GcdTerm::mul(GcdTerm::add(C(0), GcdTerm::zero()),
                                  GcdTerm::one()));
  CHECK(t1.get() == C(0).get());
  auto t2 = simplify(GcdTerm::colon(GcdTerm::zero(), GcdTerm::zero()));
  CHECK(t2->is_const(1));
  auto t3 = simplify(GcdTerm::sub(GcdTerm::one(), GcdTerm::one()));
  CHECK(t3->is_const(0));
}

TEST_CASE("simplify preserves evaluation on random terms") {
  Rng rng(0x51f1u);
  for (int it = 0; it < 1000; ++it) {
    // random term over 2 params, depth ~ 4
    std::function<GcdTerm::Ptr(int)> gen = [&](int depth) -> GcdTerm::Ptr {
      long pick = rand_int(rng, 0, depth <= 0 ? 1 : 5);
      switch (pick) {
      case 0:
        return GcdTerm::constant(rand_int(rng, -4, 4));
      case 1:
        return C((unsigned)rand_int(rng, 0, 1));
      case 2:
        return GcdTerm::add(gen(depth - 1), gen(depth - 1));
      case 3:
        return GcdTerm::sub(gen(depth - 1), gen(depth - 1));
      case 4:
        return GcdTerm::mul(gen(depth - 1), gen(depth - 1));
      default:
        return GcdTerm::colon(gen(depth - 1), gen(depth - 1));
      }
    };
    auto t = gen(4);
    auto s = simplify(t);
    auto c = at({rand_int(rng, -20, 20), rand_int(rng, -20, 20)});
    REQUIRE(eval_term(t, Z, c) == eval_term(s, Z, c));
  }
}

TEST_CASE("formula evaluation") {
  auto f = QfFormula::eq0(C(0));
  CHECK(eval_formula(f, Z, at({0})));
  CHECK_FALSE(eval_formula(f, Z, at({3})));
  auto r = QfFormula::rad_atom(C(0), C(1));
  CHECK(eval_formula(r, Z, at({2, 8})));
  CHECK_FALSE(eval_formula(r, Z, at({2, 12})));
  CHECK(eval_formula(QfFormula::neg(QfFormula::truth(false)), Z, {}));
}

TEST_CASE("formula constant folding") {
  CHECK(QfFormula::eq0(GcdTerm::one())->kind == QfFormula::Kind::False);
  CHECK(QfFormula::eq0(GcdTerm::zero())->kind == QfFormula::Kind::True);
  CHECK(QfFormula::conj({QfFormula::truth(true), QfFormula::eq0(C(0))})->kind ==
        QfFormula::Kind::Eq0);
  CHECK(QfFormula::conj({QfFormula::truth(false), QfFormula::eq0(C(0))})
            ->kind == QfFormula::Kind::False);
}

TEST_CASE("parametric kernel of a row: branches and evaluation") {
  auto fam = build_param_kernel_row(TermRow{C(0), C(1)}, 2);
  REQUIRE(fam.branches.size() == 2);

  // zero branch at (0,0)
  const auto& z = fam.select(Z, at({0, 0}));
  REQUIRE(z.gens.size() == 2);
  CHECK(z.gens[0][0].eval(Z, at({0, 0})) == MultiPoly::constant(Z, 0,
        DomainElem::one(Z)));

  // nonzero branch at (2,3): generator evaluates to (3,-2)
  const auto& nz = fam.select(Z, at({2, 3}));
  REQUIRE(nz.gens.size() == 1);
  auto y0 = nz.gens[0][0].eval(Z, at({2, 3}));
  auto y1 = nz.gens[0][1].eval(Z, at({2, 3}));
  CHECK(y0 == MultiPoly::constant(Z, 0, DomainElem::from_int(Z, 3)));
  CHECK(y1 == MultiPoly::constant(Z, 0, DomainElem::from_int(Z, -2)));
}

TEST_CASE("unsatisfiable zero branch is pruned syntactically") {
  auto fam = build_param_kernel_row(TermRow{GcdTerm::one(), C(0)}, 1);
  REQUIRE(fam.branches.size() == 1);
  CHECK(fam.branches[0].guard->kind == QfFormula::Kind::True);
}

TEST_CASE("constant matrix families verify against the oracle") {
  Rng rng(0x7e0du);
  for (int it = 0; it < 30; ++it) {
    std::size_t m = (std::size_t)rand_int(rng, 1, 2);
    std::size_t n = (std::size_t)rand_int(rng, 2, 4);
    unsigned M = 2;
    // entries: random degree-<=1 polynomials in the parameters
    PolyMatrix A;
    for (std::size_t i = 0; i < m; ++i) {
      PolyVector row;
      for (std::size_t j = 0; j < n; ++j)
        row.push_back(rand_poly(rng, Z, M, 1, -5, 5, 3));
      A.push_back(row);
    }
    auto fam = build_param_kernel_matrix(A);
    CHECK(fam.branches.size() <= (std::size_t)(1 << (2 * m)));
    for (int k = 0; k < 20; ++k) {
      auto c = at({rand_int(rng, -100, 100), rand_int(rng, -100, 100)});
      auto rep = verify_family(fam, A, M, 0, c);
      REQUIRE(rep.coverage);
      REQUIRE(rep.soundness);
      REQUIRE(rep.completeness);
    }
  }
}

TEST_CASE("adversarial family fails completeness") {
  PolyMatrix A{{MultiPoly::variable(Z, 2, 0), MultiPoly::variable(Z, 2, 1)}};
  auto fam = build_param_kernel_matrix(A);
  // delete all generators of the nonzero branch
  for (auto& br : fam.branches)
    if (br.guard->kind != QfFormula::Kind::And)
      br.gens.clear();
  auto rep = verify_family(fam, A, 2, 0, at({6, 4}));
  CHECK(rep.coverage);
  CHECK_FALSE(rep.completeness);
}

TEST_CASE("parametric syzygies of [[C1, X]]") {
  // one parameter, one X variable
  PolyMatrix A{{MultiPoly::variable(Z, 2, 0), MultiPoly::variable(Z, 2, 1)}};
  auto fam = build_param_syzygies(A, 1, 1, 1);
  auto rep = verify_family(fam, A, 1, 1, at({2}));
  REQUIRE(rep.ok());
  // evaluated branch generates span{(X, -2)}
  const auto& br = fam.select(Z, at({2}));
  std::vector<PolyVector> gens;
  for (const auto& gv : br.gens) {
    PolyVector y;
    for (const auto& p : gv)
      y.push_back(p.eval(Z, at({2})));
    gens.push_back(y);
  }
  std::vector<std::string> X1{"X"};
  CHECK(same_poly_span(gens, {{parse_poly("X", X1, Z),
                               parse_poly("-2", X1, Z)}}));

  Rng rng(0x50a1u);
  for (int k = 0; k < 50; ++k) {
    auto c = at({rand_int(rng, -50, 50)});
    REQUIRE(verify_family(fam, A, 1, 1, c).ok());
  }
}

TEST_CASE("parametric syzygies of [[C1*X, C2*X]]") {
  auto c1x = MultiPoly::variable(Z, 3, 0) * MultiPoly::variable(Z, 3, 2);
  auto c2x = MultiPoly::variable(Z, 3, 1) * MultiPoly::variable(Z, 3, 2);
  PolyMatrix A{{c1x, c2x}};
  auto fam = build_param_syzygies(A, 2, 1, 1);
  Rng rng(0xc15cu);
  for (int k = 0; k < 20; ++k) {
    auto c = at({rand_int(rng, -30, 30), rand_int(rng, -30, 30)});
    auto rep = verify_family(fam, A, 2, 1, c);
    REQUIRE(rep.ok());
  }
  // coprime point: (c2, -c1) must lie in the family's span
  auto c = at({3, 5});
  const auto& br = fam.select(Z, c);
  std::vector<PolyVector> gens;
  for (const auto& gv : br.gens) {
    PolyVector y;
    for (const auto& p : gv)
      y.push_back(p.eval(Z, c));
    gens.push_back(y);
  }
  PolyVector target{MultiPoly::constant(Z, 1, DomainElem::from_int(Z, 5)),
                    MultiPoly::constant(Z, 1, DomainElem::from_int(Z, -3))};
  CHECK(module_member(gens, target).is_member());
}

TEST_CASE("family JSON round trip") {
  PolyMatrix A{{MultiPoly::variable(Z, 2, 0), MultiPoly::variable(Z, 2, 1)}};
  auto fam = build_param_syzygies(A, 1, 1, 1);
  auto j = family_to_json(fam);
  auto fam2 = family_from_json(j);
  CHECK(family_to_json(fam2) == j);
  // same behavior at a sample point
  auto c = at({2});
  auto r1 = verify_family(fam2, A, 1, 1, c);
  CHECK(r1.ok());
}

TEST_CASE("term and formula JSON round trips") {
  auto t = GcdTerm::colon(GcdTerm::add(C(0), GcdTerm::constant(-3)), C(1));
  CHECK(term_from_json(term_to_json(t)).get() == t.get());
  auto f = QfFormula::disj({QfFormula::eq0(C(0)),
                            QfFormula::neg(QfFormula::rad_atom(C(0), C(1)))});
  auto f2 = formula_from_json(formula_to_json(f));
  CHECK(formula_to_json(f2) == formula_to_json(f));
}

TEST_CASE("printers") {
  std::vector<std::string> ps{"C1", "C2"};
  CHECK(term_to_string(GcdTerm::colon(C(1), C(0)), ps) == "(C2 : C1)");
  CHECK(formula_to_string(QfFormula::eq0(C(0)), ps) == "C1 = 0");
}
