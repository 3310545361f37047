#include <doctest.h>

#include "../oracles.hpp"
#include "symloci/locus.hpp"
#include "symloci/schur.hpp"

using namespace symloci;

namespace {

std::vector<LocusProblem> valid_problems(int max_e) {
  std::vector<LocusProblem> out;
  for (int e = 1; e <= max_e; ++e) {
    for (int f = 1; f <= e; ++f) {
      for (int r = 0; r <= f; ++r) {
        for (Symmetry s : {Symmetry::symmetric, Symmetry::skew}) {
          if (s == Symmetry::skew && e == f && r % 2 == 1) continue;
          out.push_back({e, f, r, s});
        }
      }
    }
  }
  return out;
}

const char* kEightFourTwo =
    "Q[6,5](F) + Q[6,4](F)*s[1](E-F) + Q[5,4](F)*s[2](E-F) + Q[6,3](F)*s[1,1](E-F)"
    " + Q[5,3](F)*s[2,1](E-F) + Q[6,2](F)*s[1,1,1](E-F) + Q[5,2](F)*s[2,1,1](E-F)"
    " + Q[4,3](F)*s[2,2](E-F) + Q[6,1](F)*s[1,1,1,1](E-F) + Q[4,2](F)*s[2,2,1](E-F)"
    " + Q[5,1](F)*s[2,1,1,1](E-F) + Q[4,1](F)*s[2,2,1,1](E-F) + Q[3,2](F)*s[2,2,2](E-F)"
    " + Q[3,1](F)*s[2,2,2,1](E-F) + Q[2,1](F)*s[2,2,2,2](E-F)";

}  // namespace

TEST_CASE("problem validation") {
  CHECK_NOTHROW(LocusProblem{4, 3, 2, Symmetry::symmetric}.validate());
  CHECK_THROWS_WITH(LocusProblem({3, 3, 1, Symmetry::skew}).validate(), "skew with e=f requires even r");
  CHECK_THROWS(LocusProblem({2, 3, 1, Symmetry::symmetric}).validate());
  CHECK_THROWS(LocusProblem({3, 2, 3, Symmetry::symmetric}).validate());
  CHECK_THROWS(parse_symmetry("hermitian"));
  CHECK(parse_symmetry("skew") == Symmetry::skew);
}

TEST_CASE("codimension") {
  CHECK(expected_codim({4, 3, 2, Symmetry::symmetric}) == 2);
  CHECK(expected_codim({5, 4, 2, Symmetry::skew}) == 3);
  CHECK(expected_codim({5, 4, 4, Symmetry::skew}) == 0);
}

TEST_CASE("small classes") {
  CHECK(class_of({4, 3, 2, Symmetry::symmetric}).to_string() == "Q[2](F) + Q[1](F)*s[1](E-F)");
  CHECK(class_of({5, 3, 2, Symmetry::symmetric}).to_string() == "Q[3](F) + Q[2](F)*s[1](E-F) + Q[1](F)*s[1,1](E-F)");
  CHECK(class_of({4, 3, 2, Symmetry::skew}).to_string() == "P[1](F) + s[1](E-F)");
  CHECK(class_of({5, 3, 2, Symmetry::skew}).to_string() == "P[2](F) + P[1](F)*s[1](E-F) + s[1,1](E-F)");
  CHECK(class_of({5, 4, 2, Symmetry::skew}).to_string() == "P[2,1](F) + P[2](F)*s[1](E-F) + P[1](F)*s[2](E-F)");
  for (int f = 2; f <= 8; f += 2) CHECK(class_of({f + 1, f, f - 1, Symmetry::skew}).to_string() == "P[1](F)");
  CHECK(class_of({4, 2, 1, Symmetry::skew}).to_string() == "P[2](F) + P[1](F)*s[1](E-F)");
  CHECK(class_of({4, 3, 3, Symmetry::symmetric}).to_string() == "1");
}

TEST_CASE("rank two on eight by four") {
  LocusProblem p{8, 4, 2, Symmetry::symmetric};
  ClassExpression x = class_of(p);
  CHECK(x.terms.size() == 15);
  CHECK(x == ClassExpression::parse(kEightFourTwo, 8, 4));
  bool found = false;
  for (const auto& t : x.terms) found |= t.l == Partition{2, 2, 1, 1} && t.k == Partition{4, 1};
  CHECK(found);
}

TEST_CASE("expression text round trip") {
  for (const auto& p : valid_problems(6)) {
    ClassExpression x = class_of(p);
    CHECK(ClassExpression::parse(x.to_string(), p.e, p.f, x.kind) == x);
  }
  ClassExpression y = ClassExpression::parse("2*Q[2](F) - Q[1](F)*s[1](E-F) + 1/2", 4, 3);
  CHECK(y.to_string() == "2*Q[2](F) - Q[1](F)*s[1](E-F) + 1/2");
  CHECK(ClassExpression::parse("0", 3, 2).terms.empty());
  CHECK_THROWS(ClassExpression::parse("Q[2](F) + P[1](F)", 4, 3));
  CHECK_THROWS(ClassExpression::parse("Q[2,2](F)", 4, 3));
}

TEST_CASE("closed form: degrees, integrality and the mnemonic") {
  for (const auto& p : valid_problems(8)) {
    CAPTURE(p.to_string());
    ClassExpression x = class_of(p);
    for (const auto& t : x.terms) {
      CHECK(t.k.weight() + t.l.weight() == expected_codim(p));
      CHECK(t.coefficient.is_integer());
    }
    if (p.symmetry == Symmetry::skew && p.r % 2 == 1) {
      CHECK_THROWS(class_via_mnemonic(p));
    } else {
      CHECK(class_via_mnemonic(p) == x);
    }
  }
}

TEST_CASE("push-forward reproduces the closed form") {
  for (const auto& p : valid_problems(4)) {
    CAPTURE(p.to_string());
    ModelContext m = ModelContext::surjection(p.f, p.n());
    Poly poly = expression_to_poly(class_of(p), m);
    CHECK(class_via_pushforward(p, m) == poly);
    CHECK(class_via_pushforward(p, m, PushMethod::bialternant) == poly);
    CHECK(poly.has_integer_coefficients());
    if (!poly.is_zero()) CHECK(poly.total_degree() == expected_codim(p));
  }
  LocusProblem full{4, 3, 3, Symmetry::symmetric};
  ModelContext m = ModelContext::surjection(3, 1);
  CHECK(class_via_pushforward(full, m) == Poly(m.context(), 1));
  CHECK_THROWS(class_via_pushforward(full, ModelContext::independent(4, 3)));
}

TEST_CASE("equal ranks") {
  for (int f = 1; f <= 4; ++f) {
    ModelContext m = ModelContext::surjection(f, 0);
    Alphabet F = m.base('F');
    for (int r = 0; r <= f; ++r) {
      const int q = f - r;
      CHECK(expression_to_poly(class_of({f, f, r, Symmetry::symmetric}), m) ==
            oracle::ssyt(m.context(), F.slots(), staircase(q)).scaled(pow2(q)));
      if (r % 2 == 0) {
        CHECK(expression_to_poly(class_of({f, f, r, Symmetry::skew}), m) ==
              oracle::shifted(m.context(), F.slots(), staircase(std::max(q - 1, 0)), true));
      }
    }
  }
}

TEST_CASE("maximal minors and Pfaffians") {
  for (int e = 1; e <= 6; ++e) {
    for (int f = 1; f <= e; ++f) {
      ModelContext m = ModelContext::surjection(f, e - f);
      CHECK(expression_to_poly(class_of({e, f, f - 1, Symmetry::symmetric}), m) ==
            complete_sym(e - f + 1, m.bundle("F-E*")));
    }
  }
  {
    ModelContext m = ModelContext::surjection(3, 1);
    Poly s1e = schur_s(Partition{1}, m.base('E'));
    Poly s1f = schur_s(Partition{1}, m.base('F'));
    CHECK(complete_sym(2, m.bundle("F-E*")) == (s1e * s1f).scaled(2));
  }
  {
    ModelContext m = ModelContext::surjection(3, 2);
    Alphabet E = m.base('E');
    Alphabet F = m.base('F');
    Poly want = (schur_s(Partition{3}, F) + schur_s(Partition{1, 1}, E) * schur_s(Partition{1}, F)).scaled(2);
    CHECK(complete_sym(3, m.bundle("F-E*")) == want);
    CHECK(want == (schur_s(Partition{1}, E) * schur_s(Partition{2}, F) + schur_s(Partition{1, 1, 1}, E)).scaled(2));
  }
  for (auto [e, f, r] : {std::tuple{3, 2, 0}, std::tuple{5, 4, 2}}) {
    ModelContext m = ModelContext::surjection(f, e - f);
    Poly got = expression_to_poly(class_of({e, f, r, Symmetry::skew}), m);
    CHECK(got == oracle::ssyt(m.context(), m.base('E').slots(), staircase(e - r - 1)));
  }
}

TEST_CASE("degrees on projective space") {
  CHECK(projective_degree({1, 1, 1, 1}, {1, 1, 1}, 2, Symmetry::skew) == Scalar(4));
  CHECK(projective_degree({1, 1, 1, 1, 1}, {1, 1, 1}, 2, Symmetry::skew) == Scalar(16));
  CHECK(projective_degree({1, 1, 1, 1}, {1, 1}, 1, Symmetry::skew) == Scalar(8));
  CHECK(projective_degree({1, 1, 1}, {1, 1}, 1, Symmetry::skew) == Scalar(2));
  CHECK(projective_degree({2, 3, 5}, {2, 3}, 2, Symmetry::symmetric) == Scalar(1));
  CHECK(projective_degree({2, 3, 5, 7}, {2, 3, 5}, 2, Symmetry::skew) == Scalar(17));
  CHECK(projective_degree({2, 3, 5, 7, 11}, {2, 3, 5}, 2, Symmetry::skew) == Scalar(17 * 21));
  CHECK(projective_degree({2, 3, 5, 7}, {2, 3}, 1, Symmetry::skew) == Scalar(5 * 17));
  // the symmetric maximal-minor case with e = 2, f = 1, r = 0: s_2(F - E*) = 2 a (a + b)
  CHECK(projective_degree({2, 3}, {2}, 0, Symmetry::symmetric) == Scalar(2 * 2 * 5));
}

TEST_CASE("flag identities on small ranks") {
  for (Symmetry s : {Symmetry::symmetric, Symmetry::skew}) {
    for (auto [f, p, n] : {std::tuple{3, 1, 0}, std::tuple{3, 1, 1}, std::tuple{4, 1, 0}}) {
      IdentityReport rep = verify_flag_identity(s, f, p, n);
      CAPTURE(f);
      CHECK(rep.all_equal());
      CHECK(rep.integral);
      CHECK_FALSE(rep.rhs.is_zero());
    }
  }
  CHECK_THROWS(verify_flag_identity(Symmetry::symmetric, 2, 1, 0));
}
