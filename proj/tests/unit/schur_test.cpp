#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "../oracles.hpp"
#include "symloci/schur.hpp"

using namespace symloci;

namespace {

ContextPtr one_block(int n) { return VarContext::create({{"a", n, true}}); }
ContextPtr blocks(int n, int m) { return VarContext::create({{"a", n, true}, {"b", m, true}}); }

std::vector<Partition> up_to(int max_length, int max_weight) {
  std::vector<Partition> out;
  for (const auto& p : partitions_inside(rectangle(max_length, max_weight))) {
    if (p.weight() <= max_weight) out.push_back(p);
  }
  return out;
}

std::vector<Partition> strict_up_to(int max_weight) {
  std::vector<Partition> out;
  for (const auto& p : up_to(max_weight, max_weight)) {
    if (p.is_strict()) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("Schur polynomials of one alphabet agree with tableau sums") {
  for (int n = 1; n <= 4; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    for (const auto& lambda : up_to(n + 1, 6)) {
      CAPTURE(lambda.to_string());
      CHECK(schur_s(lambda, a) == oracle::ssyt(ctx, a.slots(), lambda));
    }
  }
  ContextPtr ctx = one_block(3);
  Alphabet x = Alphabet::of_block(ctx, "a");
  Poly e1 = x.root(0) + x.root(1) + x.root(2);
  Poly e2 = x.root(0) * x.root(1) + x.root(0) * x.root(2) + x.root(1) * x.root(2);
  Poly e3 = x.root(0) * x.root(1) * x.root(2);
  CHECK(schur_s(Partition{2, 1}, x) == e1 * e2 - e3);
}

TEST_CASE("skew Schur polynomials agree with skew tableau sums") {
  for (int n = 1; n <= 3; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    for (const auto& lambda : up_to(3, 5)) {
      for (const auto& mu : partitions_inside(lambda)) {
        CAPTURE(lambda.to_string());
        CAPTURE(mu.to_string());
        CHECK(schur_skew(lambda, mu, a) == oracle::ssyt(ctx, a.slots(), lambda, mu));
      }
      CHECK(schur_skew(lambda, Partition(), a) == schur_s(lambda, a));
      CHECK(schur_skew(lambda, lambda, a) == Poly(ctx, 1));
    }
  }
  ContextPtr ctx = one_block(2);
  CHECK_THROWS(schur_skew(Partition{1}, Partition{2}, Alphabet::of_block(ctx, "a")));
}

TEST_CASE("Schur polynomials of a difference split over the two alphabets") {
  // s_lambda(A - B) = sum_mu s_mu(A) (-1)^{|lambda/mu|} s_{lambda~/mu~}(B)
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      ContextPtr ctx = blocks(n, m);
      Alphabet a = Alphabet::of_block(ctx, "a");
      Alphabet b = Alphabet::of_block(ctx, "b");
      for (const auto& lambda : up_to(4, 5)) {
        Poly want(ctx);
        for (const auto& mu : partitions_inside(lambda)) {
          Poly t = oracle::ssyt(ctx, a.slots(), mu) * oracle::ssyt(ctx, b.slots(), conjugate(lambda), conjugate(mu));
          want += (lambda.weight() - mu.weight()) % 2 == 0 ? t : -t;
        }
        CAPTURE(lambda.to_string());
        CHECK(schur_s(lambda, VirtualAlphabet(a, b)) == want);
      }
    }
  }
}

TEST_CASE("resultant and rectangle factorization") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      ContextPtr ctx = blocks(n, m);
      Alphabet a = Alphabet::of_block(ctx, "a");
      VirtualAlphabet ab(a, Alphabet::of_block(ctx, "b"));
      Poly base = schur_s(rectangle(n, m), ab);
      CHECK(base == oracle::cross(ctx, a.slots(), ctx->block_slots("b"), -1));
      for (const auto& i : up_to(n, 4)) CHECK(schur_s(add(rectangle(n, m), i), ab) == base * schur_s(i, a));
    }
  }
  ContextPtr ctx = blocks(1, 1);
  CHECK(schur_s(Partition{1}, VirtualAlphabet(Alphabet::of_block(ctx, "a"), Alphabet::of_block(ctx, "b"))).to_string() ==
        "a1 - b1");
}

TEST_CASE("Q and P polynomials agree with marked shifted tableaux") {
  for (int n = 1; n <= 3; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    for (const auto& lambda : strict_up_to(6)) {
      CAPTURE(lambda.to_string());
      CHECK(schur_q(lambda, a) == oracle::shifted(ctx, a.slots(), lambda, false));
      CHECK(schur_p(lambda, a) == oracle::shifted(ctx, a.slots(), lambda, true));
    }
  }
  ContextPtr ctx = one_block(2);
  Alphabet a = Alphabet::of_block(ctx, "a");
  Poly a1 = a.root(0);
  Poly a2 = a.root(1);
  CHECK(schur_q(Partition{2, 1}, a) == (a1 * a2 * (a1 + a2)).scaled(4));
  CHECK(schur_p(Partition{2, 1}, a) == a1 * a2 * (a1 + a2));
  CHECK(schur_p(Partition{1}, a) == a1 + a2);
  CHECK(schur_q(Partition{3}, a) == q_sym(3, a));
  CHECK_THROWS(schur_q(Partition{2, 2}, a));
}

TEST_CASE("staircase identities") {
  for (int n = 1; n <= 4; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    Poly q = schur_q(staircase(n), a);
    CHECK(q == oracle::pair_sums(ctx, a.slots(), true));
    CHECK(q == schur_s(staircase(n), a).scaled(pow2(n)));
    CHECK(schur_p(staircase(n - 1), a) == oracle::pair_sums(ctx, a.slots(), false));
    CHECK(schur_p(staircase(n - 1), a) == schur_s(staircase(n - 1), a));
  }
  for (int q = 1; q <= 4; ++q) {
    for (int size = 1; size <= 6; ++size) {
      ContextPtr ctx = one_block(size);
      Alphabet a = Alphabet::of_block(ctx, "a");
      CHECK(schur_p(staircase(q), a) == schur_s(staircase(q), a));
    }
  }
}

TEST_CASE("Q factorization off a staircase") {
  for (int n = 1; n <= 4; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    Poly q_full = schur_q(staircase(n), a);
    Poly q_short = schur_q(staircase(n - 1), a);
    Poly p_short = schur_p(staircase(n - 1), a);
    for (const auto& i : up_to(n, 4)) {
      CAPTURE(i.to_string());
      Poly s = schur_s(i, a);
      CHECK(schur_q(add(staircase(n), i), a) == q_full * s);
      CHECK(schur_p(add(staircase(n - 1), i), a) == p_short * s);
      // Adding a part of length n lengthens rho_{n-1}, which costs a factor 2.
      const bool longer = static_cast<int>(i.length()) == n;
      CHECK(schur_q(add(staircase(n - 1), i), a) == (q_short * s).scaled(longer ? 2 : 1));
    }
  }
}

TEST_CASE("P-integrality") {
  for (int n = 1; n <= 4; ++n) {
    ContextPtr ctx = one_block(n);
    Alphabet a = Alphabet::of_block(ctx, "a");
    for (const auto& lambda : strict_up_to(7)) {
      CHECK(schur_q(lambda, a).scaled(pow2(-static_cast<int>(lambda.length()))).has_integer_coefficients());
    }
  }
}

TEST_CASE("expansion in the Schur basis") {
  ContextPtr ctx = one_block(3);
  Alphabet a = Alphabet::of_block(ctx, "a");
  std::map<Partition, Scalar> two{{Partition{2}, Scalar(1)}, {Partition{1, 1}, Scalar(1)}};
  CHECK(expand_schur_basis(schur_s(Partition{2}, a) + schur_s(Partition{1, 1}, a), "a").coefficients == two);
  CHECK(expand_schur_basis(schur_s(Partition{1}, a).pow(2), "a").coefficients == two);
  CHECK(expand_schur_basis(Poly(ctx), "a").coefficients.empty());
  CHECK_THROWS_AS(expand_schur_basis(a.root(0), "a"), NotSymmetric);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<Partition, Scalar> want;
    Poly p(ctx);
    for (const auto& lambda : up_to(3, 6)) {
      int c = coeff(rng);
      if (c == 0) continue;
      want.emplace(lambda, Scalar(c));
      p += oracle::ssyt(ctx, a.slots(), lambda).scaled(c);
    }
    CHECK(expand_schur_basis(p, "a").coefficients == want);
  }
  SchurExpansion x;
  x.coefficients = {{Partition{2}, Scalar(-1)}, {Partition{1, 1}, Scalar(3)}, {Partition{3}, Scalar(1)}};
  CHECK(x.to_string("E") == "1 * s[3](E)\n-1 * s[2](E)\n3 * s[1,1](E)\n");
}

TEST_CASE("expansion in products of two Schur bases") {
  ContextPtr ctx = VarContext::create({{"f", 2, true}, {"e", 3, true}});
  Alphabet f = Alphabet::of_block(ctx, "f");
  Alphabet e = Alphabet::of_block(ctx, "e");
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<std::pair<Partition, Partition>, Scalar> want;
    Poly p(ctx);
    for (const auto& i : up_to(2, 3)) {
      for (const auto& j : up_to(3, 3)) {
        int c = coeff(rng);
        if (c == 0) continue;
        want.emplace(std::pair{i, j}, Scalar(c));
        p += (oracle::ssyt(ctx, f.slots(), i) * oracle::ssyt(ctx, e.slots(), j)).scaled(c);
      }
    }
    CHECK(expand_schur_pair(p, "f", "e").coefficients == want);
  }
}

TEST_CASE("determinant") {
  ContextPtr ctx = one_block(2);
  Alphabet a = Alphabet::of_block(ctx, "a");
  Poly x = a.root(0);
  Poly y = a.root(1);
  CHECK(determinant({{x, y}, {y, x}}) == x * x - y * y);
  CHECK(determinant({}) == Poly(nullptr, 1));
  CHECK(determinant({{x, y, Poly(ctx, 1)}, {Poly(ctx, 2), x, y}, {Poly(ctx), Poly(ctx, 1), x}}) ==
        x * (x * x - y) - y * (x.scaled(2)) + Poly(ctx, 2));
}

TEST_CASE("Q tables persist in a cache directory") {
  auto dir = std::filesystem::temp_directory_path() / "symloci-qcache-test";
  std::filesystem::remove_all(dir);
  set_q_cache_dir(dir);
  Partition shape{4, 2, 1};
  Poly first;
  {
    ContextPtr ctx = one_block(3);
    first = schur_q(shape, Alphabet::of_block(ctx, "a"));
  }
  auto file = dir / "Q-r3-4-2-1.txt";
  REQUIRE(std::filesystem::exists(file));
  {
    ContextPtr ctx = one_block(3);
    Poly again = schur_q(shape, Alphabet::of_block(ctx, "a"));
    CHECK(again.to_string() == first.to_string());
    // dual roots read the same table with signs
    Poly dual = schur_q(shape, Alphabet::of_block(ctx, "a").dual());
    CHECK(dual == again.scaled(shape.weight() % 2 == 0 ? 1 : -1));
  }
  {
    std::ofstream(file) << "symloci-qcache 0\n1 9 9 9\n";
    ContextPtr ctx = one_block(3);
    CHECK(schur_q(shape, Alphabet::of_block(ctx, "a")).to_string() == first.to_string());
  }
  set_q_cache_dir({});
  std::filesystem::remove_all(dir);
}
