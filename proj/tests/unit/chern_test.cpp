#include <doctest.h>

#include "../oracles.hpp"
#include "symloci/chern.hpp"
#include "symloci/locus.hpp"
#include "symloci/schur.hpp"

using namespace symloci;

namespace {

// prod_{i<=j} (x_i + x_j) prod_{i,j} (x_i + y_j), built by hand
Poly by_hand(const ModelContext& m, bool vee) {
  const ContextPtr& ctx = m.context();
  auto f = ctx->block_slots("f");
  auto k = ctx->block_slots("k");
  return oracle::pair_sums(ctx, f, vee) * oracle::cross(ctx, f, k);
}

}  // namespace

TEST_CASE("three forms of the top Chern classes agree") {
  for (int f = 1; f <= 4; ++f) {
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(f);
      CAPTURE(n);
      ModelContext m = ModelContext::surjection(f, n);
      Poly vee = ctop_vee(m);
      CHECK(vee == by_hand(m, true));
      CHECK(ctop_vee_skew(m) == vee);
      CHECK(ctop_product_oracle(m, Kernel::vee) == vee);
      CHECK(vee.is_homogeneous());
      CHECK(vee.total_degree() == f * (f + 1) / 2 + n * f);

      Poly wedge = ctop_wedge(m);
      CHECK(wedge == by_hand(m, false));
      CHECK(ctop_wedge_skew(m) == wedge);
      CHECK(ctop_product_oracle(m, Kernel::wedge) == wedge);
      CHECK(wedge.total_degree() == f * (f - 1) / 2 + n * f);
    }
  }
}

TEST_CASE("small top Chern classes") {
  ModelContext m = ModelContext::surjection(1, 1);
  Poly x = m.base('F').root(0);
  Poly y = m.base('K').root(0);
  CHECK(ctop_vee(m) == x.scaled(2) * (x + y));
  CHECK(ctop_vee_skew(m) == (x.pow(2) + x * y).scaled(2));

  ModelContext m2 = ModelContext::surjection(2, 0);
  Alphabet f2 = m2.base('F');
  CHECK(ctop_wedge_skew(m2) == f2.root(0) + f2.root(1));
  CHECK(ctop_product_oracle(m2, Kernel::wedge) == f2.root(0) + f2.root(1));
  CHECK(ctop_vee(m2) == ctop_sym2(f2));
  CHECK(ctop_wedge(m2) == ctop_wedge2(f2));

  ModelContext m3 = ModelContext::surjection(2, 1);
  Alphabet f3 = m3.base('F');
  Poly x1 = f3.root(0);
  Poly x2 = f3.root(1);
  Poly z = m3.base('K').root(0);
  CHECK(ctop_product_oracle(m3, Kernel::vee) == x1.scaled(2) * (x1 + x2) * x2.scaled(2) * (x1 + z) * (x2 + z));
}

TEST_CASE("tensor, symmetric and exterior squares") {
  for (int e = 0; e <= 3; ++e) {
    for (int f = 0; f <= 3; ++f) {
      ContextPtr ctx = VarContext::create({{"a", e, true}, {"b", f, true}});
      Alphabet a = Alphabet::of_block(ctx, "a");
      Alphabet b = Alphabet::of_block(ctx, "b");
      CHECK(ctop_tensor(a, b) == oracle::cross(ctx, a.slots(), b.slots()));
      CHECK(product_of_sums(a, b) == oracle::cross(ctx, a.slots(), b.slots()));
    }
  }
  ContextPtr ctx = VarContext::create({{"a", 2, true}});
  Alphabet a = Alphabet::of_block(ctx, "a");
  CHECK(ctop_sym2(a) == (a.root(0) * a.root(1) * (a.root(0) + a.root(1))).scaled(4));
  CHECK(ctop_wedge2(a) == a.root(0) + a.root(1));
  ContextPtr one = VarContext::create({{"a", 1, true}});
  CHECK(ctop_wedge2(Alphabet::of_block(one, "a")) == Poly(one, 1));
}

TEST_CASE("top Chern class equals the rank-zero locus") {
  for (int f = 1; f <= 4; ++f) {
    for (int n = 0; n <= 2; ++n) {
      ModelContext m = ModelContext::surjection(f, n);
      CHECK(expression_to_poly(class_of({f + n, f, 0, Symmetry::symmetric}), m) == ctop_vee(m));
      LocusProblem skew{f + n, f, 0, Symmetry::skew};
      CHECK(expression_to_poly(class_of(skew), m) == ctop_wedge(m));
    }
  }
}

TEST_CASE("independent model is rejected") {
  ModelContext m = ModelContext::independent(3, 2);
  CHECK_THROWS(ctop_vee(m));
}
