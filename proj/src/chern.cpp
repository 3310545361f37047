#include "symloci/chern.hpp"

#include <stdexcept>

#include "symloci/schur.hpp"

namespace symloci {

namespace {

void require_surjection(const ModelContext& model) {
  if (model.mode() != ModelMode::surjection) throw std::invalid_argument("this formula needs the surjection model E = F + K");
}

// (e, e-1, ..., low) as a partition with `length` parts.
Partition descending_run(int top, int length) {
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) parts.push_back(top - i);
  return Partition(parts);
}

Poly q_or_p_sum(const ModelContext& model, Kernel kind) {
  require_surjection(model);
  const int f = model.f();
  const int n = model.n();
  VirtualAlphabet F = model.bundle("F");
  VirtualAlphabet EmF = model.bundle("E-F");
  const Partition shift = kind == Kernel::vee ? staircase(f) : staircase(std::max(f - 1, 0));
  Poly out(model.context());
  for (const Partition& i : rectangle_partitions(f, n)) {
    Poly s = schur_s(complement_conjugate(i, n, f), EmF);
    if (s.is_zero()) continue;
    Partition k = add(shift, i);
    out += (kind == Kernel::vee ? schur_q(k, F) : schur_p(k, F)) * s;
  }
  return out;
}

Poly skew_sum(const ModelContext& model, Kernel kind) {
  require_surjection(model);
  const int f = model.f();
  const int e = model.e();
  VirtualAlphabet F = model.bundle("F");
  VirtualAlphabet EmF = model.bundle("E-F");
  const Partition t = kind == Kernel::vee ? descending_run(e, f) : descending_run(e - 1, f);
  Poly out(model.context());
  for (const Partition& i : partitions_inside(t)) {
    Poly s = schur_s(conjugate(i), EmF);
    if (s.is_zero()) continue;
    out += schur_skew(t, i, F) * s;
  }
  return kind == Kernel::vee ? out.scaled(pow2(f)) : out;
}

}  // namespace

Poly product_of_sums(const Alphabet& a, const Alphabet& b) {
  ContextPtr ctx = a.context() ? a.context() : b.context();
  Poly out(ctx, Scalar(1));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) out *= a.root(i) + b.root(j);
  }
  return out;
}

Poly ctop_tensor(const Alphabet& e, const Alphabet& f) {
  ContextPtr ctx = e.context() ? e.context() : f.context();
  Poly out(ctx);
  for (const Partition& i : rectangle_partitions(e.size(), f.size())) {
    out += schur_s(i, e) * schur_s(complement_conjugate(i, f.size(), e.size()), f);
  }
  return out;
}

Poly ctop_sym2(const Alphabet& e) { return schur_q(staircase(e.size()), e); }

Poly ctop_wedge2(const Alphabet& e) { return schur_p(staircase(std::max(e.size() - 1, 0)), e); }

Poly ctop_vee(const ModelContext& model) { return q_or_p_sum(model, Kernel::vee); }
Poly ctop_wedge(const ModelContext& model) { return q_or_p_sum(model, Kernel::wedge); }
Poly ctop_vee_skew(const ModelContext& model) { return skew_sum(model, Kernel::vee); }
Poly ctop_wedge_skew(const ModelContext& model) { return skew_sum(model, Kernel::wedge); }

Poly ctop_product_oracle(const ModelContext& model, Kernel kind) {
  require_surjection(model);
  Alphabet x = model.base('F');
  Alphabet y = model.base('K');
  Poly out(model.context(), Scalar(1));
  for (int i = 0; i < x.size(); ++i) {
    for (int j = kind == Kernel::vee ? i : i + 1; j < x.size(); ++j) out *= x.root(i) + x.root(j);
  }
  return out * product_of_sums(x, y);
}

}  // namespace symloci
