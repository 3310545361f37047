#include "symloci/locus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "symloci/schur.hpp"

namespace symloci {

std::string to_string(Symmetry s) { return s == Symmetry::symmetric ? "sym" : "skew"; }

Symmetry parse_symmetry(std::string_view text) {
  if (text == "sym" || text == "symmetric") return Symmetry::symmetric;
  if (text == "skew" || text == "skew-symmetric") return Symmetry::skew;
  throw std::invalid_argument("unknown symmetry '" + std::string(text) + "' (expected sym or skew)");
}

void LocusProblem::validate() const {
  if (f < 1) throw std::invalid_argument("f must be at least 1");
  if (e < f) throw std::invalid_argument("e must be at least f");
  if (r < 0 || r > f) throw std::invalid_argument("r must lie between 0 and f");
  if (symmetry == Symmetry::skew && e == f && r % 2 == 1) throw std::invalid_argument("skew with e=f requires even r");
}

std::string LocusProblem::to_string() const {
  return "e=" + std::to_string(e) + " f=" + std::to_string(f) + " r=" + std::to_string(r) + " " + symloci::to_string(symmetry);
}

int expected_codim(const LocusProblem& p) {
  const int q = p.q();
  const int n = p.n();
  return p.symmetry == Symmetry::symmetric ? q * (2 * n + q + 1) / 2 : q * (2 * n + q - 1) / 2;
}

// ---- ClassExpression ----------------------------------------------------------

void ClassExpression::normalize() {
  std::map<std::pair<Partition, Partition>, Scalar> merged;
  for (const auto& t : terms) merged[{t.k, t.l}] += t.coefficient;
  terms.clear();
  for (const auto& [key, c] : merged) {
    if (!c.is_zero()) terms.push_back(Term{key.first, key.second, c});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.k != b.k) return a.k > b.k;
    return a.l > b.l;
  });
}

std::string ClassExpression::to_string() const {
  if (terms.empty()) return "0";
  const char* letter = kind == Kind::Q ? "Q" : "P";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    std::string body;
    if (!t.k.empty()) body = letter + t.k.to_string() + "(F)";
    if (!t.l.empty()) body += (body.empty() ? "" : "*") + std::string("s") + t.l.to_string() + "(E-F)";
    const bool negative = t.coefficient.sign() < 0;
    Scalar mag = negative ? -t.coefficient : t.coefficient;
    std::string term;
    if (body.empty()) {
      term = mag.to_string();
    } else if (mag.is_one()) {
      term = body;
    } else {
      term = mag.to_string() + "*" + body;
    }
    if (i == 0) {
      out += (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

ClassExpression ClassExpression::parse(std::string_view text, int e, int f, Kind default_kind) {
  ClassExpression x;
  x.e = e;
  x.f = f;
  bool kind_seen = false;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("cannot parse expression '" + std::string(text) + "': " + why);
  };
  if (s == "0") {
    x.kind = default_kind;
    return x;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw fail("expected + or -");
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size()) {
      char c = s[end];
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (depth == 0 && (c == '+' || (c == '-' && end > pos))) {
        // `E-F` sits inside parentheses, so a top-level minus separates terms.
        break;
      }
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw fail("empty term");
    Term t{Partition{}, Partition{}, Scalar(sign)};
    std::size_t fp = 0;
    while (fp < term.size()) {
      std::size_t star = fp;
      int d = 0;
      while (star < term.size() && !(term[star] == '*' && d == 0)) {
        if (term[star] == '[' || term[star] == '(') ++d;
        if (term[star] == ']' || term[star] == ')') --d;
        ++star;
      }
      std::string factor = term.substr(fp, star - fp);
      fp = star + 1;
      if (factor.empty()) throw fail("empty factor");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        t.coefficient *= Scalar::parse(factor);
        continue;
      }
      auto close = factor.find(']');
      if (factor.size() < 3 || factor[1] != '[' || close == std::string::npos) throw fail("bad factor '" + factor + "'");
      Partition shape = Partition::parse(factor.substr(1, close));
      std::string arg = factor.substr(close + 1);
      if ((factor[0] == 'Q' || factor[0] == 'P') && arg == "(F)") {
        Kind k = factor[0] == 'Q' ? Kind::Q : Kind::P;
        if (kind_seen && k != x.kind) throw fail("mixed Q and P factors");
        if (!shape.is_strict()) throw fail("Q and P need a strict index, got " + shape.to_string());
        x.kind = k;
        kind_seen = true;
        t.k = shape;
      } else if (factor[0] == 's' && arg == "(E-F)") {
        t.l = shape;
      } else {
        throw fail("bad factor '" + factor + "'");
      }
    }
    x.terms.push_back(std::move(t));
  }
  if (!kind_seen) x.kind = default_kind;
  x.normalize();
  return x;
}

// ---- class formulas -------------------------------------------------------------

ClassExpression class_of(const LocusProblem& p) {
  p.validate();
  const int q = p.q();
  const int n = p.n();
  ClassExpression x;
  x.kind = p.symmetry == Symmetry::symmetric ? ClassExpression::Kind::Q : ClassExpression::Kind::P;
  x.e = p.e;
  x.f = p.f;
  if (p.symmetry == Symmetry::symmetric) {
    for (const Partition& i : rectangle_partitions(q, n)) {
      x.terms.push_back({add(staircase(q), i), complement_conjugate(i, n, q), Scalar(1)});
    }
  } else if (p.r % 2 == 0) {
    for (const Partition& i : rectangle_partitions(q, n)) {
      x.terms.push_back({add(staircase(std::max(q - 1, 0)), i), complement_conjugate(i, n, q), Scalar(1)});
    }
  } else {
    for (const Partition& j : rectangle_partitions(q, n - 1)) {
      x.terms.push_back({add(staircase(q), j), complement_conjugate(j, n - 1, q), Scalar(1)});
    }
  }
  x.normalize();
  return x;
}

ClassExpression class_via_mnemonic(const LocusProblem& p) {
  p.validate();
  if (p.symmetry == Symmetry::skew && p.r % 2 == 1) throw std::invalid_argument("the mnemonic form covers skew loci with even r only");
  const int q = p.q();
  const int n = p.n();
  const int top = p.symmetry == Symmetry::symmetric ? p.e - p.r : p.e - p.r - 1;
  ClassExpression x;
  x.kind = p.symmetry == Symmetry::symmetric ? ClassExpression::Kind::Q : ClassExpression::Kind::P;
  x.e = p.e;
  x.f = p.f;
  for (const Partition& i : rectangle_partitions(q, n)) {
    std::vector<int> padded = i.padded(static_cast<std::size_t>(q));
    std::vector<int> k;
    for (int a = 0; a < q; ++a) k.push_back(top - a - padded[static_cast<std::size_t>(q - 1 - a)]);
    x.terms.push_back({Partition(k), conjugate(i), Scalar(1)});
  }
  x.normalize();
  return x;
}

Poly expression_to_poly(const ClassExpression& x, const ModelContext& model) {
  if (model.e() != x.e || model.f() != x.f) throw std::invalid_argument("model ranks do not match the expression");
  VirtualAlphabet F = model.bundle("F");
  VirtualAlphabet EmF = model.bundle("E-F");
  Poly out(model.context());
  for (const auto& t : x.terms) {
    Poly s = schur_s(t.l, EmF);
    if (s.is_zero()) continue;
    Poly k = x.kind == ClassExpression::Kind::Q ? schur_q(t.k, F) : schur_p(t.k, F);
    out += (k * s).scaled(t.coefficient);
  }
  return out;
}

Poly class_via_pushforward(const LocusProblem& p, const ModelContext& model, PushMethod method) {
  p.validate();
  if (model.mode() != ModelMode::surjection || model.e() != p.e || model.f() != p.f) {
    throw std::invalid_argument("class_via_pushforward needs the surjection model of the problem's ranks");
  }
  const ContextPtr& ctx = model.context();
  const int q = p.q();
  Alphabet quot = Alphabet::of_range(ctx, "f", 1, q);
  Alphabet sub = Alphabet::of_range(ctx, "f", q + 1, p.r);
  Alphabet k = model.base('K');
  Poly integrand(ctx, Scalar(1));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < k.size(); ++j) integrand *= k.root(j) + quot.root(i);    // K (x) Q
    for (int j = 0; j < sub.size(); ++j) integrand *= sub.root(j) + quot.root(i);  // R (x) Q
    const int first = p.symmetry == Symmetry::symmetric ? i : i + 1;             // S^2 Q or wedge^2 Q
    for (int j = first; j < q; ++j) integrand *= quot.root(i) + quot.root(j);
  }
  return grassmann_pushforward(integrand, model.base('F').slots(), q, method);
}

Scalar projective_degree(const std::vector<int>& e_twists, const std::vector<int>& f_twists, int r, Symmetry symmetry) {
  LocusProblem p{static_cast<int>(e_twists.size()), static_cast<int>(f_twists.size()), r, symmetry};
  p.validate();
  ModelContext model = ModelContext::independent(p.e, p.f, {{"h", 1, false}});
  const ContextPtr& ctx = model.context();
  Poly cls = expression_to_poly(class_of(p), model);
  Poly h = Poly::variable(ctx, VarId{"h", 1});
  std::map<VarId, Poly> images;
  images.emplace(VarId{"h", 1}, h);
  for (int i = 0; i < p.e; ++i) images.emplace(VarId{"e", i + 1}, h.scaled(Scalar(e_twists[static_cast<std::size_t>(i)])));
  for (int j = 0; j < p.f; ++j) images.emplace(VarId{"f", j + 1}, h.scaled(Scalar(f_twists[static_cast<std::size_t>(j)])));
  Poly specialized = apply_substitution(cls, images, ctx);
  return coefficient_of(specialized, VarId{"h", 1}, expected_codim(p)).constant_term();
}

// ---- flag identities ------------------------------------------------------------

IdentityReport verify_flag_identity(Symmetry symmetry, int f, int p, int n, PushMethod method) {
  if (p < 0 || n < 0 || 2 * p >= f) throw std::invalid_argument("the flag identity needs 0 <= p, 2p < f and n >= 0");
  const bool sym = symmetry == Symmetry::symmetric;
  const int e = f + n;
  ModelContext model = flag_model(f, n);

  // g = 2^{-p} s_{rho_{p-1}}(S^*) (resp. s_{rho_p}(S^*)).
  auto g = [&](const Alphabet& s_dual) {
    return sym ? schur_s(staircase(std::max(p - 1, 0)), s_dual).scaled(pow2(-p)) : schur_s(staircase(p), s_dual);
  };
  FlagIntegrand q_form = [&](const Alphabet& s, const VirtualAlphabet& r_minus_s) {
    Alphabet sd = s.dual();
    VirtualAlphabet rd = r_minus_s.dual();
    const int rows = f - p;
    Poly sum(model.context());
    for (const Partition& i : rectangle_partitions(rows, n)) {
      Poly sl = schur_s(complement_conjugate(i, n, rows), rd);
      if (sl.is_zero()) continue;
      Poly k = sym ? schur_q(add(staircase(rows), i), sd) : schur_p(add(staircase(rows - 1), i), sd);
      sum += k * sl;
    }
    return sum * g(sd);
  };
  FlagIntegrand skew_form = [&](const Alphabet& s, const VirtualAlphabet& r_minus_s) {
    Alphabet sd = s.dual();
    VirtualAlphabet rd = r_minus_s.dual();
    std::vector<int> parts;
    const int top = sym ? e - p : e - p - 1;
    for (int a = 0; a < f - p; ++a) parts.push_back(top - a);
    Partition t(parts);
    Poly sum(model.context());
    for (const Partition& j : partitions_inside(t)) {
      Poly sj = schur_s(conjugate(j), rd);
      if (sj.is_zero()) continue;
      sum += schur_skew(t, j, sd) * sj;
    }
    // The power of two absorbs the one in g.
    if (sym) return sum.scaled(pow2(f - 2 * p)) * schur_s(staircase(std::max(p - 1, 0)), sd);
    return sum * g(sd);
  };

  IdentityReport rep;
  rep.f = f;
  rep.p = p;
  rep.n = n;
  rep.symmetry = symmetry;
  rep.lhs_tower = flag_pushforward(model, p, q_form, FlagRoute::tower, method);
  rep.lhs_embedded = flag_pushforward(model, p, q_form, FlagRoute::embedded, method);
  rep.middle = flag_pushforward(model, p, skew_form, FlagRoute::tower, method);

  VirtualAlphabet fd = model.bundle("F*");
  VirtualAlphabet ed_fd = model.bundle("E*-F*");
  const int rows = f - 2 * p;
  Poly rhs(model.context());
  for (const Partition& l : rectangle_partitions(rows, n)) {
    Poly sl = schur_s(complement_conjugate(l, n, rows), ed_fd);
    if (sl.is_zero()) continue;
    Poly k = sym ? schur_q(add(staircase(rows), l), fd) : schur_p(add(staircase(rows - 1), l), fd);
    rhs += k * sl;
  }
  rep.rhs = rhs;
  rep.integral = rep.lhs_tower.has_integer_coefficients() && rep.lhs_embedded.has_integer_coefficients() &&
                 rep.middle.has_integer_coefficients() && rep.rhs.has_integer_coefficients();
  return rep;
}

}  // namespace symloci
