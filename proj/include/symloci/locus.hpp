#pragma once

#include <string>
#include <vector>

#include "symloci/alphabet.hpp"
#include "symloci/gysin.hpp"
#include "symloci/partition.hpp"
#include "symloci/poly.hpp"

namespace symloci {

enum class Symmetry { symmetric, skew };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);

/// Ranks e >= f >= 1 of E and F and the rank bound 0 <= r <= f of a
/// symmetric or skew-symmetric morphism E^* -> F.
struct LocusProblem {
  int e = 0;
  int f = 0;
  int r = 0;
  Symmetry symmetry = Symmetry::symmetric;

  int n() const { return e - f; }
  int q() const { return f - r; }

  /// Throws std::invalid_argument with a one-line reason.
  void validate() const;
  std::string to_string() const;
};

/// Sum of coeff * Q_K(F) * s_L(E-F) (or P_K), terms sorted by K decreasing.
struct ClassExpression {
  enum class Kind { Q, P };
  struct Term {
    Partition k;
    Partition l;
    Scalar coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Kind kind = Kind::Q;
  int e = 0;
  int f = 0;
  std::vector<Term> terms;

  /// `Q[2](F) + Q[1](F)*s[1](E-F)`; factors equal to 1 are omitted, an empty
  /// product renders as `1`, the empty sum as `0`.
  std::string to_string() const;
  /// Inverse of to_string for the given ranks.
  /// `default_kind` applies when no Q or P factor occurs.
  static ClassExpression parse(std::string_view text, int e, int f, Kind default_kind = Kind::Q);

  void normalize();
  friend bool operator==(const ClassExpression&, const ClassExpression&) = default;
};

/// Closed-form class of the degeneracy locus D_r.
ClassExpression class_of(const LocusProblem& p);

/// The same class built from T = (e-r, ..., n+1) (skew: (e-r-1, ..., n)) by
/// subtracting each I written in increasing order. Not defined for skew odd r.
ClassExpression class_via_mnemonic(const LocusProblem& p);

/// c(r) = q(2n+q+1)/2, resp. q(2n+q-1)/2.
int expected_codim(const LocusProblem& p);

/// Evaluation in a model whose ranks match the expression.
Poly expression_to_poly(const ClassExpression& x, const ModelContext& model);

/// Push-forward from the Grassmannian of q-quotients of F of
/// c_top(K (x) Q) c_top(R (x) Q) c_top(S^2 Q) (skew: wedge^2 Q), in the
/// surjection model of the problem's ranks.
Poly class_via_pushforward(const LocusProblem& p, const ModelContext& model,
                           PushMethod method = PushMethod::coset_sum);

/// Degree of the locus for split bundles on projective space: roots replaced
/// by twist * h, coefficient of h^{c(r)}.
Scalar projective_degree(const std::vector<int>& e_twists, const std::vector<int>& f_twists, int r, Symmetry symmetry);

struct IdentityReport {
  int f = 0;
  int p = 0;
  int n = 0;
  Symmetry symmetry = Symmetry::symmetric;
  Poly lhs_tower;     // flag push-forward of the Q/P-form integrand
  Poly lhs_embedded;  // the same through the product of Grassmannians
  Poly middle;        // flag push-forward of the skew-Schur integrand
  Poly rhs;           // closed form in F^*, E^*
  bool integral = false;

  bool all_equal() const { return lhs_tower == lhs_embedded && lhs_tower == middle && middle == rhs; }
};

/// The members of the identity expressing the class of D_{2p}(phi^*) as a
/// flag-bundle push-forward, in the surjection model with e = f + n; requires
/// 2p < f. Symmetric case: integrand 2^{-p} sum_I Q_{rho_{f-p}+I}(S^*)
/// s_{CI~}(R^*-S^*) s_{rho_{p-1}}(S^*); skew: P_{rho_{f-p-1}+I} and s_{rho_p}.
IdentityReport verify_flag_identity(Symmetry symmetry, int f, int p, int n, PushMethod method = PushMethod::coset_sum);

}  // namespace symloci
