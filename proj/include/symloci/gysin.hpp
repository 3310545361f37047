#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "symloci/alphabet.hpp"
#include "symloci/partition.hpp"
#include "symloci/poly.hpp"

namespace symloci {

enum class PushMethod {
  /// Sum over q-subsets of sigma(P / prod_{i<=q<j}(a_i - a_j)) over a common
  /// denominator, then exact division.
  coset_sum,
  /// Same numerator, divided by the Vandermonde through the bialternant
  /// formula a_{l+d} / a_d = s_l.
  bialternant,
};

/// Gysin map of the Grassmann bundle of rank-q quotients of a bundle whose
/// roots occupy `slots`: the first q slots are the quotient roots, the rest
/// the subbundle roots. P must be symmetric in each of the two groups.
Poly grassmann_pushforward(const Poly& p, const std::vector<int>& slots, int q,
                           PushMethod method = PushMethod::coset_sum);

struct PushforwardCheck {
  Poly computed;   // pi_*[c_top(R (x) Q) P_I(Q)]
  Poly expected;   // d P_I(E)
  Scalar d;
  /// c with computed == c * P_I(E), when such a c exists.
  std::optional<Scalar> observed;
};

/// Push-forward of c_top(R (x) Q) P_I(Q) from the Grassmannian of q-quotients
/// of a rank-e bundle, against d P_I(E) with
/// d = binom([(e-k)/2], [(q-k)/2]) when (q-k)(e-q) is even, 0 otherwise.
PushforwardCheck verify_pushforward_coefficient(const Partition& shape, int e, int q,
                                                PushMethod method = PushMethod::coset_sum);

/// d of the coefficient formula.
Scalar pushforward_coefficient(int e, int q, int k);

enum class FlagRoute {
  /// G_n(C) -> G_{f-p}(F) -> X, two symmetrizers in turn.
  tower,
  /// G inside G_{f-p}(F) x G_{e-p}(E), cut out by c_top(S'^* (x) E/R').
  embedded,
};

/// Integrand as a function of the roots of S (rank f-p subbundle of F) and
/// the virtual alphabet R - S (R of rank e-p, containing S).
using FlagIntegrand = std::function<Poly(const Alphabet& s, const VirtualAlphabet& r_minus_s)>;

/// Surjection model with the extra block `u` (rank e) that the embedded route
/// needs for the roots of E on the second Grassmannian.
ModelContext flag_model(int f, int n);

/// Push-forward along the flag bundle of pairs S in R, S of rank f-p in F and
/// R of rank e-p in E, for a model built by flag_model (0 <= p <= f).
Poly flag_pushforward(const ModelContext& model, int p, const FlagIntegrand& integrand,
                      FlagRoute route = FlagRoute::tower, PushMethod method = PushMethod::coset_sum);

}  // namespace symloci
