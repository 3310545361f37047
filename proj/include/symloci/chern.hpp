#pragma once

#include "symloci/alphabet.hpp"
#include "symloci/partition.hpp"
#include "symloci/poly.hpp"

namespace symloci {

enum class Kernel { vee, wedge };

/// c_top(E (x) F) = sum over I in (f)^e of s_I(E) s_{CI~}(F).
Poly ctop_tensor(const Alphabet& e, const Alphabet& f);

/// c_top(S^2 E) = Q_{rho_e}(E).
Poly ctop_sym2(const Alphabet& e);
/// c_top(wedge^2 E) = P_{rho_{e-1}}(E).
Poly ctop_wedge2(const Alphabet& e);

/// Top Chern class of E v F (resp. E ^ F) in the Q/P form:
/// sum over I in (n)^f of Q_{rho_f + I}(F) s_{CI~}(E-F)
/// (resp. P_{rho_{f-1} + I}(F)). Surjection model only.
Poly ctop_vee(const ModelContext& model);
Poly ctop_wedge(const ModelContext& model);

/// The same classes in the skew-Schur form
/// 2^f sum over I in T of s_{T/I}(F) s_{I~}(E-F), T = (e, ..., n+1)
/// (resp. T = (e-1, ..., n) without the power of two).
Poly ctop_vee_skew(const ModelContext& model);
Poly ctop_wedge_skew(const ModelContext& model);

/// Product of linear factors prod_{i<=j}(x_i + x_j) prod_{i,j}(x_i + y_j)
/// (i<j for wedge), x = roots of F, y = roots of K.
Poly ctop_product_oracle(const ModelContext& model, Kernel kind);

/// prod over all pairs of roots of (a + b).
Poly product_of_sums(const Alphabet& a, const Alphabet& b);

}  // namespace symloci
