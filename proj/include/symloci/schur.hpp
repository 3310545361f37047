#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "symloci/alphabet.hpp"
#include "symloci/partition.hpp"
#include "symloci/poly.hpp"

namespace symloci {

/// s_I(V) = det[s_{i_p - p + q}(V)].
Poly schur_s(const Partition& shape, const VirtualAlphabet& v);

/// Skew Schur polynomial det[s_{l_p - m_q - p + q}(V)]; rejects mu not inside
/// lambda.
Poly schur_skew(const Partition& lambda, const Partition& mu, const VirtualAlphabet& v);

/// Schur Q-polynomial of a strict partition, by the Pfaffian-type recursion on
/// the number of parts starting from the series Q_i. Memoized per context.
Poly schur_q(const Partition& shape, const VirtualAlphabet& a);

/// Q_I / 2^{l(I)}; throws std::logic_error if the division is not integral.
Poly schur_p(const Partition& shape, const VirtualAlphabet& a);

/// Determinant of a square matrix of polynomials (Laplace expansion over
/// column subsets).
Poly determinant(const std::vector<std::vector<Poly>>& m);

/// Directory for persisting Q-polynomial tables between runs; empty disables.
/// Entries are keyed by alphabet size and partition and carry a format stamp.
void set_q_cache_dir(std::filesystem::path dir);
const std::filesystem::path& q_cache_dir();

struct SchurExpansion {
  std::map<Partition, Scalar> coefficients;

  /// One `coeff * s[I](label)` line per term, decreasing (|I|, then lex).
  std::string to_string(const std::string& label) const;
};

struct SchurPairExpansion {
  std::map<std::pair<Partition, Partition>, Scalar> coefficients;

  /// Lines `coeff * s[I](F) * s[J](E)`, decreasing (|I|+|J|, then lex).
  std::string to_string(const std::string& first_label = "F", const std::string& second_label = "E") const;
};

struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Expansion of a polynomial symmetric in one block into Schur polynomials of
/// that block. The polynomial may only involve variables of the block.
SchurExpansion expand_schur_basis(const Poly& p, std::string_view block);

/// Expansion into products s_I(first) * s_J(second) of two independent blocks.
SchurPairExpansion expand_schur_pair(const Poly& p, std::string_view first, std::string_view second);

/// True when p is invariant under every permutation of each listed slot group
/// separately (orbit test, linear in the number of terms).
bool is_symmetric_in_groups(const Poly& p, const std::vector<std::vector<int>>& groups);

}  // namespace symloci
