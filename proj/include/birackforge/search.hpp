#pragma once

#include <string>
#include <vector>

#include "birackforge/birack.hpp"
#include "birackforge/bweight.hpp"
#include "birackforge/qweight.hpp"

namespace birackforge {

/// Number of maps B tried for size n: (n^2)!.
double birack_candidate_count(int n);

/**
 * Every involutory birack on n <= 3 elements, found by testing each
 * permutation of the n^2 pairs in lexicographic order. With `dedup`, only
 * the first representative of each relabeling class is kept.
 */
std::vector<Birack> enumerate_biracks(int n, bool dedup = false, int workers = 1);

/// Relabeling-invariant key: the smallest (up, down) table over all conjugates.
std::vector<Element> birack_canonical_key(const Birack& b);

enum class BraidTemplate { Antidiag, Diag, Scalar };
std::string template_name(BraidTemplate t);
BraidTemplate parse_template(const std::string& name);

/// Matrix for one slot value: `var` empty means the constant 1.
Matrix<LaurentPoly> template_matrix(BraidTemplate t, int dim, const VarList& vars, const std::string& var);

struct BraidSearchSpec {
  BraidTemplate shape = BraidTemplate::Antidiag;
  int dim = 2;
  int max_vars = 8;        // variables drawn from x, y, z, w, v, u, s, t
  double budget = 5e6;     // refuse when the candidate count is larger
  int workers = 1;
};

/// Candidates are assignments slot -> {1, variable} taken up to renaming of
/// variables (restricted growth strings), one slot per (j, x, y).
double braid_candidate_count(const Birack& b, int strands, const BraidSearchSpec& spec);

std::vector<PolyBraidWeight> search_braid_weights(const Birack& b, int strands, const BraidSearchSpec& spec);

struct QuantumSearchSpec {
  int dim = 1;
  int modulus = 5;
  bool cocycle = false;    // fix N_x = U_x = delta = 1 (dim 1)
  double budget = 1e8;
  int workers = 1;
};

/// Raw size of the candidate space before pruning.
double quantum_candidate_count(const Birack& b, const QuantumSearchSpec& spec);

/**
 * All quantum weights over Z_p. Entries are assigned slot by slot (N_x and
 * U_x for each x, then each X_{x,y} row-major) and every axiom instance is
 * checked as soon as its last entry is set, in the order V, II, IV, IV',
 * III, I. delta is then read off axiom VI. Each result re-passes
 * verify_weight.
 */
std::vector<ModWeight> search_quantum_weights(const Birack& b, const QuantumSearchSpec& spec);

}  // namespace birackforge
