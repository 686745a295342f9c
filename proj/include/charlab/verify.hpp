#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Realization invariants: Cartan integrality, isotropy of delta, root lengths,
// imaginary multiplicities, and the translation identity on the orbit of
// Lambda_0 over |coords| <= maxcoord.
std::vector<CheckResult> verify_realization(int rank, int maxcoord);

// Thin characters over |coords| <= maxcoord: finite, nonnegative integral,
// extremal coefficient one, identical across all minimal words; local Weyl
// characters of dominant weights are finite-Weyl invariant.
std::vector<CheckResult> verify_demazure(int rank, int maxcoord, int qtrunc);

// Slice/thin pairing matrix equals the identity up to q^{qtrunc-2} over the
// box |coords| <= box; kernel normalization; slice at zero is the unit.
std::vector<CheckResult> verify_biorthogonality(int rank, int box, int qtrunc,
                                                std::ostream* csv_out = nullptr);

// <global Weyl, shifted local Weyl> = delta over dominant weights in the box.
std::vector<CheckResult> verify_weyl_orthogonality(int rank, int box, int qtrunc);

// Sum of slices with (lambda|lambda)/2 <= emax equals the Heisenberg vacuum
// character up to q^{emax-1}.
std::vector<CheckResult> verify_vacuum_sum(int rank, int emax, int qtrunc);

// Partial-order axioms for the Macdonald order and the orbit-hull inclusion,
// exhaustively over |coords| <= box.
std::vector<CheckResult> verify_hull_order(int rank, int box);

// p/h change of generators round-trips exactly for s <= smax, ranks <= lmax.
std::vector<CheckResult> verify_pseries(int lmax, int smax);

// Pinned dimension table for local Weyl modules of the special current algebra.
std::vector<CheckResult> verify_dimension_table();

bool all_pass(const std::vector<CheckResult>& rs);

}  // namespace charlab
