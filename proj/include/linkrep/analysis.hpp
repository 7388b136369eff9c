#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkrep/alexander.hpp"
#include "linkrep/diagram.hpp"
#include "linkrep/graphs.hpp"
#include "linkrep/modp.hpp"
#include "linkrep/reps.hpp"

namespace linkrep {

// IrreducibleRepFound is emitted only with an attached verified witness.
// HopfSumConsistent records that every search came back negative; it is
// evidence, not an isotopy claim.
enum class Conclusion { HopfSumConsistent, IrreducibleRepFound };

struct DihedralSummary {
  int base_arc = 0;
  bool finite = true;
  BigInt count = 0;
  BigInt abelian_count = 0;
  int free_rank = 0;
};

struct PrimeSearch {
  int p = 0;
  CertificateSearchResult result;
};

struct AnalyzeOptions {
  std::vector<int> primes = {3, 5, 7};
  long long budget = 1000000;  // search nodes per prime; 0 = unlimited
};

struct AnalysisReport {
  SimpleGraph linking_graph;
  GraphVerdict verdict;
  AlexanderReport alexander;
  DihedralSummary dihedral;
  std::optional<MeridianTracelessRep> coloring_rep;
  std::optional<MeridianTracelessRep> dihedral_rep;
  std::vector<PrimeSearch> certificates;
  Conclusion conclusion = Conclusion::HopfSumConsistent;
  std::string witness_kind;  // "coloring", "dihedral" or "modp" when found
};

// Evidence ladder in fixed order: linking-graph coloring, then exact binary
// dihedral solutions, then budgeted mod-p certificate search. Stops at the
// first verified witness.
AnalysisReport analyze(const LinkDiagram& d, const AnalyzeOptions& opt = {});

}  // namespace linkrep
