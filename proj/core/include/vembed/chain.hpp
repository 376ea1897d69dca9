#pragma once

#include <string>
#include <vector>

#include "vembed/finite_group.hpp"
#include "vembed/lazy_group.hpp"
#include "vembed/lazy_wreath.hpp"
#include "vembed/word.hpp"

namespace vembed {

enum class LinkStatus { exact, window_verified, paper_asserted };

std::string link_status_name(LinkStatus s);

struct ChainLink {
  std::string subgroup;
  std::string overgroup;
  std::string relation;  // "normal" or "subnormal-defect-2"
  int defect;
  LinkStatus status;
  long long window = -1;
  std::string evidence;
};

/// Assembled verification record of the embedding pipeline
/// H -> G1 -> M' -> K -> G2 at a finite checking window.
struct ChainReport {
  std::string witness_description;
  std::vector<std::pair<std::string, bool>> witness_checks;

  struct StepD {
    std::string generator;
    StepDVerdict verdict;
  };
  std::vector<StepD> step_d;

  /// Step e evidence: either the two-generator beta construction (when the
  /// word set is the commutator word) or a second conjugation pass over the
  /// commutator-word witness.
  bool step_e_used_beta = false;
  struct StepE {
    std::string generator;
    bool exact;
    bool ok;
  };
  std::vector<StepE> step_e;

  bool hall_truncated = false;
  long long hall_placed = 0;
  struct Hall {
    int s, t;
    bool ok;
  };
  std::vector<Hall> hall;
  bool binary_uniqueness_ok = false;

  std::vector<ChainLink> links;
  int total_defect_bound = 0;

  bool all_ok() const;
};

ChainReport build_embedding_chain(const FiniteGroup& h, const WordSet& v,
                                  long long window);

}  // namespace vembed
