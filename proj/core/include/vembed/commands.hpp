#pragma once

#include <string>

#include "vembed/automorphisms.hpp"
#include "vembed/group_analysis.hpp"
#include "vembed/report.hpp"
#include "vembed/wreath.hpp"

namespace vembed {

struct CommandOptions {
  long long window = 64;
  std::size_t order_cap = 20000;
  std::size_t max_h = 8;
  std::size_t max_g = 2048;
  std::size_t count = 1;
  ScanOptions scan;
  AutOptions aut;
  Prop5Options prop5;
};

/// Full pipeline: witness group, enumeration, conjugation identities,
/// stand-in certificates, Hall placement, chain with defect accounting.
Report cmd_verify_main(const std::string& group_spec, const std::string& words,
                       const CommandOptions& opts = {});

/// Finite nilpotent embedding construction with per-prime witnesses.
Report cmd_prop5(const std::string& group_spec, const std::string& words,
                 const CommandOptions& opts = {});

/// Normal-embeddability containment V(Aut H) >= Inn H.
Report cmd_criterion(const std::string& group_spec, const std::string& words,
                     const CommandOptions& opts = {});

/// Emits groups G outside the product variety (laws after words) together
/// with H = V(G) and its verification.
Report cmd_prop6_examples(const std::string& laws, const std::string& words,
                          const CommandOptions& opts = {});

/// Flags complete solvable groups (no finite subnormal embedding into a
/// derived subgroup exists for them).
Report cmd_flag_heineken_lennox(const std::string& group_spec,
                                const CommandOptions& opts = {});

/// Bounded search for finite embeddings per catalog group, tabulated against
/// the nilpotency and completeness predictions.
Report cmd_classify(const std::string& words, const CommandOptions& opts = {});

}  // namespace vembed
