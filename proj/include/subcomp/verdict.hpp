#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "subcomp/vertex_set.hpp"

namespace subcomp {

enum class Answer {
  Yes,
  No,
  NotFound,  // a single step of a multi-step solver came up empty
};

/// Which algorithm (or step) produced a verdict.
enum class Provenance {
  Constructive,
  Exhaustive,
  KernelTrivial,
  Step1,
  Step2,
  Step3,
  Step4,
  Oracle,
};

/**
 * Solver outcome. A YES always carries a witness S that has been re-checked
 * against the target predicate on G ⊕ S; NO and NOT-FOUND carry none.
 */
struct Verdict {
  Answer answer = Answer::No;
  std::optional<VertexSet> witness;
  bool verified = false;
  Provenance provenance = Provenance::Oracle;

  static auto yes(VertexSet witness, Provenance from) -> Verdict { return {Answer::Yes, std::move(witness), true, from}; }
  static auto no(Provenance from) -> Verdict { return {Answer::No, std::nullopt, false, from}; }
  static auto not_found(Provenance from) -> Verdict { return {Answer::NotFound, std::nullopt, false, from}; }

  auto is_yes() const -> bool { return answer == Answer::Yes; }
};

auto to_string(Answer a) -> std::string_view;
auto to_string(Provenance p) -> std::string_view;

}  // namespace subcomp
