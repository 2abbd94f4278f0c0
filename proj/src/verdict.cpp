#include "subcomp/verdict.hpp"

namespace subcomp {

auto to_string(Answer a) -> std::string_view {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::NotFound: return "NOT-FOUND";
  }
  return "?";
}

auto to_string(Provenance p) -> std::string_view {
  switch (p) {
    case Provenance::Constructive: return "constructive";
    case Provenance::Exhaustive: return "exhaustive";
    case Provenance::KernelTrivial: return "kernel-trivial";
    case Provenance::Step1: return "step1";
    case Provenance::Step2: return "step2";
    case Provenance::Step3: return "step3";
    case Provenance::Step4: return "step4";
    case Provenance::Oracle: return "oracle";
  }
  return "?";
}

}  // namespace subcomp
