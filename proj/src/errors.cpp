#include "matchmonoid/errors.hpp"

namespace matchmonoid {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::no_minimum: return "NoMinimum";
    case Errc::no_maximum: return "NoMaximum";
    case Errc::not_graded: return "NotGraded";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::not_comparable: return "NotComparable";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::not_atoms: return "NotAtoms";
    case Errc::empty_factor_list: return "EmptyFactorList";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::poset_mismatch: return "PosetMismatch";
    case Errc::not_in_or_k: return "NotInOrK";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_special: return "NotSpecial";
    case Errc::too_small: return "TooSmall";
    case Errc::too_large: return "TooLarge";
    case Errc::not_eulerian: return "NotEulerian";
    case Errc::not_in_image: return "NotInImage";
    case Errc::closure_budget_exceeded: return "ClosureBudgetExceeded";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::timeout: return "Timeout";
  }
  return "UnknownError";
}

}  // namespace matchmonoid
