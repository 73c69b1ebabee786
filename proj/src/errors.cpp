#include "cyhg/errors.hpp"

namespace cyhg {

const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::usage: return "UsageError";
    case ErrorCategory::invalid_params: return "InvalidParams";
    case ErrorCategory::mixed_variables: return "MixedVariables";
    case ErrorCategory::outside_disk: return "OutsideDisk";
    case ErrorCategory::resonant_exponents: return "ResonantExponents";
    case ErrorCategory::step_failure: return "StepFailure";
    case ErrorCategory::puncture_too_close: return "PunctureTooClose";
    case ErrorCategory::singular_prepotential: return "SingularPrepotential";
    case ErrorCategory::degenerate_pairing: return "DegeneratePairing";
    case ErrorCategory::model_region: return "ModelRegion";
    case ErrorCategory::frame_mismatch: return "FrameMismatch";
    case ErrorCategory::not_nilpotent: return "NotNilpotent";
    case ErrorCategory::unclassified_signature: return "UnclassifiedSignature";
    case ErrorCategory::indefinite_form: return "IndefiniteForm";
    case ErrorCategory::bad_discriminant: return "BadDiscriminant";
    case ErrorCategory::not_diagonal: return "NotDiagonal";
    case ErrorCategory::budget_exceeded: return "BudgetExceeded";
    case ErrorCategory::metric_degenerate: return "MetricDegenerate";
    case ErrorCategory::internal: return "InternalError";
  }
  return "InternalError";
}

}  // namespace cyhg
