#ifndef CYHG_ERRORS_HPP
#define CYHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyhg {

// Machine-readable error categories, surfaced by the CLI as exit codes
// and as the "error.category" field of the JSON output.
enum class ErrorCategory {
  usage,
  invalid_params,
  mixed_variables,
  outside_disk,
  resonant_exponents,
  step_failure,
  puncture_too_close,
  singular_prepotential,
  degenerate_pairing,
  model_region,
  frame_mismatch,
  not_nilpotent,
  unclassified_signature,
  indefinite_form,
  bad_discriminant,
  not_diagonal,
  budget_exceeded,
  metric_degenerate,
  internal,
};

const char* category_name(ErrorCategory c);

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(std::string(category_name(cat)) + ": " + msg), cat_(cat) {}
  ErrorCategory category() const { return cat_; }

private:
  ErrorCategory cat_;
};

#define CYHG_DEFINE_ERROR(Name, cat)                       \
  struct Name : Error {                                    \
    explicit Name(const std::string& m)                    \
        : Error(ErrorCategory::cat, m) {}                  \
  }

CYHG_DEFINE_ERROR(UsageError, usage);
CYHG_DEFINE_ERROR(InvalidParams, invalid_params);
CYHG_DEFINE_ERROR(MixedVariables, mixed_variables);
CYHG_DEFINE_ERROR(OutsideDisk, outside_disk);
CYHG_DEFINE_ERROR(ResonantExponents, resonant_exponents);
CYHG_DEFINE_ERROR(StepFailure, step_failure);
CYHG_DEFINE_ERROR(PunctureTooClose, puncture_too_close);
CYHG_DEFINE_ERROR(SingularPrepotential, singular_prepotential);
CYHG_DEFINE_ERROR(DegeneratePairing, degenerate_pairing);
CYHG_DEFINE_ERROR(ModelRegion, model_region);
CYHG_DEFINE_ERROR(FrameMismatch, frame_mismatch);
CYHG_DEFINE_ERROR(NotNilpotent, not_nilpotent);
CYHG_DEFINE_ERROR(UnclassifiedSignature, unclassified_signature);
CYHG_DEFINE_ERROR(IndefiniteForm, indefinite_form);
CYHG_DEFINE_ERROR(BadDiscriminant, bad_discriminant);
CYHG_DEFINE_ERROR(NotDiagonal, not_diagonal);
CYHG_DEFINE_ERROR(BudgetExceeded, budget_exceeded);
CYHG_DEFINE_ERROR(MetricDegenerate, metric_degenerate);

#undef CYHG_DEFINE_ERROR

}  // namespace cyhg

#endif
