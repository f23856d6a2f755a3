#include "nhr/error.hpp"

namespace nhr {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::InternalExhaustion: return "InternalExhaustion";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::BankExhausted: return "BankExhausted";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::StepFailed: return "StepFailed";
    case ErrorKind::LadderStuck: return "LadderStuck";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::Defect: return "Defect";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace nhr
