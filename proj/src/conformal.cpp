#include "gaussconf/conformal.hpp"

namespace gaussconf {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::kConformal: return "conformal";
        case Verdict::kNotConformal: return "not_conformal";
        case Verdict::kDegenerate: return "degenerate";
    }
    return "unknown";
}

const char* to_string(FrameContent c) {
    switch (c) {
        case FrameContent::kImaginaryOctonions: return "imaginary_octonions";
        case FrameContent::kVectors: return "vectors";
        case FrameContent::kBivectors: return "bivectors";
        case FrameContent::kMixed: return "mixed";
    }
    return "unknown";
}

const char* to_string(FrameConstancySummary::Class c) {
    switch (c) {
        case FrameConstancySummary::Class::kNonConstant: return "non_constant";
        case FrameConstancySummary::Class::kConstant: return "constant";
        case FrameConstancySummary::Class::kStandardConstant: return "standard_constant";
    }
    return "unknown";
}

}  // namespace gaussconf
