#pragma once

#include <stdexcept>
#include <string>

namespace kac {

enum class ErrorKind { Validation, Numeric };

class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorKind kind, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)), kind_(kind) {}
    const std::string& code() const { return code_; }
    ErrorKind kind() const { return kind_; }

private:
    std::string code_;
    ErrorKind kind_;
};

#define KAC_DEFINE_ERROR(Name, Kind)                                        \
    struct Name : Error {                                                   \
        explicit Name(const std::string& msg) : Error(#Name, Kind, msg) {}  \
    };

KAC_DEFINE_ERROR(SingularInput, ErrorKind::Numeric)
KAC_DEFINE_ERROR(Inconsistent, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NotSemisimple, ErrorKind::Validation)
KAC_DEFINE_ERROR(NotProjection, ErrorKind::Validation)
KAC_DEFINE_ERROR(ParentMismatch, ErrorKind::Validation)
KAC_DEFINE_ERROR(NoIntegral, ErrorKind::Validation)
KAC_DEFINE_ERROR(CompatibilityFailure, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NotAGroup, ErrorKind::Validation)
KAC_DEFINE_ERROR(NotCounital, ErrorKind::Validation)
KAC_DEFINE_ERROR(NotAnAction, ErrorKind::Validation)
KAC_DEFINE_ERROR(StructureFailure, ErrorKind::Validation)
KAC_DEFINE_ERROR(NotEquivalent, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NotInImage, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NotSaturated, ErrorKind::Validation)
KAC_DEFINE_ERROR(CovarianceFailure, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NotPartition, ErrorKind::Validation)
KAC_DEFINE_ERROR(LevelTooLarge, ErrorKind::Validation)
KAC_DEFINE_ERROR(RankObstruction, ErrorKind::Validation)
KAC_DEFINE_ERROR(GapTooLarge, ErrorKind::Numeric)
KAC_DEFINE_ERROR(WitnessQualityTooLow, ErrorKind::Numeric)
KAC_DEFINE_ERROR(NoConvergence, ErrorKind::Numeric)

#undef KAC_DEFINE_ERROR

}  // namespace kac
