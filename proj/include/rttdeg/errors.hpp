#ifndef RTTDEG_ERRORS_HPP
#define RTTDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rttdeg {

#define RTTDEG_DEFINE_ERROR(Name)                                       \
  struct Name : std::runtime_error {                                    \
    explicit Name(const std::string& what = #Name)                      \
        : std::runtime_error(what) {}                                   \
  };

RTTDEG_DEFINE_ERROR(DivisionByZero)
RTTDEG_DEFINE_ERROR(ZeroInput)
RTTDEG_DEFINE_ERROR(IncompatibleVariables)
RTTDEG_DEFINE_ERROR(UnknownAlgebraTag)
RTTDEG_DEFINE_ERROR(InvalidDimension)
RTTDEG_DEFINE_ERROR(SubstitutionOutsideDomain)
RTTDEG_DEFINE_ERROR(TruncationInsufficient)
RTTDEG_DEFINE_ERROR(SymplecticOddN)
RTTDEG_DEFINE_ERROR(IndexOutOfRange)
RTTDEG_DEFINE_ERROR(NonintegralDivision)
RTTDEG_DEFINE_ERROR(NotLieElement)
RTTDEG_DEFINE_ERROR(ArityTooSmall)
RTTDEG_DEFINE_ERROR(PoleAtQ1)
RTTDEG_DEFINE_ERROR(SelfCertificationFailed)
RTTDEG_DEFINE_ERROR(RankDeficient)
RTTDEG_DEFINE_ERROR(NotInSpanFatal)
RTTDEG_DEFINE_ERROR(InvalidConfig)
RTTDEG_DEFINE_ERROR(UnknownSuite)
RTTDEG_DEFINE_ERROR(IoError)

#undef RTTDEG_DEFINE_ERROR

}  // namespace rttdeg

#endif
