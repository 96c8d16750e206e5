#ifndef QLC_ERRORS_HPP
#define QLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlc {

// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QLC_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

QLC_DEFINE_ERROR(DegenerateParameters);
QLC_DEFINE_ERROR(SingularLine);
QLC_DEFINE_ERROR(NoOval);
QLC_DEFINE_ERROR(QuadratureFailure);
QLC_DEFINE_ERROR(LostBracket);
QLC_DEFINE_ERROR(LogDomain);
QLC_DEFINE_ERROR(DivisionByZero);
QLC_DEFINE_ERROR(DegenerateMap);
QLC_DEFINE_ERROR(EscapedAnnulus);
QLC_DEFINE_ERROR(SingularLineHit);
QLC_DEFINE_ERROR(StepFailure);
QLC_DEFINE_ERROR(NoSignChange);

#undef QLC_DEFINE_ERROR

} // namespace qlc

#endif
