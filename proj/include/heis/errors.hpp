#pragma once

#include <stdexcept>
#include <string>

namespace heis {

/// Base class for all domain errors. what() starts with the error name so the
/// CLI can surface it verbatim.
class Error : public std::runtime_error {
public:
    Error(const std::string& name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define HEIS_DEFINE_ERROR(NAME)                                           \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& detail = "") : Error(#NAME, detail) {} \
    }

HEIS_DEFINE_ERROR(NotHorizontal);
HEIS_DEFINE_ERROR(AtPole);
HEIS_DEFINE_ERROR(MixedType);
HEIS_DEFINE_ERROR(SingularPoint);
HEIS_DEFINE_ERROR(DegenerateBasis);
HEIS_DEFINE_ERROR(DomainExceeded);
HEIS_DEFINE_ERROR(NearBlowup);
HEIS_DEFINE_ERROR(AxisContact);
HEIS_DEFINE_ERROR(CharacteristicPoint);
HEIS_DEFINE_ERROR(NotImmersed);
HEIS_DEFINE_ERROR(BadK);
HEIS_DEFINE_ERROR(Cylinder);
HEIS_DEFINE_ERROR(VanishingV);
HEIS_DEFINE_ERROR(UnknownName);

#undef HEIS_DEFINE_ERROR

}  // namespace heis
