#pragma once

#include <stdexcept>
#include <string>

namespace deligne {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DELIGNE_DEFINE_ERROR(Name)                  \
  struct Name : Error {                             \
    Name() : Error(#Name) {}                        \
    explicit Name(const std::string& detail)        \
        : Error(std::string(#Name) + ": " + detail) {} \
  }

DELIGNE_DEFINE_ERROR(ZeroNormal);
DELIGNE_DEFINE_ERROR(DuplicateHyperplane);
DELIGNE_DEFINE_ERROR(DimensionMismatch);
DELIGNE_DEFINE_ERROR(NotSimplicial);
DELIGNE_DEFINE_ERROR(NotEssential);
DELIGNE_DEFINE_ERROR(InconsistentLabeling);
DELIGNE_DEFINE_ERROR(EndpointMismatch);
DELIGNE_DEFINE_ERROR(NoClosure);
DELIGNE_DEFINE_ERROR(NoJoin);
DELIGNE_DEFINE_ERROR(NonUniqueHead);
DELIGNE_DEFINE_ERROR(AtomClassSplit);
DELIGNE_DEFINE_ERROR(OverlappingCones);
DELIGNE_DEFINE_ERROR(ConeNotChamber);
DELIGNE_DEFINE_ERROR(RankDeficient);
DELIGNE_DEFINE_ERROR(BudgetExceeded);

#undef DELIGNE_DEFINE_ERROR

}  // namespace deligne
