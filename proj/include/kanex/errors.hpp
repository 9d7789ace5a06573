#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kanex {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error
{
  public:
    explicit Error(const std::string & what, std::vector<std::string> witness = {}) :
        std::runtime_error(what), witness_(std::move(witness))
    {
    }

    /// Names of the objects or morphisms exhibiting the failure, if any.
    auto witness() const -> const std::vector<std::string> & { return witness_; }

  private:
    std::vector<std::string> witness_;
};

#define KANEX_DEFINE_ERROR(Name) \
    class Name : public Error \
    { \
      public: \
        using Error::Error; \
    }

KANEX_DEFINE_ERROR(MissingComposite);
KANEX_DEFINE_ERROR(LawViolation);
KANEX_DEFINE_ERROR(FunctorialityViolation);
KANEX_DEFINE_ERROR(NaturalitySquareViolation);
KANEX_DEFINE_ERROR(SearchSpaceExceeded);
KANEX_DEFINE_ERROR(MissingCommaLimit);
KANEX_DEFINE_ERROR(NoKanExtension);
KANEX_DEFINE_ERROR(NotFaithful);
KANEX_DEFINE_ERROR(NotConcrete);
KANEX_DEFINE_ERROR(NotFAlgebraic);
KANEX_DEFINE_ERROR(PreconditionUnmet);
KANEX_DEFINE_ERROR(UnknownName);

#undef KANEX_DEFINE_ERROR

}
