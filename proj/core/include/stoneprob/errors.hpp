#pragma once

#include <stdexcept>
#include <string>

namespace stoneprob {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STONEPROB_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    };

// Operands built over different spaces or different filtrations.
STONEPROB_DEFINE_ERROR(SpaceMismatch)
STONEPROB_DEFINE_ERROR(FiltrationMismatch)

// Arithmetic that has no value in the sup completion, e.g. inf - inf.
STONEPROB_DEFINE_ERROR(UndefinedArithmetic)

// An operation needed an everywhere finite element and got one with infinities.
STONEPROB_DEFINE_ERROR(NotFinite)

// An element with a -inf coordinate, which the sup completion excludes.
STONEPROB_DEFINE_ERROR(NotSupCompletion)

STONEPROB_DEFINE_ERROR(EmptyFamily)
STONEPROB_DEFINE_ERROR(NotMonotone)
STONEPROB_DEFINE_ERROR(NotIncreasing)

// Bad interval data: degenerate bounds, NaN endpoints.
STONEPROB_DEFINE_ERROR(InvalidInterval)

// Approximation asked for over an empty or unusable base region.
STONEPROB_DEFINE_ERROR(InvalidSupport)

STONEPROB_DEFINE_ERROR(ArityMismatch)

// A user callback threw or produced a non-finite value.
STONEPROB_DEFINE_ERROR(CallbackFailure)

// A continuous function without continuity data was asked for a grid spacing.
STONEPROB_DEFINE_ERROR(MissingModulus)

// Partition, weight, or refinement data that does not define what it claims.
STONEPROB_DEFINE_ERROR(InvalidArgument)
STONEPROB_DEFINE_ERROR(NotRefining)
STONEPROB_DEFINE_ERROR(NotAdapted)

// A level set failed the stage measurability check.
STONEPROB_DEFINE_ERROR(NotMeasurable)

// A projection sequence that fails to commute with the filtration stages.
STONEPROB_DEFINE_ERROR(CommutationFailure)

// A claimed affine minorant exceeds the function it is supposed to support.
STONEPROB_DEFINE_ERROR(MinorantViolation)

STONEPROB_DEFINE_ERROR(DomainViolation)
STONEPROB_DEFINE_ERROR(Unbounded)

// Hitting times need a {0,1}-valued increasing process.
STONEPROB_DEFINE_ERROR(NotIndicatorProcess)

STONEPROB_DEFINE_ERROR(InvalidConfig)

#undef STONEPROB_DEFINE_ERROR

} // namespace stoneprob
