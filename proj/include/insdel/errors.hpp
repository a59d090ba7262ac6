#pragma once

#include <stdexcept>

namespace insdel {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define INSDEL_DEFINE_ERROR(NAME) \
    struct NAME : Error {         \
        using Error::Error;       \
    };

// finite_field
INSDEL_DEFINE_ERROR(CompositeCharacteristic)
INSDEL_DEFINE_ERROR(ReducibleModulus)
INSDEL_DEFINE_ERROR(NotMonic)
INSDEL_DEFINE_ERROR(DivisionByZero)
INSDEL_DEFINE_ERROR(FieldMismatch)
INSDEL_DEFINE_ERROR(CharacteristicMismatch)

// sequences / channel
INSDEL_DEFINE_ERROR(PositionOutOfRange)
INSDEL_DEFINE_ERROR(BudgetTooLarge)

// codes
INSDEL_DEFINE_ERROR(InvalidCodeSpec)
INSDEL_DEFINE_ERROR(DuplicatePoint)

// criterion
INSDEL_DEFINE_ERROR(LengthMismatch)
INSDEL_DEFINE_ERROR(IndexOutOfRange)
INSDEL_DEFINE_ERROR(DegreeOverflow)
INSDEL_DEFINE_ERROR(DimensionTooLarge)

// constructions
INSDEL_DEFINE_ERROR(TooLargeToEnumerate)
INSDEL_DEFINE_ERROR(SearchExhausted)
INSDEL_DEFINE_ERROR(AttemptsExhausted)
INSDEL_DEFINE_ERROR(WorkCapExceeded)
INSDEL_DEFINE_ERROR(DegenerateDimension)

#undef INSDEL_DEFINE_ERROR

}  // namespace insdel
