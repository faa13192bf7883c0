#pragma once

#include <stdexcept>
#include <string>

namespace trpca {

// Base for every error raised by the library. Callers that only care about
// "something went wrong" catch this; tests match the concrete subclasses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRPCA_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

TRPCA_DEFINE_ERROR(ShapeMismatch);
TRPCA_DEFINE_ERROR(SymmetryViolation);
TRPCA_DEFINE_ERROR(NumericalFailure);
TRPCA_DEFINE_ERROR(RankOutOfRange);
TRPCA_DEFINE_ERROR(ZeroTensor);
TRPCA_DEFINE_ERROR(CountOutOfRange);
TRPCA_DEFINE_ERROR(InvalidArgument);

// io-formats
TRPCA_DEFINE_ERROR(IoError);
TRPCA_DEFINE_ERROR(BadMagic);
TRPCA_DEFINE_ERROR(Truncated);
TRPCA_DEFINE_ERROR(DimensionOverflow);
TRPCA_DEFINE_ERROR(UnsupportedFormat);
TRPCA_DEFINE_ERROR(MalformedHeader);
TRPCA_DEFINE_ERROR(ZeroReference);

#undef TRPCA_DEFINE_ERROR

}  // namespace trpca
