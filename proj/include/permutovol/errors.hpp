#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permutovol {

// Base class for every error thrown by the library. The name is stable and
// machine-readable; what() is "Name: detail".
class Error : public std::runtime_error {
public:
    Error(std::string_view name, std::string_view detail)
        : std::runtime_error(std::string(name) + ": " + std::string(detail)),
          name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define PERMUTOVOL_ERROR(NAME)                                        \
    struct NAME final : Error {                                       \
        explicit NAME(std::string_view detail) : Error(#NAME, detail) {} \
    }

PERMUTOVOL_ERROR(ParseError);
PERMUTOVOL_ERROR(IncompatibleRadicand);
PERMUTOVOL_ERROR(MissingVariable);
PERMUTOVOL_ERROR(IndexOutOfRange);
PERMUTOVOL_ERROR(NotInHyperplane);
PERMUTOVOL_ERROR(NotDominant);
PERMUTOVOL_ERROR(InvalidPath);
PERMUTOVOL_ERROR(EmptyPath);
PERMUTOVOL_ERROR(BoundExceeded);
PERMUTOVOL_ERROR(InvalidIndices);
PERMUTOVOL_ERROR(DimensionMismatch);
PERMUTOVOL_ERROR(InvalidArgument);

#undef PERMUTOVOL_ERROR

}  // namespace permutovol
