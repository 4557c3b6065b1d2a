#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eoram
{
    enum class ErrorKind
    {
        InvalidArgument,
        LimitExceeded,
        CapExceeded,
        InvalidBase,
        NotLexicographic,
        InvalidInstance,
        EmptySample,
        NotDivisible,
        Overflow,
        DimensionMismatch,
        NotAnEdge,
        NotMonochromaticWord
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind
            {
                return _kind;
            }
    };

    [[noreturn]] auto raise(ErrorKind kind, const std::string & message) -> void;
}
