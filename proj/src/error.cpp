#include <eoram/error.hpp>

namespace eoram
{
    auto error_kind_name(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::InvalidArgument: return "InvalidArgument";
            case ErrorKind::LimitExceeded: return "LimitExceeded";
            case ErrorKind::CapExceeded: return "CapExceeded";
            case ErrorKind::InvalidBase: return "InvalidBase";
            case ErrorKind::NotLexicographic: return "NotLexicographic";
            case ErrorKind::InvalidInstance: return "InvalidInstance";
            case ErrorKind::EmptySample: return "EmptySample";
            case ErrorKind::NotDivisible: return "NotDivisible";
            case ErrorKind::Overflow: return "Overflow";
            case ErrorKind::DimensionMismatch: return "DimensionMismatch";
            case ErrorKind::NotAnEdge: return "NotAnEdge";
            case ErrorKind::NotMonochromaticWord: return "NotMonochromaticWord";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        _kind(kind)
    {
    }

    auto raise(ErrorKind kind, const std::string & message) -> void
    {
        throw Error(kind, message);
    }
}
