#pragma once

#include <stdexcept>
#include <string>

namespace btsl {

// All library failures are reported through exceptions derived from Error.
// Numerical operations never silently truncate: if a result cannot be
// certified at the requested precision/resolution, the operation throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg)
        : Error("insufficient precision: " + msg) {}
};

struct ZeroWithinPrecision : Error {
    explicit ZeroWithinPrecision(const std::string& msg)
        : Error("zero within working precision: " + msg) {}
};

struct InsufficientResolution : Error {
    explicit InsufficientResolution(const std::string& msg)
        : Error("insufficient resolution: " + msg) {}
};

struct WrongSplittingType : Error {
    explicit WrongSplittingType(const std::string& msg)
        : Error("wrong splitting type: " + msg) {}
};

struct WindowRequired : Error {
    explicit WindowRequired(const std::string& msg)
        : Error("valuation window required: " + msg) {}
};

struct WindowExhausted : Error {
    explicit WindowExhausted(const std::string& msg)
        : Error("valuation window exhausted: " + msg) {}
};

struct RadiusExhausted : Error {
    explicit RadiusExhausted(const std::string& msg)
        : Error("ball radius exhausted: " + msg) {}
};

struct NotAHomomorphism : Error {
    explicit NotAHomomorphism(const std::string& msg)
        : Error("map is not a homomorphism: " + msg) {}
};

struct IncompatibleOrders : Error {
    explicit IncompatibleOrders(const std::string& msg)
        : Error("incompatible orders: " + msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg)
        : Error("config error: " + msg) {}
};

}  // namespace btsl
