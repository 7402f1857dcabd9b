#pragma once

#include <stdexcept>
#include <string>

namespace palm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileNotFound : Error {
    using Error::Error;
};
struct UnsupportedFormat : Error {
    using Error::Error;
};
struct CorruptImage : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

struct WrongChannelCount : Error {
    using Error::Error;
};
struct EmptyImage : Error {
    using Error::Error;
};
struct ZeroPerimeter : Error {
    using Error::Error;
};
struct CenterOutOfBounds : Error {
    using Error::Error;
};
struct MissingGeo : Error {
    using Error::Error;
};

// Invalid configuration values or an unsatisfiable synthetic-scene spec.
struct ConfigError : Error {
    using Error::Error;
};
struct SpecInfeasible : Error {
    using Error::Error;
};

}  // namespace palm
