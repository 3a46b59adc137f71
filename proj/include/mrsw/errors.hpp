#pragma once

#include <stdexcept>
#include <string>

namespace mrsw {

struct MrswError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigInvalid : MrswError {
    using MrswError::MrswError;
};
struct DepthTooSmall : MrswError {
    using MrswError::MrswError;
};
struct UnknownDescriptor : MrswError {
    using MrswError::MrswError;
};
struct EmptyInput : MrswError {
    using MrswError::MrswError;
};
struct TooShort : MrswError {
    using MrswError::MrswError;
};
struct NonFinite : MrswError {
    using MrswError::MrswError;
};
struct NonFiniteState : MrswError {
    using MrswError::MrswError;
};
struct DegenerateEquilibrium : MrswError {
    using MrswError::MrswError;
};
struct ShapeMismatch : MrswError {
    using MrswError::MrswError;
};
struct WindowNotStarted : MrswError {
    using MrswError::MrswError;
};
struct NonPositive : MrswError {
    using MrswError::MrswError;
};
struct IoError : MrswError {
    using MrswError::MrswError;
};

}  // namespace mrsw
