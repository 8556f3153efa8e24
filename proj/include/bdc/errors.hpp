#pragma once

#include <stdexcept>
#include <string>

namespace bdc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad data handed in by a caller: malformed config, invalid BD data,
// violated preconditions. The CLI maps these to exit code 2.
struct InvalidInput : Error {
    using Error::Error;
};

struct NotBijective : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct NotIsometry : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct NotNilpotent : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct NotEndpoint : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct NotAperiodic : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct OutOfRange : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A required minor vanished. `index` is the 1-based size of the failing
// leading (or trailing) minor; `stage` names the computation.
struct NonGeneric : Error {
    NonGeneric(int index, std::string stage)
        : Error("non-generic input at " + stage + " (minor " + std::to_string(index) + ")"),
          index(index),
          stage(std::move(stage)) {}
    int index;
    std::string stage;
};

struct InexactDivision : Error {
    InexactDivision() : Error("polynomial division has nonzero remainder") {}
};

struct Inconsistent : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

}  // namespace bdc
