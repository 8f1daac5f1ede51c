#pragma once

#include <stdexcept>
#include <string>

namespace lpack
{
    // Malformed input or violated precondition. CLI exit code 2.
    class InputError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // An explicit search cap was exceeded. CLI exit code 3.
    class ResourceError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // The graph is outside the class a packing regime handles.
    class ClassViolation : public InputError
    {
        public:
            using InputError::InputError;
    };
}
