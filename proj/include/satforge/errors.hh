#pragma once

#include <stdexcept>
#include <string>

namespace satforge
{
    /// Thrown when an operation is called outside the hypotheses it is defined for
    /// (bad vertex index, parameter outside a construction's range, ...).
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Thrown when a constructed object fails the check it is supposed to satisfy by
    /// construction. Seeing one of these means an invariant upstream is broken.
    class VerificationError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}
