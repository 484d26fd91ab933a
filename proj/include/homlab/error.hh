#ifndef HOMLAB_GUARD_HOMLAB_ERROR_HH
#define HOMLAB_GUARD_HOMLAB_ERROR_HH 1

#include <stdexcept>
#include <string>

namespace homlab
{
    /// Malformed or inconsistent input: bad file syntax, an improper coloring, an invalid
    /// decomposition, and so on.
    class InvalidInput : public std::runtime_error
    {
        public:
            explicit InvalidInput(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// A file could not be opened, read or written.
    class IoError : public std::runtime_error
    {
        public:
            explicit IoError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// A configured resource limit (assignments, subproblems, pivots, search nodes) was hit.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            explicit BudgetExceeded(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };
}

#endif
