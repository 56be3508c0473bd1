#ifndef ZDISK_ERRORS_HPP
#define ZDISK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zdisk {

/// Argument outside the mathematical domain of an operation (bad index, r outside [0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller combined otherwise valid objects incorrectly (grid mismatch, undersized grid).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zdisk

#endif
