#ifndef NULLIDEAL_ERRORS_HPP
#define NULLIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nullideal {

// enumeration search space exceeds the configured budget; never a partial result
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// a modulus could not be fully factored within the trial-division/primality scheme
class FactorizationError : public std::runtime_error {
public:
    explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

// the minimal-polynomial degree ladder did not stabilize below the safety cap
class StabilizationCapError : public std::runtime_error {
public:
    explicit StabilizationCapError(const std::string& what) : std::runtime_error(what) {}
};

}

#endif
