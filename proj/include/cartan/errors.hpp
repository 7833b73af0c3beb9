#ifndef CARTAN_ERRORS_HPP
#define CARTAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cartan {

/// A requested object exceeds the configured size cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects over different prime fields were mixed.
class field_mismatch : public std::invalid_argument {
public:
    explicit field_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Structure-constant data failed an axiom check (commutativity,
/// associativity, Jacobi, Leibniz, freeness, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented operation precondition does not hold for the given input.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cartan

#endif
