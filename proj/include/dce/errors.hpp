// errors.hpp — exception types used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace dce {

/// Invalid argument or parameter outside its documented domain.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric procedure failed to reach its tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// A maximization bracket did not contain an interior maximum.
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

/// Sampled grid could not be classified (plateau ties or similar degeneracy).
class degenerate_grid_error : public std::runtime_error {
public:
    explicit degenerate_grid_error(const std::string& what) : std::runtime_error(what) {}
};

/// File or stream I/O failure.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dce
