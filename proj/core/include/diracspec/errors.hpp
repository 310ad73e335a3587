#pragma once

#include <stdexcept>
#include <string>

namespace diracspec {

// |cos eta| fell below the admissibility threshold: the boundary condition
// degenerates towards the zigzag case and the H^1 theory no longer applies.
class ZigzagError : public std::domain_error {
public:
    explicit ZigzagError(const std::string& what) : std::domain_error(what) {}
};

// Iterative or quadrature procedure failed to meet its stopping criterion.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diracspec
